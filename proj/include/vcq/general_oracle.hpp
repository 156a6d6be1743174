#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcq/cut.hpp"
#include "vcq/graph.hpp"

namespace vcq {

struct GeneralBuildOptions {
    // Worker threads for the all-pairs phase; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

// Cut-list oracle for arbitrary graphs: an n x n matrix of (min(kappa, k+1), cut id)
// over a deduplicated list of O(kn) cuts. Flows run on the Nagamochi-Ibaraki
// certificate; each non-adjacent pair stores the boundary of the smaller of
// R_st and R_ts.
class GeneralOracle {
public:
    static GeneralOracle build(const Graph& g, std::size_t k, const GeneralBuildOptions& options = {});

    // Reassembles a stored oracle. `kappa` and `cut_ids` are row-major n x n.
    static GeneralOracle from_parts(std::size_t k, std::size_t n, std::vector<Cut> cuts,
                                    std::vector<std::uint8_t> kappa, std::vector<CutId> cut_ids);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }

    // min(kappa(s,t), k+1). Throws std::invalid_argument for s == t.
    std::size_t capped_kappa(NodeId s, NodeId t) const;
    bool query_con(NodeId s, NodeId t) const { return capped_kappa(s, t) == k_ + 1; }
    std::optional<CutId> query_cut(NodeId s, NodeId t) const;

    std::span<const Cut> cuts() const noexcept { return cuts_; }
    const Cut& cut(CutId id) const { return cuts_.at(id); }
    std::span<const std::uint8_t> kappa_matrix() const noexcept { return kappa_; }
    std::span<const CutId> cut_matrix() const noexcept { return cut_ids_; }

    // Distinct stored cuts containing an edge (adjacent pairs) / only vertices.
    std::size_t adjacent_cut_count() const noexcept;
    std::size_t nonadjacent_cut_count() const noexcept;
    std::size_t space_entries() const noexcept;

    friend bool operator==(const GeneralOracle&, const GeneralOracle&) = default;

private:
    std::size_t index(NodeId s, NodeId t) const;

    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<Cut> cuts_;
    std::vector<std::uint8_t> kappa_;
    std::vector<CutId> cut_ids_;
};

}  // namespace vcq
