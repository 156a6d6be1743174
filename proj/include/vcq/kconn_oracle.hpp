#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcq/cut.hpp"
#include "vcq/flow.hpp"
#include "vcq/graph.hpp"
#include "vcq/laminar.hpp"
#include "vcq/pair_map.hpp"

namespace vcq {

struct KConnBuildOptions {
    // All-pairs check that the graph is k-connected. Unset: on for n <= 300.
    std::optional<bool> verify;
    // Worker threads for the flow phases; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct CriticalEdge {
    Edge edge;
    CutId cut = kNoCut;

    friend bool operator==(const CriticalEdge&, const CriticalEdge&) = default;
};

// Per-node record for nodes outside K. forest == kNoForest means the node owns
// no small tight set (it is not in S).
struct SourceRecord {
    static constexpr std::uint32_t kNoForest = 0xFFFFFFFFu;

    std::uint32_t forest = kNoForest;
    TreeNodeId node = kNoTreeNode;
    CutId cut = kNoCut;

    bool in_s() const noexcept { return forest != kNoForest; }
    friend bool operator==(const SourceRecord&, const SourceRecord&) = default;
};

// Cut-list oracle for k-connected graphs. Stores O(n) cuts:
//   - the incident edges of each degree-k node (set K);
//   - one minimum mixed cut per critical edge with both ends outside K (a forest);
//   - the boundary of R_s, the minimal small tight set containing s, for s in S.
// The R_s sets are split into at most 2k+1 laminar families, each held as a
// LaminarForest. con/cut queries are O(1).
class KConnOracle {
public:
    static KConnOracle build(const Graph& g, std::size_t k, const KConnBuildOptions& options = {});

    // Reassembles a stored oracle; rebuilds the hash tables and checks shapes.
    static KConnOracle from_parts(std::size_t k, std::size_t n, std::vector<Cut> cuts, std::vector<CutId> incident,
                                  std::vector<CriticalEdge> critical, std::vector<SourceRecord> records,
                                  std::vector<LaminarForest> forests);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }

    // kappa(s,t) >= k+1. Throws std::invalid_argument for s == t, std::out_of_range for bad ids.
    bool query_con(NodeId s, NodeId t) const { return !query_cut(s, t).has_value(); }
    // Id of a stored st-cut of size <= k, or nullopt when kappa(s,t) >= k+1.
    std::optional<CutId> query_cut(NodeId s, NodeId t) const;

    std::span<const Cut> cuts() const noexcept { return cuts_; }
    const Cut& cut(CutId id) const { return cuts_.at(id); }

    bool in_k(NodeId v) const { return incident_.at(v) != kNoCut; }
    std::span<const CutId> incident_cuts() const noexcept { return incident_; }
    std::span<const CriticalEdge> critical_edges() const noexcept { return critical_; }
    std::span<const SourceRecord> records() const noexcept { return records_; }
    std::span<const LaminarForest> forests() const noexcept { return forests_; }

    std::size_t k_count() const noexcept;
    std::size_t s_count() const noexcept;

    // Stored integers: cut members, per-node tables, critical table, forests.
    std::size_t space_entries() const noexcept;

    friend bool operator==(const KConnOracle& a, const KConnOracle& b);

private:
    void index_tables();
    std::optional<CutId> via_source(NodeId s, NodeId t) const;

    std::size_t k_ = 0;
    std::size_t n_ = 0;
    std::vector<Cut> cuts_;
    std::vector<CutId> incident_;
    std::vector<CriticalEdge> critical_;
    std::vector<SourceRecord> records_;
    std::vector<LaminarForest> forests_;

    PairMap critical_index_;
    PairMap boundary_;
};

// Strategy for compute_min_small_tight_set.
enum class TightSearch {
    // Stop at the first target giving a small R_st; scans at most floor((n+k)/2)+1 targets.
    kEarlyExit,
    // Minimum (by size, then lexicographic) small R_st over every non-adjacent target.
    kAllTargets,
};

// R_s: the inclusion-minimal small tight set containing s, or nullopt if none
// exists. Requires deg(s) > k and G k-connected; throws NotKConnected if some
// flow from s finds kappa < k.
std::optional<NodeSet> compute_min_small_tight_set(const Graph& g, std::size_t k, NodeId s,
                                                   TightSearch search = TightSearch::kEarlyExit);
std::optional<NodeSet> compute_min_small_tight_set(SplitNetwork& net, const Graph& g, std::size_t k, NodeId s,
                                                   TightSearch search = TightSearch::kEarlyExit);

// Smallest-last ordering plus greedy coloring. Colors are 0-based and at most
// d+1 distinct values are used. Throws std::invalid_argument if some subgraph has
// minimum degree above d.
std::vector<std::uint32_t> degeneracy_coloring(const Graph& h, std::size_t d);

}  // namespace vcq
