#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vcq/cut.hpp"
#include "vcq/graph.hpp"

namespace vcq {

struct CutResult {
    // min(kappa(s,t), cap)
    std::size_t kappa = 0;
    // Present iff kappa < cap. Minimum mixed st-cut.
    std::optional<Cut> cut;
    // Present iff kappa < cap: the inclusion-minimal st-tight set R_st
    // (computed in G - st for adjacent pairs).
    std::optional<NodeSet> source_side;
    // Present iff kappa < cap and requested: R_ts.
    std::optional<NodeSet> sink_side;
};

// Unit-capacity node-split flow network over one graph, reused across many
// (s, t) computations. Node v becomes in(v) -> out(v) with capacity 1 (unbounded
// for the endpoints of a query); each undirected edge uv becomes unbounded arcs
// out(u) -> in(v) and out(v) -> in(u). Augmentation uses shortest residual paths
// with deterministic arc order, stopping after `cap` units.
//
// Not thread-safe; use one network per thread.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g);

    // Arcs excluding residual reverses: n internal + 2m edge arcs.
    std::size_t forward_arc_count() const noexcept { return head_.size() / 2; }

    // Requires s != t and st not an edge.
    CutResult nonadjacent(NodeId s, NodeId t, std::size_t cap, bool want_sink_side = false);
    // Requires st to be an edge: 1 + kappa in G - st, cut contains edge st.
    CutResult adjacent(NodeId s, NodeId t, std::size_t cap, bool want_sink_side = false);
    // Dispatches on adjacency.
    CutResult local(NodeId s, NodeId t, std::size_t cap, bool want_sink_side = false);

private:
    CutResult run(NodeId s, NodeId t, std::size_t cap, std::uint32_t removed_edge, bool want_sink_side);
    bool augment(std::uint32_t source, std::uint32_t sink, std::size_t& flow, std::size_t cap);
    void set_residual(std::uint32_t arc, std::int32_t value);
    void restore();
    void next_stamp();

    const Graph* graph_;
    std::vector<std::uint32_t> head_;
    std::vector<std::int32_t> residual_;
    std::vector<std::int32_t> base_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> dirty_;
    std::vector<std::uint8_t> is_dirty_;

    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_stamp_ = 0;
    std::vector<std::uint32_t> parent_arc_;
    std::vector<std::uint32_t> queue_;
};

CutResult kappa_nonadjacent(const Graph& g, NodeId s, NodeId t, std::size_t cap);
CutResult kappa_adjacent(const Graph& g, NodeId s, NodeId t, std::size_t cap);

// R_st for a non-adjacent pair; throws std::invalid_argument when kappa(s,t) > k.
NodeSet minimal_tight_set(const Graph& g, NodeId s, NodeId t, std::size_t k);

struct ConnectivityWitness {
    std::size_t kappa = 0;  // min over pairs of min(kappa(s,t), cap)
    NodeId s = 0;
    NodeId t = 0;
};

// Minimum pairwise mixed connectivity, capped. Graphs with n < 2 report 0.
ConnectivityWitness global_connectivity(const Graph& g, std::size_t cap);

}  // namespace vcq
