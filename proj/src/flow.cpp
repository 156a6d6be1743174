#include "vcq/flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vcq {

namespace {

constexpr std::int32_t kUnbounded = std::int32_t{1} << 29;
constexpr std::uint32_t kNone = 0xFFFFFFFFu;

inline std::uint32_t in_copy(NodeId v) { return 2 * v; }
inline std::uint32_t out_copy(NodeId v) { return 2 * v + 1; }

}  // namespace

SplitNetwork::SplitNetwork(const Graph& g) : graph_(&g) {
    const std::size_t n = g.n();
    const std::size_t m = g.m();
    const std::size_t arcs = 2 * (n + 2 * m);
    head_.resize(arcs);
    base_.resize(arcs);

    // Arc 2v / 2v+1: internal arc of v and its reverse.
    // Arcs 2n + 4i .. 2n + 4i + 3: out(u)->in(w), reverse, out(w)->in(u), reverse.
    std::vector<std::vector<std::uint32_t>> lists(2 * n);
    for (NodeId v = 0; v < n; ++v) {
        head_[2 * v] = out_copy(v);
        base_[2 * v] = 1;
        head_[2 * v + 1] = in_copy(v);
        base_[2 * v + 1] = 0;
        lists[in_copy(v)].push_back(2 * v);
        lists[out_copy(v)].push_back(2 * v + 1);
    }
    const auto edges = g.edges();
    for (std::size_t i = 0; i < m; ++i) {
        const NodeId u = edges[i].u;
        const NodeId w = edges[i].v;
        const auto a = static_cast<std::uint32_t>(2 * n + 4 * i);
        head_[a] = in_copy(w);
        base_[a] = kUnbounded;
        head_[a + 1] = out_copy(u);
        base_[a + 1] = 0;
        head_[a + 2] = in_copy(u);
        base_[a + 2] = kUnbounded;
        head_[a + 3] = out_copy(w);
        base_[a + 3] = 0;
        lists[out_copy(u)].push_back(a);
        lists[in_copy(w)].push_back(a + 1);
        lists[out_copy(w)].push_back(a + 2);
        lists[in_copy(u)].push_back(a + 3);
    }
    first_.assign(2 * n + 1, 0);
    for (std::size_t x = 0; x < 2 * n; ++x) first_[x + 1] = first_[x] + static_cast<std::uint32_t>(lists[x].size());
    adj_.reserve(first_.back());
    for (const auto& list : lists) adj_.insert(adj_.end(), list.begin(), list.end());

    residual_ = base_;
    is_dirty_.assign(arcs, 0);
    stamp_.assign(2 * n, 0);
    parent_arc_.assign(2 * n, kNone);
    queue_.reserve(2 * n);
}

void SplitNetwork::set_residual(std::uint32_t arc, std::int32_t value) {
    if (!is_dirty_[arc]) {
        is_dirty_[arc] = 1;
        dirty_.push_back(arc);
    }
    residual_[arc] = value;
}

void SplitNetwork::restore() {
    for (std::uint32_t a : dirty_) {
        residual_[a] = base_[a];
        is_dirty_[a] = 0;
    }
    dirty_.clear();
}

void SplitNetwork::next_stamp() {
    if (++current_stamp_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        current_stamp_ = 1;
    }
}

// One BFS augmentation; returns false when the sink is unreachable.
bool SplitNetwork::augment(std::uint32_t source, std::uint32_t sink, std::size_t& flow, std::size_t cap) {
    next_stamp();
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = current_stamp_;
    parent_arc_[source] = kNone;
    bool found = false;
    for (std::size_t qi = 0; qi < queue_.size() && !found; ++qi) {
        const std::uint32_t x = queue_[qi];
        for (std::uint32_t i = first_[x]; i < first_[x + 1]; ++i) {
            const std::uint32_t a = adj_[i];
            const std::uint32_t y = head_[a];
            if (residual_[a] <= 0 || stamp_[y] == current_stamp_) continue;
            stamp_[y] = current_stamp_;
            parent_arc_[y] = a;
            if (y == sink) {
                found = true;
                break;
            }
            queue_.push_back(y);
        }
    }
    if (!found) return false;

    std::int32_t bottleneck = kUnbounded;
    for (std::uint32_t y = sink; y != source; y = head_[parent_arc_[y] ^ 1u]) {
        bottleneck = std::min(bottleneck, residual_[parent_arc_[y]]);
    }
    const auto room = static_cast<std::int32_t>(std::min<std::size_t>(cap - flow, kUnbounded));
    bottleneck = std::min(bottleneck, room);
    for (std::uint32_t y = sink; y != source; y = head_[parent_arc_[y] ^ 1u]) {
        const std::uint32_t a = parent_arc_[y];
        set_residual(a, residual_[a] - bottleneck);
        set_residual(a ^ 1u, residual_[a ^ 1u] + bottleneck);
    }
    flow += static_cast<std::size_t>(bottleneck);
    return true;
}

CutResult SplitNetwork::run(NodeId s, NodeId t, std::size_t cap, std::uint32_t removed_edge, bool want_sink_side) {
    const Graph& g = *graph_;
    const std::size_t n = g.n();
    set_residual(2 * s, kUnbounded);
    set_residual(2 * t, kUnbounded);
    if (removed_edge != kNone) {
        const auto a = static_cast<std::uint32_t>(2 * n + 4 * removed_edge);
        set_residual(a, 0);
        set_residual(a + 2, 0);
    }

    const std::uint32_t source = in_copy(s);
    const std::uint32_t sink = out_copy(t);
    std::size_t flow = 0;
    while (flow < cap && augment(source, sink, flow, cap)) {
    }

    CutResult result;
    result.kappa = std::min(flow, cap);
    if (flow >= cap) {
        restore();
        return result;
    }

    // Forward residual reachability from the source: both copies reached means
    // inside R_st, only the in-copy reached means the node is in the cut.
    next_stamp();
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = current_stamp_;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        const std::uint32_t x = queue_[qi];
        for (std::uint32_t i = first_[x]; i < first_[x + 1]; ++i) {
            const std::uint32_t a = adj_[i];
            const std::uint32_t y = head_[a];
            if (residual_[a] > 0 && stamp_[y] != current_stamp_) {
                stamp_[y] = current_stamp_;
                queue_.push_back(y);
            }
        }
    }
    std::vector<NodeId> inside;
    std::vector<NodeId> cut_nodes;
    for (std::uint32_t x : queue_) {
        if ((x & 1u) != 0) continue;
        const NodeId v = x / 2;
        if (stamp_[out_copy(v)] == current_stamp_) {
            inside.push_back(v);
        } else {
            cut_nodes.push_back(v);
        }
    }
    result.source_side = NodeSet(n, inside);

    std::vector<Edge> cut_edges;
    if (removed_edge != kNone) cut_edges.push_back(g.edges()[removed_edge]);
    result.cut = Cut(std::move(cut_nodes), std::move(cut_edges));

    if (want_sink_side) {
        // Backward reachability: x reaches y through arc x->y, the partner of y's arc a.
        next_stamp();
        queue_.clear();
        queue_.push_back(sink);
        stamp_[sink] = current_stamp_;
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const std::uint32_t y = queue_[qi];
            for (std::uint32_t i = first_[y]; i < first_[y + 1]; ++i) {
                const std::uint32_t a = adj_[i];
                const std::uint32_t x = head_[a];
                if (residual_[a ^ 1u] > 0 && stamp_[x] != current_stamp_) {
                    stamp_[x] = current_stamp_;
                    queue_.push_back(x);
                }
            }
        }
        std::vector<NodeId> sink_inside;
        for (std::uint32_t x : queue_) {
            if ((x & 1u) == 0) continue;
            const NodeId v = x / 2;
            if (stamp_[in_copy(v)] == current_stamp_) sink_inside.push_back(v);
        }
        result.sink_side = NodeSet(n, sink_inside);
    }

    restore();
    return result;
}

CutResult SplitNetwork::nonadjacent(NodeId s, NodeId t, std::size_t cap, bool want_sink_side) {
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (graph_->has_edge(s, t)) throw std::invalid_argument("s and t are adjacent; use the adjacent variant");
    return run(s, t, cap, kNone, want_sink_side);
}

CutResult SplitNetwork::adjacent(NodeId s, NodeId t, std::size_t cap, bool want_sink_side) {
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (!graph_->has_edge(s, t)) throw std::invalid_argument("s and t are not adjacent");
    // The edge itself is one path, so kappa >= 1 always.
    if (cap <= 1) return CutResult{cap, std::nullopt, std::nullopt, std::nullopt};
    const Edge e(s, t);
    const auto edges = graph_->edges();
    const auto index = static_cast<std::uint32_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    CutResult inner = run(s, t, cap - 1, index, want_sink_side);
    inner.kappa += 1;
    return inner;
}

CutResult SplitNetwork::local(NodeId s, NodeId t, std::size_t cap, bool want_sink_side) {
    return graph_->has_edge(s, t) ? adjacent(s, t, cap, want_sink_side) : nonadjacent(s, t, cap, want_sink_side);
}

CutResult kappa_nonadjacent(const Graph& g, NodeId s, NodeId t, std::size_t cap) {
    SplitNetwork net(g);
    return net.nonadjacent(s, t, cap, true);
}

CutResult kappa_adjacent(const Graph& g, NodeId s, NodeId t, std::size_t cap) {
    SplitNetwork net(g);
    return net.adjacent(s, t, cap, true);
}

NodeSet minimal_tight_set(const Graph& g, NodeId s, NodeId t, std::size_t k) {
    SplitNetwork net(g);
    CutResult r = net.nonadjacent(s, t, k + 1);
    if (r.kappa > k) throw std::invalid_argument("kappa(s,t) exceeds k; no st-tight set of size <= k");
    return std::move(*r.source_side);
}

ConnectivityWitness global_connectivity(const Graph& g, std::size_t cap) {
    ConnectivityWitness best;
    if (g.n() < 2) return best;
    best.kappa = cap;
    best.t = 1;
    SplitNetwork net(g);
    for (NodeId s = 0; s < g.n() && best.kappa > 0; ++s) {
        for (NodeId t = s + 1; t < g.n(); ++t) {
            const CutResult r = net.local(s, t, best.kappa);
            if (r.kappa < best.kappa) {
                best = {r.kappa, s, t};
                if (best.kappa == 0) break;
            }
        }
    }
    return best;
}

}  // namespace vcq
