#pragma once

// Reference implementations used only by the tests. They share no code with the
// library beyond the Graph container, so a bug in the split network or in the
// set primitives cannot hide itself.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "vcq/cut.hpp"
#include "vcq/graph.hpp"

namespace vcq::testing {

using Mask = std::uint32_t;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

// Search in g minus `gone` vertices and minus the listed edges.
inline bool connected_without(const Graph& g, NodeId s, NodeId t, const std::vector<bool>& gone,
                              const std::vector<Edge>& cut_edges = {}) {
    if (gone[s] || gone[t]) return false;
    std::vector<bool> seen(g.n(), false);
    std::vector<NodeId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        if (v == t) return true;
        for (const Edge& e : g.edges()) {
            NodeId w;
            if (e.u == v) {
                w = e.v;
            } else if (e.v == v) {
                w = e.u;
            } else {
                continue;
            }
            if (gone[w] || seen[w]) continue;
            if (std::find(cut_edges.begin(), cut_edges.end(), e) != cut_edges.end()) continue;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    return false;
}

// Deletion + reachability check of a mixed cut.
inline bool separates(const Graph& g, NodeId s, NodeId t, const Cut& cut) {
    std::vector<bool> gone(g.n(), false);
    for (NodeId v : cut.vertices) gone[v] = true;
    if (gone[s] || gone[t]) return false;
    return !connected_without(g, s, t, gone, cut.edges);
}

// Smallest mixed st-cut by enumerating vertex subsets in increasing size. Only a
// cut through the edge st itself can be mixed and minimum at once.
inline std::size_t enum_kappa(const Graph& g, NodeId s, NodeId t) {
    const std::size_t n = g.n();
    const bool adjacent = g.has_edge(s, t);
    const std::vector<Edge> drop = adjacent ? std::vector<Edge>{Edge(s, t)} : std::vector<Edge>{};
    std::vector<NodeId> others;
    for (NodeId v = 0; v < n; ++v)
        if (v != s && v != t) others.push_back(v);
    for (std::size_t size = 0; size <= others.size(); ++size) {
        std::vector<bool> pick(others.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<bool> gone(n, false);
            for (std::size_t i = 0; i < others.size(); ++i)
                if (pick[i]) gone[others[i]] = true;
            if (!connected_without(g, s, t, gone, drop)) return size + (adjacent ? 1 : 0);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return others.size() + (adjacent ? 1 : 0);
}

// Edmonds-Karp on an explicit vertex-split arc list. Vertex v becomes nodes
// 2v (entry) and 2v+1 (exit); s and t have no capacity limit.
class ReferenceFlow {
public:
    explicit ReferenceFlow(Graph g) : g_(std::move(g)) {}

    // min(kappa(s,t), cap)
    std::size_t kappa(NodeId s, NodeId t, std::size_t cap) {
        if (g_.has_edge(s, t)) {
            if (cap == 0) return 0;
            std::vector<Edge> rest;
            for (const Edge& e : g_.edges())
                if (!(e == Edge(s, t))) rest.push_back(e);
            ReferenceFlow sub(Graph(g_.n(), rest));
            return 1 + sub.kappa(s, t, cap - 1);
        }
        build(s, t, cap + 1);
        std::size_t flow = 0;
        const std::size_t source = 2 * s + 1;
        const std::size_t sink = 2 * t;
        while (flow < cap) {
            std::vector<std::size_t> via(2 * g_.n(), SIZE_MAX);
            std::queue<std::size_t> q;
            q.push(source);
            via[source] = SIZE_MAX - 1;
            while (!q.empty() && via[sink] == SIZE_MAX) {
                const std::size_t x = q.front();
                q.pop();
                for (std::size_t a : out_[x]) {
                    if (arcs_[a].cap == 0 || via[arcs_[a].to] != SIZE_MAX) continue;
                    via[arcs_[a].to] = a;
                    q.push(arcs_[a].to);
                }
            }
            if (via[sink] == SIZE_MAX) break;
            for (std::size_t x = sink; x != source;) {
                const std::size_t a = via[x];
                --arcs_[a].cap;
                ++arcs_[a ^ 1].cap;
                x = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct Arc {
        std::size_t to;
        std::size_t cap;
    };

    void add(std::size_t from, std::size_t to, std::size_t cap) {
        out_[from].push_back(arcs_.size());
        arcs_.push_back({to, cap});
        out_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    void build(NodeId s, NodeId t, std::size_t big) {
        arcs_.clear();
        out_.assign(2 * g_.n(), {});
        for (NodeId v = 0; v < g_.n(); ++v) add(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
        for (const Edge& e : g_.edges()) {
            add(2 * e.u + 1, 2 * e.v, big);
            add(2 * e.v + 1, 2 * e.u, big);
        }
    }

    Graph g_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> out_;
};

// Subsets of V as bit masks (n <= 20).
inline Mask mask_boundary(const std::vector<std::vector<bool>>& adj, Mask a) {
    Mask out = 0;
    const std::size_t n = adj.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (!(a >> u & 1U)) continue;
        for (std::size_t v = 0; v < n; ++v)
            if (adj[u][v] && !(a >> v & 1U)) out |= Mask{1} << v;
    }
    return out;
}

inline NodeSet to_set(Mask a, std::size_t n) {
    std::vector<NodeId> members;
    for (std::size_t v = 0; v < n; ++v)
        if (a >> v & 1U) members.push_back(static_cast<NodeId>(v));
    return NodeSet(n, members);
}

inline Mask to_mask(const NodeSet& a) {
    Mask m = 0;
    for (NodeId v : a) m |= Mask{1} << v;
    return m;
}

// Every tight set (|boundary| = k, nonempty complement) of g.
inline std::vector<Mask> all_tight_sets(const Graph& g, std::size_t k) {
    const auto adj = adjacency_matrix(g);
    const std::size_t n = g.n();
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> out;
    for (Mask a = 1; a <= full && a != 0; ++a) {
        const Mask bd = mask_boundary(adj, a);
        if (static_cast<std::size_t>(__builtin_popcount(bd)) == k && (a | bd) != full) out.push_back(a);
    }
    return out;
}

// Unique inclusion-minimal st-tight set by enumeration, as the intersection of
// all st-tight sets (checked to be one of them).
inline std::optional<Mask> minimal_st_tight(const Graph& g, NodeId s, NodeId t) {
    if (g.has_edge(s, t)) return std::nullopt;
    const auto adj = adjacency_matrix(g);
    const std::size_t n = g.n();
    const std::size_t kappa = enum_kappa(g, s, t);
    Mask meet = (Mask{1} << n) - 1;
    std::vector<Mask> found;
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
        if (!(a >> s & 1U) || (a >> t & 1U)) continue;
        const Mask bd = mask_boundary(adj, a);
        if ((bd >> t & 1U) || static_cast<std::size_t>(__builtin_popcount(bd)) != kappa) continue;
        meet &= a;
        found.push_back(a);
    }
    if (std::find(found.begin(), found.end(), meet) == found.end()) return std::nullopt;
    return meet;
}

// Inclusion-minimal small tight set containing s, if s lies in any.
inline std::optional<Mask> minimal_small_tight(const Graph& g, std::size_t k, NodeId s) {
    const std::size_t n = g.n();
    std::optional<Mask> best;
    for (Mask a : all_tight_sets(g, k)) {
        if (!(a >> s & 1U) || 2 * static_cast<std::size_t>(__builtin_popcount(a)) + k > n) continue;
        if (!best || static_cast<std::size_t>(__builtin_popcount(a)) < static_cast<std::size_t>(__builtin_popcount(*best)))
            best = a;
    }
    return best;
}

}  // namespace vcq::testing
