#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcq/pair_map.hpp"

namespace vcq {

using NodeId = std::uint32_t;

// Undirected edge in canonical order (u < v).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of nodes drawn from [0, universe) with O(1) membership.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : mask_(universe, 0) {}
    NodeSet(std::size_t universe, std::span<const NodeId> members);
    NodeSet(std::size_t universe, std::initializer_list<NodeId> members)
        : NodeSet(universe, std::span<const NodeId>(members.begin(), members.size())) {}

    static NodeSet all(std::size_t universe);

    bool contains(NodeId v) const noexcept { return v < mask_.size() && mask_[v] != 0; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t universe() const noexcept { return mask_.size(); }

    std::span<const NodeId> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    NodeId front() const { return members_.front(); }

    bool is_subset_of(const NodeSet& other) const;

    friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.members_ == b.members_; }
    // Lexicographic on the sorted member lists.
    friend auto operator<=>(const NodeSet& a, const NodeSet& b) { return a.members_ <=> b.members_; }

private:
    std::vector<NodeId> members_;
    std::vector<std::uint8_t> mask_;
};

NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

// Immutable simple undirected graph: CSR adjacency with sorted neighbor lists
// plus a hashed edge set for O(1) adjacency tests.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self-loops, duplicates, or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::size_t min_degree() const noexcept;

    bool has_edge(NodeId a, NodeId b) const noexcept {
        return a != b && edge_index_.contains(a < b ? a : b, a < b ? b : a);
    }

    // Canonical edges sorted by (u, v).
    std::span<const Edge> edges() const noexcept { return edges_; }

    // Copy without the given edge (which must exist).
    Graph without_edge(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
    std::vector<Edge> edges_;
    PairMap edge_index_;
};

// Neighbors of A outside A.
NodeSet boundary(const Graph& g, const NodeSet& a);
// V minus (A union boundary(A)).
NodeSet node_complement(const Graph& g, const NodeSet& a);
// |boundary(A)| = k with A and its node complement nonempty.
bool is_tight(const Graph& g, const NodeSet& a, std::size_t k);
// 2|A| <= n - k, evaluated exactly.
bool is_small(std::size_t n, std::size_t set_size, std::size_t k) noexcept;
inline bool is_small(const Graph& g, const NodeSet& a, std::size_t k) noexcept {
    return is_small(g.n(), a.size(), k);
}

// Edge-list text format: "n m" header, then m lines "u v". '#' starts a comment.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string emit_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace vcq
