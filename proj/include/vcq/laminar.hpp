#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vcq/errors.hpp"
#include "vcq/graph.hpp"

namespace vcq {

using TreeNodeId = std::uint32_t;
inline constexpr TreeNodeId kNoTreeNode = 0xFFFFFFFFu;

class NonLaminarError : public Error {
public:
    NonLaminarError(std::vector<NodeId> first, std::vector<NodeId> second);

    const std::vector<NodeId>& first() const noexcept { return first_; }
    const std::vector<NodeId>& second() const noexcept { return second_; }

private:
    std::vector<NodeId> first_;
    std::vector<NodeId> second_;
};

// Rooted tree of a laminar family over V = [0, n). Tree node 0 is the root (V
// itself); the rest are the distinct family sets numbered in DFS preorder with
// children visited by increasing minimum element. psi(v) is the smallest set
// containing v, and descendant tests compare DFS entry/exit times.
class LaminarForest {
public:
    LaminarForest() = default;

    // Equal sets share one tree node. Throws NonLaminarError on a crossing pair and
    // std::invalid_argument on an empty set or on V itself.
    static LaminarForest build(std::span<const NodeSet> family, std::size_t n);

    // Reassemble from stored arrays (deserialization). Validates shape.
    static LaminarForest from_parts(std::vector<TreeNodeId> parent, std::vector<std::uint32_t> dfs_in,
                                    std::vector<std::uint32_t> dfs_out, std::vector<TreeNodeId> psi);

    static constexpr TreeNodeId root() noexcept { return 0; }
    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t universe() const noexcept { return psi_.size(); }

    TreeNodeId parent(TreeNodeId x) const { return parent_[x]; }
    TreeNodeId psi(NodeId v) const { return psi_[v]; }
    // Tree node representing family[i] as passed to build().
    TreeNodeId node_of(std::size_t family_index) const { return owner_[family_index]; }

    // x is a descendant of y, or x == y.
    bool is_descendant(TreeNodeId x, TreeNodeId y) const noexcept {
        return dfs_in_[y] <= dfs_in_[x] && dfs_out_[x] <= dfs_out_[y];
    }
    // v belongs to the set represented by tree node x.
    bool contains(TreeNodeId x, NodeId v) const noexcept { return is_descendant(psi_[v], x); }

    std::span<const TreeNodeId> parents() const noexcept { return parent_; }
    std::span<const std::uint32_t> dfs_in() const noexcept { return dfs_in_; }
    std::span<const std::uint32_t> dfs_out() const noexcept { return dfs_out_; }
    std::span<const TreeNodeId> psi_map() const noexcept { return psi_; }

    // Members of the set at tree node x, sorted.
    std::vector<NodeId> members(TreeNodeId x) const;

    friend bool operator==(const LaminarForest& a, const LaminarForest& b) {
        return a.parent_ == b.parent_ && a.dfs_in_ == b.dfs_in_ && a.dfs_out_ == b.dfs_out_ && a.psi_ == b.psi_;
    }

private:
    std::vector<TreeNodeId> parent_;
    std::vector<std::uint32_t> dfs_in_;
    std::vector<std::uint32_t> dfs_out_;
    std::vector<TreeNodeId> psi_;
    std::vector<TreeNodeId> owner_;
};

}  // namespace vcq
