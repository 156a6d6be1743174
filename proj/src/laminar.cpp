#include "vcq/laminar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vcq {

namespace {

std::string describe(const std::vector<NodeId>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

}  // namespace

NonLaminarError::NonLaminarError(std::vector<NodeId> first, std::vector<NodeId> second)
    : Error("sets " + describe(first) + " and " + describe(second) + " are not laminar"),
      first_(std::move(first)),
      second_(std::move(second)) {}

LaminarForest LaminarForest::build(std::span<const NodeSet> family, std::size_t n) {
    // Deduplicate: distinct sets, each remembering which inputs map onto it.
    std::map<std::vector<NodeId>, std::uint32_t> index;
    std::vector<std::vector<NodeId>> sets;
    std::vector<std::uint32_t> owner(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<NodeId> members(family[i].begin(), family[i].end());
        if (members.empty()) throw std::invalid_argument("laminar family member is empty");
        if (members.size() >= n || members.back() >= n) {
            throw std::invalid_argument("laminar family member must be a proper subset of V");
        }
        auto [it, inserted] = index.emplace(members, static_cast<std::uint32_t>(sets.size()));
        if (inserted) sets.push_back(std::move(members));
        owner[i] = it->second;
    }

    // Insert sets largest first; ties by lexicographic order. A set is laminar with
    // all earlier ones iff every member currently maps to the same smallest set.
    std::vector<std::uint32_t> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sets[a].size() != sets[b].size()) return sets[a].size() > sets[b].size();
        return sets[a] < sets[b];
    });

    // Temporary ids: 0 = root, set i -> i + 1.
    std::vector<std::uint32_t> tmp_parent(sets.size() + 1, kNoTreeNode);
    std::vector<std::uint32_t> tmp_psi(n, 0);
    std::vector<std::uint32_t> depth(sets.size() + 1, 0);
    auto set_of = [&](std::uint32_t node) -> std::vector<NodeId> {
        if (node == 0) {
            std::vector<NodeId> all(n);
            std::iota(all.begin(), all.end(), NodeId{0});
            return all;
        }
        return sets[node - 1];
    };
    auto is_ancestor = [&](std::uint32_t a, std::uint32_t x) {
        while (depth[x] > depth[a]) x = tmp_parent[x];
        return x == a;
    };
    for (std::uint32_t i : order) {
        const std::uint32_t node = i + 1;
        const auto& members = sets[i];
        const std::uint32_t p = tmp_psi[members.front()];
        for (NodeId v : members) {
            const std::uint32_t q = tmp_psi[v];
            if (q == p) continue;
            // q holds v but not members.front(); at least one of p, q crosses this set.
            const std::uint32_t offender = is_ancestor(p, q) ? q : p;
            throw NonLaminarError(set_of(offender), members);
        }
        tmp_parent[node] = p;
        depth[node] = depth[p] + 1;
        for (NodeId v : members) tmp_psi[v] = node;
    }

    // Children sorted by minimum element; DFS assigns preorder ids and timestamps.
    std::vector<std::vector<std::uint32_t>> children(sets.size() + 1);
    for (std::uint32_t node = 1; node <= sets.size(); ++node) children[tmp_parent[node]].push_back(node);
    for (auto& list : children) {
        std::sort(list.begin(), list.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sets[a - 1].front() < sets[b - 1].front(); });
    }

    LaminarForest forest;
    const std::size_t total = sets.size() + 1;
    forest.parent_.assign(total, kNoTreeNode);
    forest.dfs_in_.assign(total, 0);
    forest.dfs_out_.assign(total, 0);
    std::vector<TreeNodeId> renumber(total, kNoTreeNode);

    std::uint32_t clock = 0;
    TreeNodeId next_id = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
    renumber[0] = next_id++;
    forest.dfs_in_[0] = clock++;
    while (!stack.empty()) {
        auto& [node, child] = stack.back();
        if (child < children[node].size()) {
            const std::uint32_t next = children[node][child++];
            const TreeNodeId id = next_id++;
            renumber[next] = id;
            forest.parent_[id] = renumber[node];
            forest.dfs_in_[id] = clock++;
            stack.emplace_back(next, 0);
        } else {
            forest.dfs_out_[renumber[node]] = clock++;
            stack.pop_back();
        }
    }

    forest.psi_.resize(n);
    for (std::size_t v = 0; v < n; ++v) forest.psi_[v] = renumber[tmp_psi[v]];
    forest.owner_.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) forest.owner_[i] = renumber[owner[i] + 1];
    return forest;
}

LaminarForest LaminarForest::from_parts(std::vector<TreeNodeId> parent, std::vector<std::uint32_t> dfs_in,
                                        std::vector<std::uint32_t> dfs_out, std::vector<TreeNodeId> psi) {
    const std::size_t total = parent.size();
    if (total == 0 || dfs_in.size() != total || dfs_out.size() != total) {
        throw std::invalid_argument("laminar forest arrays have inconsistent sizes");
    }
    if (parent[0] != kNoTreeNode) throw std::invalid_argument("laminar forest root must have no parent");
    for (std::size_t x = 1; x < total; ++x) {
        if (parent[x] >= x) throw std::invalid_argument("laminar forest parent must precede child in preorder");
    }
    for (std::size_t x = 0; x < total; ++x) {
        if (dfs_in[x] >= dfs_out[x]) throw std::invalid_argument("laminar forest timestamps are inverted");
    }
    for (TreeNodeId p : psi) {
        if (p >= total) throw std::invalid_argument("laminar forest psi entry out of range");
    }
    LaminarForest forest;
    forest.parent_ = std::move(parent);
    forest.dfs_in_ = std::move(dfs_in);
    forest.dfs_out_ = std::move(dfs_out);
    forest.psi_ = std::move(psi);
    return forest;
}

std::vector<NodeId> LaminarForest::members(TreeNodeId x) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < psi_.size(); ++v) {
        if (contains(x, v)) out.push_back(v);
    }
    return out;
}

}  // namespace vcq
