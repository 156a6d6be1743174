#include <doctest.h>

#include <functional>
#include <random>

#include "vcq/laminar.hpp"

using namespace vcq;

namespace {

// Laminar family over [0, n) by recursive splitting.
std::vector<NodeSet> random_laminar(std::size_t n, std::mt19937_64& rng) {
    std::vector<NodeSet> family;
    std::function<void(std::vector<NodeId>)> split = [&](std::vector<NodeId> part) {
        if (part.size() < 2) return;
        std::shuffle(part.begin(), part.end(), rng);
        const std::size_t pieces = 2 + rng() % 2;
        for (std::size_t p = 0; p < pieces; ++p) {
            std::vector<NodeId> piece;
            for (std::size_t i = p; i < part.size(); i += pieces) piece.push_back(part[i]);
            if (piece.empty() || piece.size() == n) continue;
            if (rng() % 4 != 0) family.emplace_back(n, piece);
            split(piece);
        }
    };
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    split(all);
    return family;
}

}  // namespace

TEST_CASE("small family") {
    const std::vector<NodeSet> family{NodeSet(5, {0}), NodeSet(5, {1}), NodeSet(5, {0, 1, 2})};
    const LaminarForest f = LaminarForest::build(family, 5);
    CHECK(f.size() == 4);
    const TreeNodeId big = f.node_of(2);
    CHECK(f.parent(big) == LaminarForest::root());
    CHECK(f.parent(f.node_of(0)) == big);
    CHECK(f.parent(f.node_of(1)) == big);
    CHECK(f.psi(3) == LaminarForest::root());
    CHECK(f.psi(2) == big);
    CHECK(f.psi(0) == f.node_of(0));
    CHECK(f.members(big) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("empty family") {
    const LaminarForest f = LaminarForest::build({}, 4);
    CHECK(f.size() == 1);
    for (NodeId v = 0; v < 4; ++v) CHECK(f.psi(v) == LaminarForest::root());
    CHECK(f.is_descendant(0, 0));
}

TEST_CASE("equal sets share a node") {
    const std::vector<NodeSet> family{NodeSet(6, {1, 2}), NodeSet(6, {1, 2})};
    const LaminarForest f = LaminarForest::build(family, 6);
    CHECK(f.size() == 2);
    CHECK(f.node_of(0) == f.node_of(1));
}

TEST_CASE("crossing sets are rejected") {
    const std::vector<NodeSet> family{NodeSet(5, {0, 1}), NodeSet(5, {1, 2})};
    CHECK_THROWS_AS(LaminarForest::build(family, 5), NonLaminarError);
    CHECK_THROWS_AS(LaminarForest::build(std::vector<NodeSet>{NodeSet(5)}, 5), std::invalid_argument);
}

TEST_CASE("random laminar families: containment and descendants") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 5 + rng() % 40;
        const auto family = random_laminar(n, rng);
        const LaminarForest f = LaminarForest::build(family, n);
        for (std::size_t i = 0; i < family.size(); ++i) {
            const TreeNodeId r = f.node_of(i);
            for (NodeId v = 0; v < n; ++v) CHECK(f.contains(r, v) == family[i].contains(v));
        }
        for (TreeNodeId a = 0; a < f.size(); ++a) {
            CHECK(f.is_descendant(a, LaminarForest::root()));
            for (TreeNodeId b = 0; b < f.size(); ++b) {
                bool chased = false;
                for (TreeNodeId x = a;; x = f.parent(x)) {
                    if (x == b) chased = true;
                    if (x == LaminarForest::root() || chased) break;
                }
                CHECK(f.is_descendant(a, b) == chased);
            }
        }
        CHECK(LaminarForest::from_parts({f.parents().begin(), f.parents().end()}, {f.dfs_in().begin(), f.dfs_in().end()},
                                        {f.dfs_out().begin(), f.dfs_out().end()},
                                        {f.psi_map().begin(), f.psi_map().end()}) == f);
    }
}
