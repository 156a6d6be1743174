#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vcq/errors.hpp"
#include "vcq/generators.hpp"
#include "vcq/graph.hpp"

using namespace vcq;
using namespace vcq::testing;

TEST_CASE("boundary of a cycle node") {
    const Graph c5 = gen::cycle(5);
    CHECK(boundary(c5, NodeSet(5, {0})) == NodeSet(5, {1, 4}));
    CHECK(boundary(c5, NodeSet::all(5)).empty());
    CHECK(node_complement(c5, NodeSet(5, {0})) == NodeSet(5, {2, 3}));
    CHECK(node_complement(c5, NodeSet::all(5)).empty());
}

TEST_CASE("boundary matches the definition on random graphs") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen::gnp(20, 0.3, 1000 + round);
        const NodeSet a = random_subset(20, rng);
        std::set<NodeId> expected;
        for (const Edge& e : g.edges()) {
            if (a.contains(e.u) && !a.contains(e.v)) expected.insert(e.v);
            if (a.contains(e.v) && !a.contains(e.u)) expected.insert(e.u);
        }
        const NodeSet bd = boundary(g, a);
        CHECK(std::set<NodeId>(bd.begin(), bd.end()) == expected);

        // A, boundary and complement partition V
        const NodeSet comp = node_complement(g, a);
        CHECK(a.size() + bd.size() + comp.size() == 20);
        CHECK(set_union(set_union(a, bd), comp) == NodeSet::all(20));
    }
}

TEST_CASE("B6 boundary and tightness") {
    const Graph g = b6();
    CHECK(g.n() == 12);
    CHECK(g.m() == 33);
    const NodeSet a(12, {y(4), y(5), y(6)});
    CHECK(boundary(g, a) == NodeSet(12, {y(1), y(2), y(3)}));
    CHECK(node_complement(g, a) == NodeSet(12, {x(1), x(2), x(3), x(4), x(5), x(6)}));
    CHECK(is_tight(g, a, 3));
    CHECK(is_tight(gen::cycle(5), NodeSet(5, {0}), 2));
    CHECK_FALSE(is_tight(gen::complete(4), NodeSet(4, {0}), 3));
}

TEST_CASE("smallness is exact") {
    CHECK(is_small(12, 4, 3));
    CHECK_FALSE(is_small(12, 5, 3));
    CHECK(is_small(5, 1, 2));
    CHECK_FALSE(is_small(3, 1, 4));
}

TEST_CASE("tightness is symmetric under the node complement") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Graph g = gen::gnp(9, 0.45, seed);
        const auto adj = adjacency_matrix(g);
        for (Mask m = 1; m < (Mask{1} << 9); ++m) {
            const NodeSet a = to_set(m, 9);
            const NodeSet star = node_complement(g, a);
            if (star.empty() || boundary(g, a) != boundary(g, star)) continue;
            const std::size_t k = boundary(g, a).size();
            CHECK(is_tight(g, a, k) == is_tight(g, star, k));
            CHECK(to_mask(boundary(g, a)) == mask_boundary(adj, m));
        }
    }
}

TEST_CASE("parse a path") {
    const Graph g = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(g == gen::path(3));
}

TEST_CASE("emit canonicalizes") {
    const Graph g = parse_graph("# a five-cycle\n5 5\n1 0\n2 1\n3 2\n4 3\n0 4\n");
    CHECK(emit_graph(g) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(parse_graph(emit_graph(g)) == g);
}

TEST_CASE("parse(emit(G)) == G") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = gen::gnp(1 + seed % 30, 0.2, seed);
        CHECK(parse_graph(emit_graph(g)) == g);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line() == 0 ? 999 : e.line();
        }
        return 0;
    };
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
    CHECK(line_of("3 1\n0 7\n") == 2);
    CHECK(line_of("3 1\n0 x\n") == 2);
    CHECK(line_of("3 2\n0 1\n") != 0);
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
    CHECK(line_of("") != 0);
}

TEST_CASE("graph constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), std::invalid_argument);
}
