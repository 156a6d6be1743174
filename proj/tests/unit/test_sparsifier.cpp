#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "vcq/flow.hpp"
#include "vcq/generators.hpp"
#include "vcq/sparsifier.hpp"

using namespace vcq;
using namespace vcq::testing;

namespace {

bool acyclic(std::size_t n, const std::vector<Edge>& forest) {
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : forest) {
        const NodeId a = find(e.u);
        const NodeId b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

}  // namespace

TEST_CASE("a tree is its own certificate") {
    const Graph tree = gen::star(6);
    for (std::size_t k = 0; k < 4; ++k) CHECK(ni_certificate(tree, k) == tree);
}

TEST_CASE("K5 with k=1 keeps two forests") {
    const Graph h = ni_certificate(gen::complete(5), 1);
    CHECK(h.m() <= 8);
    CHECK(global_connectivity(h, 5).kappa >= 1);
}

TEST_CASE("forests partition E, are acyclic and maximal") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen::gnp(25, 0.3, 40 + seed);
        const auto forests = ni_forests(g);
        std::size_t total = 0;
        std::vector<Edge> earlier;
        for (const auto& f : forests) {
            CHECK(acyclic(g.n(), f));
            total += f.size();
            // every edge outside E_1..E_i closes a cycle in E_i
            for (std::size_t later = &f - forests.data() + 1; later < forests.size(); ++later) {
                for (const Edge& e : forests[later]) {
                    std::vector<Edge> grown = f;
                    grown.push_back(e);
                    CHECK_FALSE(acyclic(g.n(), grown));
                }
            }
        }
        CHECK(total == g.m());
    }
}

TEST_CASE("certificate preserves capped connectivity") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Graph g = gen::gnp(30, 0.4, 90 + seed);
        const std::size_t k = 3;
        const Graph h = ni_certificate(g, k);
        CHECK(h.m() <= (k + 1) * (g.n() - 1));
        ReferenceFlow fg(g);
        ReferenceFlow fh(h);
        for (NodeId s = 0; s < g.n(); ++s)
            for (NodeId t = s + 1; t < g.n(); ++t) CHECK(fh.kappa(s, t, k + 1) == fg.kappa(s, t, k + 1));
    }
}
