#include <doctest.h>

#include "vcq/errors.hpp"
#include "vcq/flow.hpp"
#include "vcq/generators.hpp"

using namespace vcq;

TEST_CASE("named families") {
    CHECK(gen::complete(6).m() == 15);
    CHECK(gen::cycle(5).m() == 5);
    CHECK(gen::path(4).m() == 3);
    CHECK(gen::star(4).degree(0) == 4);
    CHECK(gen::petersen().m() == 15);
    CHECK(gen::wheel(6).n() == 7);
    CHECK(gen::wheel(6).degree(0) == 6);
    CHECK(gen::hypercube(4).m() == 32);
    CHECK(gen::bridged_cliques(6, 3).m() == 33);
    const Graph chain = gen::clique_chain(3, 5, 2);
    CHECK(chain.n() == 15);
    CHECK(chain.m() == 3 * 10 + 2 * 2);
    CHECK(global_connectivity(chain, 5).kappa == 2);
}

TEST_CASE("by_name") {
    const std::vector<std::string> words{"bridged-cliques", "6", "3"};
    CHECK(gen::by_name(words) == gen::bridged_cliques(6, 3));
    CHECK_THROWS_AS(gen::by_name(std::vector<std::string>{"moebius", "3"}), std::invalid_argument);
    CHECK_THROWS_AS(gen::by_name(std::vector<std::string>{"cycle"}), std::invalid_argument);
}

TEST_CASE("gnp is reproducible and honors min_kappa") {
    CHECK(gen::gnp(30, 0.2, 9) == gen::gnp(30, 0.2, 9));
    CHECK_FALSE(gen::gnp(30, 0.2, 9) == gen::gnp(30, 0.2, 10));
    CHECK(global_connectivity(gen::gnp(30, 0.25, 4, 3), 4).kappa >= 3);
    CHECK_THROWS_AS(gen::gnp(10, 0.0, 1, 1, 5), Error);
}

TEST_CASE("uniform01 bit recipe") {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    const double u = gen::uniform01(a);
    CHECK(u == static_cast<double>(b() >> 11) / 9007199254740992.0);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
