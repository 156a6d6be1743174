#include <doctest.h>

#include "fixtures.hpp"
#include "vcq/errors.hpp"
#include "vcq/generators.hpp"
#include "vcq/oracle_io.hpp"

using namespace vcq;
using namespace vcq::testing;

namespace {

template <class O>
void same_answers(const O& a, const Oracle& loaded) {
    const O& b = std::get<O>(loaded);
    CHECK(a == b);
    for (NodeId s = 0; s < a.n(); ++s)
        for (NodeId t = 0; t < a.n(); ++t)
            if (s != t) {
                const auto x = a.query_cut(s, t);
                const auto y = b.query_cut(s, t);
                REQUIRE(x.has_value() == y.has_value());
                if (x) CHECK(a.cut(*x) == b.cut(*y));
            }
}

}  // namespace

TEST_CASE("round trip") {
    const Graph g = gen::clique_chain(4, 5, 3);
    const KConnOracle k = KConnOracle::build(g, 3);
    same_answers(k, deserialize(serialize(k)));
    const GeneralOracle h = GeneralOracle::build(gen::gnp(30, 0.2, 8), 3);
    same_answers(h, deserialize(serialize(h)));
}

TEST_CASE("header layout") {
    const std::string bytes = serialize(KConnOracle::build(gen::cycle(5), 2));
    CHECK(bytes.substr(0, 4) == "VCQO");
    CHECK(static_cast<unsigned char>(bytes[4]) == 1);
    CHECK(static_cast<unsigned char>(bytes[8]) == 1);
    CHECK(static_cast<unsigned char>(bytes[9]) == 2);
    CHECK(static_cast<unsigned char>(bytes[13]) == 5);
    const std::string general = serialize(GeneralOracle::build(gen::cycle(5), 2));
    CHECK(static_cast<unsigned char>(general[8]) == 2);
}

TEST_CASE("builds are deterministic") {
    const Graph g = gen::gnp(40, 0.2, 3, 3);
    CHECK(serialize(KConnOracle::build(g, 3, {std::nullopt, 1})) == serialize(KConnOracle::build(g, 3, {std::nullopt, 4})));
    CHECK(serialize(GeneralOracle::build(g, 4, {1})) == serialize(GeneralOracle::build(g, 4, {3})));
}

TEST_CASE("corrupt files are rejected") {
    const std::string good = serialize(KConnOracle::build(b6(), 3));
    CHECK_THROWS_AS(deserialize("XXXX" + good.substr(4)), FormatError);
    std::string version = good;
    version[4] = 9;
    CHECK_THROWS_AS(deserialize(version), FormatError);
    std::string mode = good;
    mode[8] = 7;
    CHECK_THROWS_AS(deserialize(mode), FormatError);
    for (std::size_t cut = 0; cut < good.size(); cut += 7) CHECK_THROWS_AS(deserialize(good.substr(0, cut)), FormatError);
    CHECK_THROWS_AS(deserialize(good + "x"), FormatError);
}
