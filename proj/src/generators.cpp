#include "vcq/generators.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "vcq/errors.hpp"
#include "vcq/flow.hpp"

namespace vcq::gen {

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
    return Graph(n, edges);
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

Graph wheel(std::size_t rim) {
    if (rim < 3) throw std::invalid_argument("wheel needs a rim of at least 3");
    std::vector<Edge> edges;
    for (NodeId i = 1; i <= rim; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, static_cast<NodeId>(i % rim + 1));
    }
    return Graph(rim + 1, edges);
}

Graph hypercube(std::size_t dim) {
    if (dim > 20) throw std::invalid_argument("hypercube dimension too large");
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < dim; ++b) {
            const NodeId w = v ^ (NodeId{1} << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(n, edges);
}

Graph bridged_cliques(std::size_t clique, std::size_t bridges) {
    if (bridges > clique) throw std::invalid_argument("more bridges than clique nodes");
    std::vector<Edge> edges;
    for (std::size_t side = 0; side < 2; ++side) {
        const auto base = static_cast<NodeId>(side * clique);
        for (NodeId u = 0; u < clique; ++u) {
            for (NodeId v = u + 1; v < clique; ++v) edges.emplace_back(base + u, base + v);
        }
    }
    for (NodeId i = 0; i < bridges; ++i) edges.emplace_back(i, static_cast<NodeId>(clique + i));
    return Graph(2 * clique, edges);
}

Graph clique_chain(std::size_t count, std::size_t q, std::size_t bridges) {
    if (count == 0 || q < 2 || bridges > q) throw std::invalid_argument("bad clique-chain parameters");
    std::vector<Edge> edges;
    for (std::size_t c = 0; c < count; ++c) {
        const auto base = static_cast<NodeId>(c * q);
        for (NodeId u = 0; u < q; ++u) {
            for (NodeId v = u + 1; v < q; ++v) edges.emplace_back(base + u, base + v);
        }
        if (c + 1 < count) {
            for (NodeId j = 0; j < bridges; ++j) {
                edges.emplace_back(static_cast<NodeId>(base + q - 1 - j), static_cast<NodeId>(base + q + j));
            }
        }
    }
    return Graph(count * q, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed, std::size_t min_kappa, std::size_t max_attempts) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (uniform01(rng) < p) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        if (min_kappa == 0) return g;
        if (g.min_degree() < min_kappa) continue;
        if (global_connectivity(g, min_kappa).kappa >= min_kappa) return g;
    }
    throw Error("gnp: no " + std::to_string(min_kappa) + "-connected draw within " + std::to_string(max_attempts) +
                " attempts");
}

namespace {

std::size_t to_size(const std::string& word) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw std::invalid_argument("expected a non-negative integer, got \"" + word + "\"");
    }
    return out;
}

double to_double(const std::string& word) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(word, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != word.size() || word.empty()) throw std::invalid_argument("expected a number, got \"" + word + "\"");
    return out;
}

void expect_args(std::span<const std::string> words, std::size_t lo, std::size_t hi) {
    if (words.size() - 1 < lo || words.size() - 1 > hi) {
        throw std::invalid_argument("wrong number of arguments for family \"" + words[0] + "\"");
    }
}

}  // namespace

Graph by_name(std::span<const std::string> words) {
    if (words.empty()) throw std::invalid_argument("missing graph family");
    const std::string& family = words[0];
    if (family == "complete") {
        expect_args(words, 1, 1);
        return complete(to_size(words[1]));
    }
    if (family == "cycle") {
        expect_args(words, 1, 1);
        return cycle(to_size(words[1]));
    }
    if (family == "path") {
        expect_args(words, 1, 1);
        return path(to_size(words[1]));
    }
    if (family == "star") {
        expect_args(words, 1, 1);
        return star(to_size(words[1]));
    }
    if (family == "petersen") {
        expect_args(words, 0, 0);
        return petersen();
    }
    if (family == "wheel") {
        expect_args(words, 1, 1);
        return wheel(to_size(words[1]));
    }
    if (family == "hypercube") {
        expect_args(words, 1, 1);
        return hypercube(to_size(words[1]));
    }
    if (family == "bridged-cliques") {
        expect_args(words, 2, 2);
        return bridged_cliques(to_size(words[1]), to_size(words[2]));
    }
    if (family == "clique-chain") {
        expect_args(words, 3, 3);
        return clique_chain(to_size(words[1]), to_size(words[2]), to_size(words[3]));
    }
    if (family == "gnp") {
        expect_args(words, 3, 4);
        const std::size_t min_kappa = words.size() == 5 ? to_size(words[4]) : 0;
        return gnp(to_size(words[1]), to_double(words[2]), to_size(words[3]), min_kappa);
    }
    throw std::invalid_argument("unknown graph family \"" + family + "\"");
}

}  // namespace vcq::gen
