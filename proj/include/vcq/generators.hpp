#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "vcq/graph.hpp"

namespace vcq::gen {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
// Hub 0 joined to leaves 1..n.
Graph star(std::size_t leaves);
Graph petersen();
// Hub 0 plus rim cycle 1..rim.
Graph wheel(std::size_t rim);
Graph hypercube(std::size_t dim);
// Cliques X = [0, c) and Y = [c, 2c) joined by bridges (i, c + i) for i < b.
Graph bridged_cliques(std::size_t clique, std::size_t bridges);
// `count` cliques of size q in a row; bridge j joins node q-1-j of one clique to
// node j of the next (j < b).
Graph clique_chain(std::size_t count, std::size_t q, std::size_t bridges);

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// G(n, p) from a mt19937_64 stream seeded with `seed`. When min_kappa > 0 the
// stream keeps drawing graphs until global connectivity reaches min_kappa;
// throws vcq::Error after max_attempts draws.
Graph gnp(std::size_t n, double p, std::uint64_t seed, std::size_t min_kappa = 0, std::size_t max_attempts = 10000);

// Named-family front end used by the CLI and the test corpus:
//   complete n | cycle n | path n | star n | petersen | wheel n | hypercube d |
//   bridged-cliques c b | clique-chain r q b | gnp n p seed [min_kappa]
// Throws std::invalid_argument on unknown families or bad arguments.
Graph by_name(std::span<const std::string> words);

}  // namespace vcq::gen
