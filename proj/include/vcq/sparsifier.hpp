#pragma once

#include <cstddef>
#include <vector>

#include "vcq/graph.hpp"

namespace vcq {

// Nagamochi-Ibaraki forest decomposition by maximum-adjacency scanning.
// Returns E_1, E_2, ... where E_i is a maximal spanning forest of
// G - (E_1 u ... u E_{i-1}); every edge lands in exactly one forest.
// Ties between unscanned nodes go to the lowest id.
std::vector<std::vector<Edge>> ni_forests(const Graph& g);

// Union of the first k+1 forests: at most (k+1)(n-1) edges, and
// min(kappa_H(s,t), k+1) = min(kappa_G(s,t), k+1) for every pair.
Graph ni_certificate(const Graph& g, std::size_t k);

}  // namespace vcq
