#pragma once

#include <random>
#include <vector>

#include "vcq/generators.hpp"
#include "vcq/graph.hpp"

namespace vcq::testing {

// Two K_6 joined by x_i y_i, i = 1..3; x_i is node i-1 and y_i is node 5+i.
inline Graph b6() { return gen::bridged_cliques(6, 3); }
inline NodeId x(unsigned i) { return i - 1; }
inline NodeId y(unsigned i) { return 5 + i; }

inline NodeSet random_subset(std::size_t n, std::mt19937_64& rng) {
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v)
        if (rng() & 1U) members.push_back(v);
    return NodeSet(n, members);
}

}  // namespace vcq::testing
