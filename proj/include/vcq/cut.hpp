#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vcq/graph.hpp"

namespace vcq {

using CutId = std::uint32_t;
inline constexpr CutId kNoCut = 0xFFFFFFFFu;

// Mixed cut: vertices plus (usually zero or one) edges. Both lists sorted.
struct Cut {
    std::vector<NodeId> vertices;
    std::vector<Edge> edges;

    Cut() = default;
    Cut(std::vector<NodeId> vs, std::vector<Edge> es);

    std::size_t size() const noexcept { return vertices.size() + edges.size(); }

    friend bool operator==(const Cut&, const Cut&) = default;
    friend auto operator<=>(const Cut&, const Cut&) = default;
};

// "2 3 E(0,1)": vertices first, then edges.
std::string format_cut(const Cut& cut);

}  // namespace vcq
