#include "vcq/cut.hpp"

#include <algorithm>

namespace vcq {

Cut::Cut(std::vector<NodeId> vs, std::vector<Edge> es) : vertices(std::move(vs)), edges(std::move(es)) {
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
}

std::string format_cut(const Cut& cut) {
    std::string out;
    for (NodeId v : cut.vertices) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    for (const Edge& e : cut.edges) {
        if (!out.empty()) out += ' ';
        out += "E(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
    return out;
}

}  // namespace vcq
