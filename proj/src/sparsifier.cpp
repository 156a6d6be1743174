#include "vcq/sparsifier.hpp"

#include <queue>
#include <utility>

namespace vcq {

std::vector<std::vector<Edge>> ni_forests(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::uint8_t> scanned(n, 0);
    std::vector<std::vector<Edge>> forests;

    // Max-heap on (rank, -id); stale entries are skipped on pop.
    using Entry = std::pair<std::size_t, std::int64_t>;
    std::priority_queue<Entry> heap;
    for (NodeId v = 0; v < n; ++v) heap.emplace(0, -static_cast<std::int64_t>(v));

    while (!heap.empty()) {
        const auto [r, neg] = heap.top();
        heap.pop();
        const auto x = static_cast<NodeId>(-neg);
        if (scanned[x] || r != rank[x]) continue;
        // Edges towards scanned nodes were assigned when those nodes were scanned.
        for (NodeId y : g.neighbors(x)) {
            if (scanned[y]) continue;
            const std::size_t forest = rank[y];
            if (forests.size() <= forest) forests.resize(forest + 1);
            forests[forest].emplace_back(x, y);
            ++rank[y];
            heap.emplace(rank[y], -static_cast<std::int64_t>(y));
        }
        scanned[x] = 1;
    }
    return forests;
}

Graph ni_certificate(const Graph& g, std::size_t k) {
    const auto forests = ni_forests(g);
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < forests.size() && i < k + 1; ++i) {
        kept.insert(kept.end(), forests[i].begin(), forests[i].end());
    }
    return Graph(g.n(), kept);
}

}  // namespace vcq
