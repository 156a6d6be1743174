#include "vcq/kconn_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "vcq/errors.hpp"
#include "vcq/parallel.hpp"

namespace vcq {

namespace {

void check_pair(std::size_t n, NodeId s, NodeId t) {
    if (s >= n || t >= n) throw std::out_of_range("query node out of range");
    if (s == t) throw std::invalid_argument("query endpoints must differ");
}

NotKConnected witness_error(NodeId s, NodeId t, std::size_t kappa, std::size_t k) {
    return NotKConnected("not " + std::to_string(k) + "-connected: kappa(" + std::to_string(s) + "," +
                             std::to_string(t) + ") = " + std::to_string(kappa),
                         std::make_pair(s, t));
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

}  // namespace

std::optional<NodeSet> compute_min_small_tight_set(SplitNetwork& net, const Graph& g, std::size_t k, NodeId s,
                                                   TightSearch search) {
    const std::size_t n = g.n();
    if (n < 2) return std::nullopt;
    // Any small tight set A with s in A satisfies |A u boundary(A)| <= (n+k)/2, so
    // this many targets other than s include one in R_s*. For such a target R_st
    // equals R_s, and every small R_st contains R_s and is contained in it.
    const std::size_t limit =
        search == TightSearch::kEarlyExit ? std::min(n - 1, (n + k) / 2 + 1) : n - 1;

    std::optional<NodeSet> best;
    const std::size_t start = (s + (n + 1) / 2) % n;
    std::size_t examined = 0;
    for (std::size_t i = 0; i < n && examined < limit; ++i) {
        const auto t = static_cast<NodeId>((start + i) % n);
        if (t == s) continue;
        ++examined;
        if (g.has_edge(s, t)) continue;
        CutResult r = net.nonadjacent(s, t, k + 1);
        if (r.kappa < k) throw witness_error(s, t, r.kappa, k);
        if (r.kappa != k || !is_small(n, r.source_side->size(), k)) continue;
        if (!best || r.source_side->size() < best->size() ||
            (r.source_side->size() == best->size() && *r.source_side < *best)) {
            best = std::move(r.source_side);
        }
        if (search == TightSearch::kEarlyExit) break;
    }
    return best;
}

std::optional<NodeSet> compute_min_small_tight_set(const Graph& g, std::size_t k, NodeId s, TightSearch search) {
    SplitNetwork net(g);
    return compute_min_small_tight_set(net, g, k, s, search);
}

std::vector<std::uint32_t> degeneracy_coloring(const Graph& h, std::size_t d) {
    const std::size_t n = h.n();
    std::vector<std::size_t> degree(n);
    std::set<std::pair<std::size_t, NodeId>> queue;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = h.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<std::uint8_t> removed(n, 0);
    std::vector<NodeId> order;
    order.reserve(n);
    while (!queue.empty()) {
        const auto [deg, v] = *queue.begin();
        if (deg > d) {
            throw std::invalid_argument("graph is not " + std::to_string(d) + "-degenerate: remaining minimum degree " +
                                        std::to_string(deg));
        }
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (NodeId w : h.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            queue.emplace(--degree[w], w);
        }
    }

    constexpr std::uint32_t kUncolored = 0xFFFFFFFFu;
    std::vector<std::uint32_t> color(n, kUncolored);
    std::vector<std::uint8_t> taken(d + 2, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId v = *it;
        std::fill(taken.begin(), taken.end(), 0);
        for (NodeId w : h.neighbors(v)) {
            if (color[w] != kUncolored && color[w] < taken.size()) taken[color[w]] = 1;
        }
        std::uint32_t c = 0;
        while (taken[c]) ++c;
        color[v] = c;
    }
    return color;
}

KConnOracle KConnOracle::build(const Graph& g, std::size_t k, const KConnBuildOptions& options) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const std::size_t n = g.n();
    if (n < 2) throw std::invalid_argument("graph needs at least two nodes");
    if (g.min_degree() < k) {
        throw NotKConnected("not " + std::to_string(k) + "-connected: minimum degree " +
                            std::to_string(g.min_degree()));
    }
    if (options.verify.value_or(n <= 300)) {
        const ConnectivityWitness w = global_connectivity(g, k);
        if (w.kappa < k) throw witness_error(w.s, w.t, w.kappa, k);
    }

    KConnOracle o;
    o.k_ = k;
    o.n_ = n;
    o.incident_.assign(n, kNoCut);
    o.records_.assign(n, SourceRecord{});

    // Degree-k nodes: their incident edges cut them from everything.
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) != k) continue;
        std::vector<Edge> edges;
        for (NodeId w : g.neighbors(v)) edges.emplace_back(v, w);
        o.incident_[v] = static_cast<CutId>(o.cuts_.size());
        o.cuts_.emplace_back(std::vector<NodeId>{}, std::move(edges));
    }

    const unsigned threads = resolve_threads(options.threads);
    std::vector<SplitNetwork> nets;
    nets.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) nets.emplace_back(g);

    // Critical edges between nodes of degree > k.
    std::vector<Edge> candidates;
    for (const Edge& e : g.edges()) {
        if (o.incident_[e.u] == kNoCut && o.incident_[e.v] == kNoCut) candidates.push_back(e);
    }
    std::vector<std::optional<CutResult>> edge_results(candidates.size());
    parallel_for(candidates.size(), threads, [&](unsigned worker, std::size_t i) {
        edge_results[i] = nets[worker].adjacent(candidates[i].u, candidates[i].v, k + 1);
    });
    DisjointSets forest_check(n);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const CutResult& r = *edge_results[i];
        if (r.kappa < k) throw witness_error(candidates[i].u, candidates[i].v, r.kappa, k);
        if (r.kappa != k) continue;
        if (!forest_check.unite(candidates[i].u, candidates[i].v)) {
            throw InternalError("critical edges between nodes of degree > k form a cycle, contradicting Mader's "
                                "critical cycle theorem; the graph is not k-connected");
        }
        o.critical_.push_back({candidates[i], static_cast<CutId>(o.cuts_.size())});
        o.cuts_.push_back(*r.cut);
    }
    edge_results.clear();

    // R_s for every node outside K.
    std::vector<std::optional<NodeSet>> tight(n);
    parallel_for(n, threads, [&](unsigned worker, std::size_t i) {
        const auto s = static_cast<NodeId>(i);
        if (o.incident_[s] == kNoCut) tight[s] = compute_min_small_tight_set(nets[worker], g, k, s);
    });
    nets.clear();

    std::vector<NodeId> sources;
    std::vector<std::uint32_t> position(n, 0xFFFFFFFFu);
    for (NodeId s = 0; s < n; ++s) {
        if (tight[s]) {
            position[s] = static_cast<std::uint32_t>(sources.size());
            sources.push_back(s);
        }
    }

    // One cut per distinct boundary.
    std::map<Cut, CutId> boundary_ids;
    std::vector<NodeSet> boundaries(n);
    for (NodeId s : sources) {
        boundaries[s] = boundary(g, *tight[s]);
        Cut c(std::vector<NodeId>(boundaries[s].begin(), boundaries[s].end()), {});
        auto [it, inserted] = boundary_ids.emplace(c, static_cast<CutId>(o.cuts_.size()));
        if (inserted) o.cuts_.push_back(std::move(c));
        o.records_[s].cut = it->second;
    }

    // Conflict graph on S: a ~ b when a lies on the boundary of R_b (or vice versa).
    std::vector<Edge> conflicts;
    PairMap seen;
    for (NodeId b : sources) {
        for (NodeId a : boundaries[b]) {
            if (position[a] == 0xFFFFFFFFu) continue;
            const Edge e(position[a], position[b]);
            if (!seen.contains(e.u, e.v)) {
                seen.insert(e.u, e.v, 0);
                conflicts.push_back(e);
            }
        }
    }
    const Graph conflict_graph(sources.size(), conflicts);
    const std::vector<std::uint32_t> color = degeneracy_coloring(conflict_graph, 2 * k);
    const std::uint32_t colors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;

    for (std::uint32_t c = 0; c < colors; ++c) {
        std::vector<NodeSet> family;
        std::vector<NodeId> owners;
        for (std::size_t i = 0; i < sources.size(); ++i) {
            if (color[i] != c) continue;
            family.push_back(*tight[sources[i]]);
            owners.push_back(sources[i]);
        }
        LaminarForest forest;
        try {
            forest = LaminarForest::build(family, n);
        } catch (const NonLaminarError& e) {
            throw InternalError(std::string("independent set of R_s sets is not laminar: ") + e.what());
        }
        for (std::size_t i = 0; i < owners.size(); ++i) {
            o.records_[owners[i]].forest = c;
            o.records_[owners[i]].node = forest.node_of(i);
        }
        o.forests_.push_back(std::move(forest));
    }

    o.index_tables();
    return o;
}

KConnOracle KConnOracle::from_parts(std::size_t k, std::size_t n, std::vector<Cut> cuts, std::vector<CutId> incident,
                                    std::vector<CriticalEdge> critical, std::vector<SourceRecord> records,
                                    std::vector<LaminarForest> forests) {
    if (incident.size() != n || records.size() != n) throw std::invalid_argument("per-node tables must have n entries");
    auto valid_cut = [&](CutId id) { return id < cuts.size(); };
    for (CutId id : incident) {
        if (id != kNoCut && !valid_cut(id)) throw std::invalid_argument("incident cut id out of range");
    }
    for (const CriticalEdge& c : critical) {
        if (c.edge.v >= n || c.edge.u >= c.edge.v || !valid_cut(c.cut)) {
            throw std::invalid_argument("critical edge entry out of range");
        }
    }
    for (const SourceRecord& r : records) {
        if (!r.in_s()) continue;
        if (r.forest >= forests.size() || r.node >= forests[r.forest].size() || !valid_cut(r.cut)) {
            throw std::invalid_argument("source record out of range");
        }
    }
    for (const LaminarForest& f : forests) {
        if (f.universe() != n) throw std::invalid_argument("laminar forest universe differs from n");
    }
    for (const Cut& c : cuts) {
        for (NodeId v : c.vertices) {
            if (v >= n) throw std::invalid_argument("cut vertex out of range");
        }
        for (const Edge& e : c.edges) {
            if (e.v >= n) throw std::invalid_argument("cut edge out of range");
        }
    }
    KConnOracle o;
    o.k_ = k;
    o.n_ = n;
    o.cuts_ = std::move(cuts);
    o.incident_ = std::move(incident);
    o.critical_ = std::move(critical);
    o.records_ = std::move(records);
    o.forests_ = std::move(forests);
    o.index_tables();
    return o;
}

void KConnOracle::index_tables() {
    critical_index_ = PairMap(critical_.size());
    for (const CriticalEdge& c : critical_) critical_index_.insert(c.edge.u, c.edge.v, c.cut);
    boundary_ = PairMap(n_ * k_);
    for (NodeId s = 0; s < n_; ++s) {
        if (!records_[s].in_s()) continue;
        for (NodeId v : cuts_[records_[s].cut].vertices) boundary_.insert(s, v, 0);
    }
}

std::optional<CutId> KConnOracle::via_source(NodeId s, NodeId t) const {
    const SourceRecord& r = records_[s];
    if (!r.in_s()) return std::nullopt;
    if (forests_[r.forest].contains(r.node, t)) return std::nullopt;
    if (boundary_.contains(s, t)) return std::nullopt;
    return r.cut;
}

std::optional<CutId> KConnOracle::query_cut(NodeId s, NodeId t) const {
    check_pair(n_, s, t);
    if (incident_[s] != kNoCut) return incident_[s];
    if (incident_[t] != kNoCut) return incident_[t];
    // Adjacent pairs never pass the R_s tests (t would sit in R_s or on its
    // boundary), so a miss here leaves only the non-adjacent conditions.
    if (const CutId id = critical_index_.find(std::min(s, t), std::max(s, t)); id != PairMap::kMissing) return id;
    if (auto id = via_source(s, t)) return id;
    return via_source(t, s);
}

std::size_t KConnOracle::k_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(incident_.begin(), incident_.end(), [](CutId c) { return c != kNoCut; }));
}

std::size_t KConnOracle::s_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [](const SourceRecord& r) { return r.in_s(); }));
}

std::size_t KConnOracle::space_entries() const noexcept {
    std::size_t total = 0;
    for (const Cut& c : cuts_) total += c.vertices.size() + 2 * c.edges.size();
    total += incident_.size();
    total += 3 * critical_.size();
    total += 3 * records_.size();
    for (const LaminarForest& f : forests_) total += 3 * f.size() + f.universe();
    total += boundary_.size();
    return total;
}

bool operator==(const KConnOracle& a, const KConnOracle& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.cuts_ == b.cuts_ && a.incident_ == b.incident_ &&
           a.critical_ == b.critical_ && a.records_ == b.records_ && a.forests_ == b.forests_;
}

}  // namespace vcq
