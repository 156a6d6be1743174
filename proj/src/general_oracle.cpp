#include "vcq/general_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vcq/flow.hpp"
#include "vcq/parallel.hpp"
#include "vcq/sparsifier.hpp"

namespace vcq {

namespace {

struct PairAnswer {
    std::size_t kappa = 0;
    std::optional<Cut> cut;
};

}  // namespace

GeneralOracle GeneralOracle::build(const Graph& g, std::size_t k, const GeneralBuildOptions& options) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (k >= 255) throw std::invalid_argument("k must be below 255");
    const std::size_t n = g.n();
    const Graph h = ni_certificate(g, k);

    const unsigned threads = resolve_threads(options.threads);
    std::vector<SplitNetwork> nets;
    nets.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) nets.emplace_back(h);

    // rows[s][t - s - 1] for t > s
    std::vector<std::vector<PairAnswer>> rows(n);
    parallel_for(n, threads, [&](unsigned worker, std::size_t si) {
        const auto s = static_cast<NodeId>(si);
        SplitNetwork& net = nets[worker];
        auto& row = rows[s];
        row.resize(n - s - 1);
        for (NodeId t = s + 1; t < n; ++t) {
            PairAnswer& out = row[t - s - 1];
            if (h.has_edge(s, t)) {
                CutResult r = net.adjacent(s, t, k + 1);
                out.kappa = r.kappa;
                out.cut = std::move(r.cut);
                continue;
            }
            CutResult r = net.nonadjacent(s, t, k + 1, true);
            out.kappa = r.kappa;
            if (!r.cut) continue;
            const NodeSet& from_s = *r.source_side;
            const NodeSet& from_t = *r.sink_side;
            const bool take_s = from_s.size() < from_t.size() || (from_s.size() == from_t.size() && from_s <= from_t);
            if (take_s) {
                out.cut = std::move(r.cut);
            } else {
                const NodeSet bd = boundary(h, from_t);
                out.cut = Cut(std::vector<NodeId>(bd.begin(), bd.end()), {});
            }
        }
    });

    GeneralOracle o;
    o.k_ = k;
    o.n_ = n;
    o.kappa_.assign(n * n, static_cast<std::uint8_t>(k + 1));
    o.cut_ids_.assign(n * n, kNoCut);
    std::map<Cut, CutId> ids;
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            PairAnswer& a = rows[s][t - s - 1];
            const auto kappa = static_cast<std::uint8_t>(a.kappa);
            o.kappa_[s * n + t] = o.kappa_[t * n + s] = kappa;
            if (!a.cut) continue;
            auto [it, inserted] = ids.emplace(*a.cut, static_cast<CutId>(o.cuts_.size()));
            if (inserted) o.cuts_.push_back(std::move(*a.cut));
            o.cut_ids_[s * n + t] = o.cut_ids_[t * n + s] = it->second;
        }
        rows[s].clear();
        rows[s].shrink_to_fit();
    }
    return o;
}

GeneralOracle GeneralOracle::from_parts(std::size_t k, std::size_t n, std::vector<Cut> cuts,
                                        std::vector<std::uint8_t> kappa, std::vector<CutId> cut_ids) {
    if (kappa.size() != n * n || cut_ids.size() != n * n) throw std::invalid_argument("matrix must be n x n");
    for (std::size_t i = 0; i < n * n; ++i) {
        if (kappa[i] > k + 1) throw std::invalid_argument("matrix kappa exceeds k+1");
        const bool has_cut = cut_ids[i] != kNoCut;
        if (has_cut && cut_ids[i] >= cuts.size()) throw std::invalid_argument("matrix cut id out of range");
        if (i / n != i % n && has_cut != (kappa[i] <= k)) {
            throw std::invalid_argument("matrix entry must hold a cut exactly when kappa <= k");
        }
    }
    GeneralOracle o;
    o.k_ = k;
    o.n_ = n;
    o.cuts_ = std::move(cuts);
    o.kappa_ = std::move(kappa);
    o.cut_ids_ = std::move(cut_ids);
    return o;
}

std::size_t GeneralOracle::index(NodeId s, NodeId t) const {
    if (s >= n_ || t >= n_) throw std::out_of_range("query node out of range");
    if (s == t) throw std::invalid_argument("query endpoints must differ");
    return static_cast<std::size_t>(s) * n_ + t;
}

std::size_t GeneralOracle::capped_kappa(NodeId s, NodeId t) const { return kappa_[index(s, t)]; }

std::optional<CutId> GeneralOracle::query_cut(NodeId s, NodeId t) const {
    const CutId id = cut_ids_[index(s, t)];
    if (id == kNoCut) return std::nullopt;
    return id;
}

std::size_t GeneralOracle::adjacent_cut_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(cuts_.begin(), cuts_.end(), [](const Cut& c) { return !c.edges.empty(); }));
}

std::size_t GeneralOracle::nonadjacent_cut_count() const noexcept { return cuts_.size() - adjacent_cut_count(); }

std::size_t GeneralOracle::space_entries() const noexcept {
    std::size_t total = 2 * n_ * n_;
    for (const Cut& c : cuts_) total += c.vertices.size() + 2 * c.edges.size();
    return total;
}

}  // namespace vcq
