#include "vcq/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "vcq/flow.hpp"
#include "vcq/pair_map.hpp"
#include "vcq/sparsifier.hpp"

namespace vcq::verify {

namespace {

// BFS from s avoiding blocked nodes and removed edges.
bool reaches(const Graph& g, NodeId s, NodeId t, const std::vector<std::uint8_t>& blocked, const PairMap& removed) {
    std::vector<std::uint8_t> seen(g.n(), 0);
    std::vector<NodeId> queue{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const NodeId x = queue[i];
        if (x == t) return true;
        for (NodeId y : g.neighbors(x)) {
            if (seen[y] || blocked[y]) continue;
            if (removed.size() != 0 && removed.contains(std::min(x, y), std::max(x, y))) continue;
            seen[y] = 1;
            queue.push_back(y);
        }
    }
    return false;
}

std::string describe_set(const NodeSet& x) {
    std::string out = "{";
    for (NodeId v : x) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    return out + "}";
}

UncrossingReport classify(const Graph& g, NodeId s, NodeId a, NodeId b, const NodeSet& set_a, const NodeSet& set_b,
                          std::size_t kappa_sa, std::size_t kappa_sb) {
    const NodeSet a_star = node_complement(g, set_a);
    const NodeSet b_star = node_complement(g, set_b);
    const NodeSet a_bd = boundary(g, set_a);
    const NodeSet b_bd = boundary(g, set_b);

    const bool a_in_both_stars = a_star.contains(a) && b_star.contains(a);
    const bool ia = a_in_both_stars;
    const bool ib = !a_in_both_stars && a_star.contains(b) && b_star.contains(b);
    const bool ii = a_star.contains(a) && set_b.contains(a) && b_star.contains(b) && set_a.contains(b);
    const bool iii = (b_bd.contains(a) && b_star.contains(b) && set_a.contains(b)) ||
                     (a_bd.contains(b) && a_star.contains(a) && set_b.contains(a)) ||
                     (b_bd.contains(a) && a_bd.contains(b));

    UncrossingReport report;
    if (ia) report.matched.push_back(UncrossingCase::kIA);
    if (ib) report.matched.push_back(UncrossingCase::kIB);
    if (ii) report.matched.push_back(UncrossingCase::kII);
    if (iii) report.matched.push_back(UncrossingCase::kIII);

    const NodeSet meet = set_intersection(set_a, set_b);
    const NodeSet join = set_union(set_a, set_b);
    auto require = [&](bool holds, const char* what) {
        if (holds) return;
        report.conclusions_hold = false;
        if (!report.detail.empty()) report.detail += "; ";
        report.detail += what;
    };
    if (ia) {
        require(kappa_sa == kappa_sb, "(ia) kappa(s,a) != kappa(s,b)");
        require(is_st_tight(g, meet, s, a, kappa_sa), "(ia) A n B not sa-tight");
        require(is_st_tight(g, join, s, a, kappa_sa), "(ia) A u B not sa-tight");
        require(is_st_tight(g, meet, s, b, kappa_sb), "(ia) A n B not sb-tight");
    }
    if (ib) {
        require(is_st_tight(g, meet, s, a, kappa_sa), "(ib) A n B not sa-tight");
        require(is_st_tight(g, join, s, b, kappa_sb), "(ib) A u B not sb-tight");
    }
    if (ii) {
        require(is_st_tight(g, set_intersection(a_star, set_b), a, s, kappa_sa), "(ii) A* n B not as-tight");
        require(is_st_tight(g, set_intersection(b_star, set_a), b, s, kappa_sb), "(ii) B* n A not bs-tight");
    }
    if (report.matched.size() != 1) {
        if (!report.detail.empty()) report.detail += "; ";
        report.detail += std::to_string(report.matched.size()) + " cases matched";
    }
    return report;
}

struct SideSets {
    std::size_t kappa = 0;
    NodeSet forward;   // R_sx
    NodeSet backward;  // R_xs
};

SideSets sides(SplitNetwork& net, const Graph& g, NodeId s, NodeId x) {
    CutResult r = net.nonadjacent(s, x, g.n(), true);
    return {r.kappa, std::move(*r.source_side), std::move(*r.sink_side)};
}

bool corollary_holds(const Graph& g, NodeId a, NodeId b, const SideSets& sa, const SideSets& sb) {
    const NodeSet& set_a = sa.forward;
    const NodeSet& set_b = sb.forward;
    const bool nested = set_a.is_subset_of(set_b);
    const bool swapped = sa.backward.is_subset_of(set_b) && sa.backward != set_b && sb.backward.is_subset_of(set_a) &&
                         sb.backward != set_a;
    const bool touching = boundary(g, set_b).contains(a) || boundary(g, set_a).contains(b);
    return nested || swapped || touching;
}

template <class Oracle>
EquivalenceReport equivalence(const Oracle& oracle, const Graph& g, std::size_t k, std::size_t enumeration_limit) {
    EquivalenceReport report;
    if (oracle.n() != g.n()) {
        report.mismatches = 1;
        report.detail = "oracle and graph node counts differ";
        return report;
    }
    SplitNetwork net(g);
    auto fail = [&](NodeId s, NodeId t, const std::string& what) {
        if (report.mismatches++ == 0) {
            report.witness = std::make_pair(s, t);
            report.detail = "pair (" + std::to_string(s) + "," + std::to_string(t) + "): " + what;
        }
    };
    for (NodeId s = 0; s < g.n(); ++s) {
        for (NodeId t = 0; t < g.n(); ++t) {
            if (s == t) continue;
            ++report.pairs;
            std::size_t kappa = 0;
            if (g.n() <= enumeration_limit) {
                kappa = std::min(brute_kappa_enumerate(g, s, t, k).value_or(k + 1), k + 1);
            } else {
                kappa = net.local(s, t, k + 1).kappa;
            }
            const bool con = oracle.query_con(s, t);
            const std::optional<CutId> id = oracle.query_cut(s, t);
            if (con != (kappa >= k + 1)) {
                fail(s, t, "con answer " + std::string(con ? "true" : "false") + " but kappa = " + std::to_string(kappa));
                continue;
            }
            if (con == id.has_value()) {
                fail(s, t, "con and cut answers disagree");
                continue;
            }
            if (!id) continue;
            ++report.cuts_checked;
            const Cut& c = oracle.cut(*id);
            if (c.size() != kappa) {
                fail(s, t, "cut size " + std::to_string(c.size()) + " != kappa " + std::to_string(kappa));
                continue;
            }
            try {
                if (!validate_cut(g, s, t, c)) fail(s, t, "cut " + format_cut(c) + " does not separate the pair");
            } catch (const std::invalid_argument& e) {
                fail(s, t, std::string("invalid cut: ") + e.what());
            }
        }
    }
    return report;
}

}  // namespace

std::optional<std::size_t> brute_kappa_enumerate(const Graph& g, NodeId s, NodeId t, std::size_t max_vertices) {
    if (s == t) throw std::invalid_argument("s and t must differ");
    const bool adjacent = g.has_edge(s, t);
    PairMap removed;
    if (adjacent) removed.insert(std::min(s, t), std::max(s, t), 0);

    std::vector<NodeId> pool;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (v != s && v != t) pool.push_back(v);
    }
    std::vector<std::uint8_t> blocked(g.n(), 0);
    const std::size_t top = std::min(max_vertices, pool.size());
    for (std::size_t size = 0; size <= top; ++size) {
        // Lexicographic walk over size-element index combinations.
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            for (std::size_t i : pick) blocked[pool[i]] = 1;
            const bool connected = reaches(g, s, t, blocked, removed);
            for (std::size_t i : pick) blocked[pool[i]] = 0;
            if (!connected) return size + (adjacent ? 1 : 0);

            std::size_t i = size;
            while (i > 0 && pick[i - 1] == pool.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::size_t brute_kappa_flow(const Graph& g, NodeId s, NodeId t) {
    SplitNetwork net(g);
    return net.local(s, t, g.n()).kappa;
}

std::size_t brute_kappa(const Graph& g, NodeId s, NodeId t, std::size_t enumeration_limit) {
    if (g.n() <= enumeration_limit) return *brute_kappa_enumerate(g, s, t);
    return brute_kappa_flow(g, s, t);
}

bool validate_cut(const Graph& g, NodeId s, NodeId t, const Cut& cut) {
    std::vector<std::uint8_t> blocked(g.n(), 0);
    for (NodeId v : cut.vertices) {
        if (v == s || v == t) throw std::invalid_argument("cut contains a query endpoint");
        if (v >= g.n()) throw std::invalid_argument("cut vertex out of range");
        blocked[v] = 1;
    }
    PairMap removed;
    for (const Edge& e : cut.edges) removed.insert(e.u, e.v, 0);
    return !reaches(g, s, t, blocked, removed);
}

bool is_st_tight(const Graph& g, const NodeSet& x, NodeId s, NodeId t, std::size_t kappa) {
    if (!x.contains(s)) return false;
    const NodeSet bd = boundary(g, x);
    return bd.size() == kappa && !x.contains(t) && !bd.contains(t);
}

TightIntersectionReport check_tight_intersections(const Graph& g, std::size_t k, const NodeSet& a, const NodeSet& b) {
    TightIntersectionReport report;
    const NodeSet a_cross = set_intersection(a, node_complement(g, b));
    const NodeSet b_cross = set_intersection(b, node_complement(g, a));
    if (!a_cross.empty() && !b_cross.empty()) {
        report.crossing_hypothesis = true;
        report.crossing_holds = is_tight(g, a_cross, k) && is_tight(g, b_cross, k);
    }
    const NodeSet meet = set_intersection(a, b);
    if (is_small(g, a, k) && is_small(g, b, k) && !meet.empty()) {
        report.meet_hypothesis = true;
        report.meet_holds = is_tight(g, meet, k);
    }
    return report;
}

const char* to_string(UncrossingCase c) {
    switch (c) {
        case UncrossingCase::kIA: return "ia";
        case UncrossingCase::kIB: return "ib";
        case UncrossingCase::kII: return "ii";
        case UncrossingCase::kIII: return "iii";
    }
    return "?";
}

UncrossingReport check_uncrossing(const Graph& g, NodeId s, NodeId a, NodeId b, const NodeSet& set_a,
                                  const NodeSet& set_b) {
    const std::size_t kappa_sa = brute_kappa_flow(g, s, a);
    const std::size_t kappa_sb = brute_kappa_flow(g, s, b);
    if (kappa_sa < kappa_sb) throw std::invalid_argument("uncrossing requires kappa(s,a) >= kappa(s,b)");
    if (!is_st_tight(g, set_a, s, a, kappa_sa)) throw std::invalid_argument("A is not sa-tight");
    if (!is_st_tight(g, set_b, s, b, kappa_sb)) throw std::invalid_argument("B is not sb-tight");
    return classify(g, s, a, b, set_a, set_b, kappa_sa, kappa_sb);
}

bool check_uncrossing_minimal(const Graph& g, NodeId s, NodeId a, NodeId b) {
    SplitNetwork net(g);
    const SideSets sa = sides(net, g, s, a);
    const SideSets sb = sides(net, g, s, b);
    if (sa.kappa < sb.kappa) throw std::invalid_argument("uncrossing requires kappa(s,a) >= kappa(s,b)");
    return corollary_holds(g, a, b, sa, sb);
}

SuiteResult tight_intersection_suite(const Graph& g, std::size_t k) {
    const std::size_t n = g.n();
    if (n > 16) throw std::invalid_argument("tight-set enumeration limited to n <= 16");
    std::vector<NodeSet> tight;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<NodeId> members;
        for (NodeId v = 0; v < n; ++v) {
            if (mask & (1u << v)) members.push_back(v);
        }
        NodeSet x(n, members);
        if (is_tight(g, x, k)) tight.push_back(std::move(x));
    }
    SuiteResult result;
    for (std::size_t i = 0; i < tight.size(); ++i) {
        for (std::size_t j = i; j < tight.size(); ++j) {
            ++result.instances;
            if (check_tight_intersections(g, k, tight[i], tight[j]).ok()) continue;
            if (result.violations++ == 0) {
                result.first_violation = "A=" + describe_set(tight[i]) + " B=" + describe_set(tight[j]);
            }
        }
    }
    return result;
}

SuiteResult uncrossing_suite(const Graph& g) {
    const std::size_t n = g.n();
    SplitNetwork net(g);
    SuiteResult result;
    for (NodeId s = 0; s < n; ++s) {
        std::vector<NodeId> targets;
        std::vector<SideSets> info(n);
        std::vector<NodeSet> maximal(n);
        for (NodeId x = 0; x < n; ++x) {
            if (x == s || g.has_edge(s, x)) continue;
            targets.push_back(x);
            info[x] = sides(net, g, s, x);
            maximal[x] = node_complement(g, info[x].backward);
        }
        for (NodeId a : targets) {
            for (NodeId b : targets) {
                if (info[a].kappa < info[b].kappa) continue;
                const NodeSet* choices_a[] = {&info[a].forward, &maximal[a]};
                const NodeSet* choices_b[] = {&info[b].forward, &maximal[b]};
                for (const NodeSet* set_a : choices_a) {
                    for (const NodeSet* set_b : choices_b) {
                        ++result.instances;
                        const UncrossingReport r =
                            classify(g, s, a, b, *set_a, *set_b, info[a].kappa, info[b].kappa);
                        if (r.ok()) continue;
                        if (result.violations++ == 0) {
                            result.first_violation = "s=" + std::to_string(s) + " a=" + std::to_string(a) +
                                                     " b=" + std::to_string(b) + " A=" + describe_set(*set_a) +
                                                     " B=" + describe_set(*set_b) + ": " + r.detail;
                        }
                    }
                }
                ++result.instances;
                if (!corollary_holds(g, a, b, info[a], info[b]) && result.violations++ == 0) {
                    result.first_violation = "corollary fails for s=" + std::to_string(s) + " a=" + std::to_string(a) +
                                             " b=" + std::to_string(b);
                }
            }
        }
    }
    return result;
}

EquivalenceReport oracle_equivalence(const KConnOracle& oracle, const Graph& g, std::size_t enumeration_limit) {
    return equivalence(oracle, g, oracle.k(), enumeration_limit);
}

EquivalenceReport oracle_equivalence(const GeneralOracle& oracle, const Graph& g, std::size_t enumeration_limit) {
    return equivalence(oracle, g, oracle.k(), enumeration_limit);
}

}  // namespace vcq::verify

namespace vcq::verify {

namespace {

bool is_forest(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::uint32_t> parent(n);
    for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges) {
        const std::uint32_t a = find(e.u);
        const std::uint32_t b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

void note(SuiteResult& r, const std::string& what) {
    if (r.violations++ == 0) r.first_violation = what;
}

// tight_k: connectivity the tight-set suite runs at; 0 skips it (the lemma needs a k-connected graph).
void add_lemma_lines(std::vector<CheckLine>& lines, const Graph& g, std::size_t tight_k, const std::string& instance) {
    if (g.n() <= 12) {
        const SuiteResult dual = dual_kappa_suite(g);
        lines.push_back({"dual_kappa", instance, dual.ok(), dual.first_violation});
    }
    if (g.n() <= 10 && tight_k > 0) {
        const SuiteResult tight = tight_intersection_suite(g, tight_k);
        lines.push_back({"tight_intersections", instance, tight.ok(), tight.first_violation});
    }
    if (g.n() <= 14) {
        const SuiteResult uncross = uncrossing_suite(g);
        lines.push_back({"uncrossing", instance, uncross.ok(), uncross.first_violation});
    }
}

}  // namespace

SuiteResult sparsifier_suite(const Graph& g, std::size_t k) {
    SuiteResult result;
    const std::size_t n = g.n();
    const auto forests = ni_forests(g);
    for (std::size_t i = 0; i < forests.size(); ++i) {
        ++result.instances;
        if (!is_forest(n, forests[i])) note(result, "forest " + std::to_string(i + 1) + " has a cycle");
    }
    const Graph h = ni_certificate(g, k);
    ++result.instances;
    if (n > 0 && h.m() > (k + 1) * (n - 1)) {
        note(result, "certificate has " + std::to_string(h.m()) + " edges, bound " + std::to_string((k + 1) * (n - 1)));
    }
    SplitNetwork net_g(g);
    SplitNetwork net_h(h);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            ++result.instances;
            const CutResult in_g = net_g.local(s, t, k + 1);
            const CutResult in_h = net_h.local(s, t, k + 1);
            const std::string pair = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
            if (in_g.kappa != in_h.kappa) {
                note(result, "capped kappa differs on " + pair + ": G " + std::to_string(in_g.kappa) + ", H " +
                                 std::to_string(in_h.kappa));
                continue;
            }
            if (in_h.cut && !validate_cut(g, s, t, *in_h.cut)) {
                note(result, "minimum cut " + format_cut(*in_h.cut) + " of H does not separate " + pair + " in G");
            }
        }
    }
    return result;
}

SuiteResult dual_kappa_suite(const Graph& g) {
    SuiteResult result;
    SplitNetwork net(g);
    for (NodeId s = 0; s < g.n(); ++s) {
        for (NodeId t = s + 1; t < g.n(); ++t) {
            ++result.instances;
            const std::size_t by_flow = net.local(s, t, g.n()).kappa;
            const std::size_t by_enum = *brute_kappa_enumerate(g, s, t);
            if (by_flow != by_enum) {
                note(result, "pair (" + std::to_string(s) + "," + std::to_string(t) + "): flow " +
                                 std::to_string(by_flow) + ", enumeration " + std::to_string(by_enum));
            }
        }
    }
    return result;
}

bool critical_edges_acyclic(const KConnOracle& oracle) {
    std::vector<Edge> edges;
    for (const CriticalEdge& c : oracle.critical_edges()) edges.push_back(c.edge);
    return is_forest(oracle.n(), edges);
}

std::string format_check(const CheckLine& line) {
    return line.check + "\t" + line.instance + "\t" + (line.pass ? "PASS" : "FAIL");
}

std::vector<CheckLine> oracle_checks(const Graph& g, const KConnOracle& oracle, const std::string& instance,
                                     bool lemmas) {
    std::vector<CheckLine> lines;
    const std::size_t n = oracle.n();
    const std::size_t k = oracle.k();
    const EquivalenceReport eq = oracle_equivalence(oracle, g, lemmas ? 12 : 0);
    lines.push_back({"oracle_equivalence", instance, eq.ok(), eq.detail});
    lines.push_back({"cut_list_bound", instance, oracle.cuts().size() <= 2 * n,
                     std::to_string(oracle.cuts().size()) + " cuts, bound " + std::to_string(2 * n)});
    lines.push_back({"laminar_forest_bound", instance, oracle.forests().size() <= 2 * k + 1,
                     std::to_string(oracle.forests().size()) + " forests, bound " + std::to_string(2 * k + 1)});
    lines.push_back({"mader_forest", instance, critical_edges_acyclic(oracle), "critical edges contain a cycle"});
    bool sizes = true;
    for (const Cut& c : oracle.cuts()) sizes = sizes && c.size() == k;
    lines.push_back({"cut_sizes", instance, sizes, "a stored cut does not have exactly k elements"});
    if (lemmas) add_lemma_lines(lines, g, k, instance);
    return lines;
}

std::vector<CheckLine> oracle_checks(const Graph& g, const GeneralOracle& oracle, const std::string& instance,
                                     bool lemmas) {
    std::vector<CheckLine> lines;
    const std::size_t n = oracle.n();
    const std::size_t k = oracle.k();
    const EquivalenceReport eq = oracle_equivalence(oracle, g, lemmas ? 12 : 0);
    lines.push_back({"oracle_equivalence", instance, eq.ok(), eq.detail});
    lines.push_back({"nonadjacent_cut_bound", instance, oracle.nonadjacent_cut_count() <= (2 * k + 1) * n,
                     std::to_string(oracle.nonadjacent_cut_count()) + " cuts, bound " +
                         std::to_string((2 * k + 1) * n)});
    lines.push_back({"adjacent_cut_bound", instance, oracle.adjacent_cut_count() <= (k + 1) * n,
                     std::to_string(oracle.adjacent_cut_count()) + " cuts, bound " + std::to_string((k + 1) * n)});
    const SuiteResult sparsifier = sparsifier_suite(g, k);
    lines.push_back({"sparsifier", instance, sparsifier.ok(), sparsifier.first_violation});
    if (lemmas) {
        add_lemma_lines(lines, g, global_connectivity(g, g.n()).kappa, instance);
    }
    return lines;
}

}  // namespace vcq::verify
