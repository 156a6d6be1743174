#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcq/cut.hpp"
#include "vcq/general_oracle.hpp"
#include "vcq/graph.hpp"
#include "vcq/kconn_oracle.hpp"

namespace vcq::verify {

// kappa(s,t) by enumerating vertex subsets of V - {s,t} in increasing size (in
// G - st when adjacent, plus one for the edge). Returns nullopt if no cut of at
// most max_vertices vertices exists. Exponential; meant for n <= 12.
std::optional<std::size_t> brute_kappa_enumerate(const Graph& g, NodeId s, NodeId t,
                                                 std::size_t max_vertices = static_cast<std::size_t>(-1));
// Uncapped max-flow value.
std::size_t brute_kappa_flow(const Graph& g, NodeId s, NodeId t);
// Enumeration when n <= enumeration_limit, flow otherwise.
std::size_t brute_kappa(const Graph& g, NodeId s, NodeId t, std::size_t enumeration_limit = 12);

// True iff deleting cut.vertices and cut.edges leaves no st-path.
// Throws std::invalid_argument when s or t is one of the cut's vertices.
bool validate_cut(const Graph& g, NodeId s, NodeId t, const Cut& cut);

// s in X, t in X*, |boundary(X)| = kappa.
bool is_st_tight(const Graph& g, const NodeSet& x, NodeId s, NodeId t, std::size_t kappa);

struct TightIntersectionReport {
    // A n B* and B n A* both nonempty.
    bool crossing_hypothesis = false;
    bool crossing_holds = true;
    // A, B small and A n B nonempty.
    bool meet_hypothesis = false;
    bool meet_holds = true;

    bool ok() const noexcept { return crossing_holds && meet_holds; }
};

// For tight A, B in a k-connected graph: A n B* and B n A* are tight when both
// are nonempty; A n B is tight when A, B are small and meet.
TightIntersectionReport check_tight_intersections(const Graph& g, std::size_t k, const NodeSet& a,
                                                  const NodeSet& b);

enum class UncrossingCase { kIA, kIB, kII, kIII };
const char* to_string(UncrossingCase c);

struct UncrossingReport {
    std::vector<UncrossingCase> matched;
    bool conclusions_hold = true;
    std::string detail;

    bool ok() const noexcept { return matched.size() == 1 && conclusions_hold; }
};

// A is sa-tight, B is sb-tight and kappa(s,a) >= kappa(s,b) (checked; throws
// std::invalid_argument otherwise). Classifies by membership of a and b:
//   (ia)  a in A* n B*
//   (ib)  a not in A* n B*, b in A* n B*
//   (ii)  a in A* n B, b in B* n A
//   (iii) a in boundary(B) and b in B* n A, or b in boundary(A) and a in A* n B,
//         or a in boundary(B) and b in boundary(A)
// and asserts the tightness conclusions of the matched case.
UncrossingReport check_uncrossing(const Graph& g, NodeId s, NodeId a, NodeId b, const NodeSet& set_a,
                                  const NodeSet& set_b);

// With A = R_sa, B = R_sb and kappa(s,a) >= kappa(s,b): A is inside B, or
// R_as is a proper subset of B and R_bs a proper subset of A, or a lies on
// boundary(B) or b on boundary(A). Returns true when one of them holds.
bool check_uncrossing_minimal(const Graph& g, NodeId s, NodeId a, NodeId b);

struct SuiteResult {
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::string first_violation;

    bool ok() const noexcept { return violations == 0; }
};

// Every pair of tight sets (found by subset enumeration, n <= 16).
SuiteResult tight_intersection_suite(const Graph& g, std::size_t k);
// Every (s, a, b) with a, b non-adjacent to s, on the minimal and maximal
// sa-/sb-tight sets, plus the minimal-set corollary.
SuiteResult uncrossing_suite(const Graph& g);

struct EquivalenceReport {
    std::size_t pairs = 0;
    std::size_t cuts_checked = 0;
    std::size_t mismatches = 0;
    std::optional<std::pair<NodeId, NodeId>> witness;
    std::string detail;

    bool ok() const noexcept { return mismatches == 0; }
};

// Every ordered pair: con matches kappa >= k+1 and any returned cut separates the
// pair in g with size exactly min(kappa, k). Enumeration replaces flow for
// kappa when n <= enumeration_limit.
EquivalenceReport oracle_equivalence(const KConnOracle& oracle, const Graph& g, std::size_t enumeration_limit = 0);
EquivalenceReport oracle_equivalence(const GeneralOracle& oracle, const Graph& g, std::size_t enumeration_limit = 0);

// Certificate checks for ni_certificate(g, k): edge bound (k+1)(n-1), every
// forest acyclic, min(kappa_H, k+1) = min(kappa_G, k+1) on all pairs, and every
// minimum cut found in H (kappa <= k) separates the pair in G.
SuiteResult sparsifier_suite(const Graph& g, std::size_t k);

// Enumeration and flow values of kappa agree on every pair (n <= 12).
SuiteResult dual_kappa_suite(const Graph& g);

// Critical edges stored by the oracle contain no cycle.
bool critical_edges_acyclic(const KConnOracle& oracle);

// One line of the machine-readable verify report.
struct CheckLine {
    std::string check;
    std::string instance;
    bool pass = false;
    std::string detail;
};

// "check<TAB>instance<TAB>PASS|FAIL"
std::string format_check(const CheckLine& line);

// Equivalence, bound and structure checks for an oracle built from g. With
// `lemmas`, also runs the tight-set and uncrossing suites on small graphs
// (n <= 10 and n <= 14) and the dual-kappa check (n <= 12).
std::vector<CheckLine> oracle_checks(const Graph& g, const KConnOracle& oracle, const std::string& instance,
                                     bool lemmas = true);
std::vector<CheckLine> oracle_checks(const Graph& g, const GeneralOracle& oracle, const std::string& instance,
                                     bool lemmas = true);

}  // namespace vcq::verify
