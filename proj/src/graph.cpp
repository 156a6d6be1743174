#include "vcq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vcq/errors.hpp"

namespace vcq {

NodeSet::NodeSet(std::size_t universe, std::span<const NodeId> members)
    : members_(members.begin(), members.end()), mask_(universe, 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (NodeId v : members_) {
        if (v >= universe) throw std::invalid_argument("node " + std::to_string(v) + " outside universe");
        mask_[v] = 1;
    }
}

NodeSet NodeSet::all(std::size_t universe) {
    std::vector<NodeId> members(universe);
    for (std::size_t i = 0; i < universe; ++i) members[i] = static_cast<NodeId>(i);
    return NodeSet(universe, members);
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](NodeId v) { return other.contains(v); });
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::max(a.universe(), b.universe()), out);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::max(a.universe(), b.universe()), out);
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::max(a.universe(), b.universe()), out);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), edges_(edges.begin(), edges.end()), edge_index_(edges.size()) {
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
        if (e.v >= n) throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }

    offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        targets_[fill[e.u]++] = e.v;
        targets_[fill[e.v]++] = e.u;
        edge_index_.insert(e.u, e.v, static_cast<std::uint32_t>(i));
    }
    // Edges are sorted by (u, v), so each list is already sorted except for the
    // interleaving of lower and higher neighbors.
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = n_ == 0 ? 0 : degree(0);
    for (NodeId v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

Graph Graph::without_edge(Edge e) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& x : edges_) {
        if (x != e) kept.push_back(x);
    }
    if (kept.size() == edges_.size()) throw std::invalid_argument("edge to remove is absent");
    return Graph(n_, kept);
}

NodeSet boundary(const Graph& g, const NodeSet& a) {
    std::vector<std::uint8_t> seen(g.n(), 0);
    std::vector<NodeId> out;
    for (NodeId u : a) {
        for (NodeId w : g.neighbors(u)) {
            if (!a.contains(w) && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    }
    return NodeSet(g.n(), out);
}

NodeSet node_complement(const Graph& g, const NodeSet& a) {
    const NodeSet bd = boundary(g, a);
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!a.contains(v) && !bd.contains(v)) out.push_back(v);
    }
    return NodeSet(g.n(), out);
}

bool is_tight(const Graph& g, const NodeSet& a, std::size_t k) {
    if (a.empty()) return false;
    const NodeSet bd = boundary(g, a);
    return bd.size() == k && a.size() + bd.size() < g.n();
}

bool is_small(std::size_t n, std::size_t set_size, std::size_t k) noexcept {
    return n >= k && 2 * set_size <= n - k;
}

namespace {

bool next_number(std::string_view& rest, std::uint64_t& out) {
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\r')) ++i;
    rest.remove_prefix(i);
    if (rest.empty()) return false;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
    if (ec != std::errc{}) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return rest.empty() || rest.front() == ' ' || rest.front() == '\t' || rest.front() == '\r';
}

bool only_space(std::string_view rest) {
    return rest.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;
    PairMap seen;

    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (only_space(line)) continue;

        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!next_number(line, a) || !next_number(line, b) || !only_space(line)) {
            throw ParseError(line_no, "expected two non-negative integers");
        }
        if (!have_header) {
            if (a > 0xFFFFFFFEull) throw ParseError(line_no, "node count too large");
            n = a;
            m = b;
            have_header = true;
            edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
            continue;
        }
        if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
        if (a >= n || b >= n) throw ParseError(line_no, "node id out of range [0, " + std::to_string(n) + ")");
        if (a == b) throw ParseError(line_no, "self-loop at node " + std::to_string(a));
        const Edge e(static_cast<NodeId>(a), static_cast<NodeId>(b));
        if (seen.contains(e.u, e.v)) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        seen.insert(e.u, e.v, 0);
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(line_no, "missing \"n m\" header");
    if (edges.size() != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string emit_graph(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write graph file " + path);
    out << emit_graph(g);
}

}  // namespace vcq
