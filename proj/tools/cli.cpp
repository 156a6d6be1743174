#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "vcq/errors.hpp"
#include "vcq/generators.hpp"
#include "vcq/sparsifier.hpp"
#include "vcq/verify.hpp"

namespace vcq::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Oracle build_oracle(const Graph& g, const std::string& mode, std::size_t k, std::optional<bool> verify,
                    unsigned threads) {
    if (mode == "kconn") return KConnOracle::build(g, k, {verify, threads});
    if (mode == "general") return GeneralOracle::build(g, k, {threads});
    throw UsageError("unknown mode \"" + mode + "\" (expected kconn or general)");
}

std::size_t oracle_n(const Oracle& o) {
    return std::visit([](const auto& x) { return x.n(); }, o);
}

std::vector<std::pair<NodeId, NodeId>> parse_pairs(std::istream& in, std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        long long s = 0;
        long long t = 0;
        if (!(words >> s)) continue;
        std::string extra;
        if (!(words >> t) || (words >> extra)) throw UsageError("pair line " + std::to_string(line_no) + ": expected \"s t\"");
        if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n || static_cast<std::size_t>(t) >= n || s == t) {
            throw UsageError("pair line " + std::to_string(line_no) + ": indices must be distinct and below " +
                             std::to_string(n));
        }
        pairs.emplace_back(static_cast<NodeId>(s), static_cast<NodeId>(t));
    }
    return pairs;
}

template <class O>
void answer(const O& oracle, NodeId s, NodeId t, std::ostream& out) {
    out << s << ' ' << t << ' ';
    if (const auto id = oracle.query_cut(s, t)) {
        const Cut& c = oracle.cut(*id);
        out << "CUT " << c.size();
        if (c.size() != 0) out << ' ' << format_cut(c);
        out << '\n';
    } else {
        out << "CON\n";
    }
}

}  // namespace

std::string describe(const Oracle& oracle) {
    std::ostringstream out;
    if (const auto* o = std::get_if<KConnOracle>(&oracle)) {
        const std::size_t n = o->n();
        const std::size_t k = o->k();
        std::size_t tight_cuts = o->cuts().size() - o->k_count() - o->critical_edges().size();
        out << "mode kconn  k " << k << "  n " << n << '\n'
            << "cuts " << o->cuts().size() << " (bound 2n = " << 2 * n << ")\n"
            << "  degree-k node cuts " << o->k_count() << ", critical-edge cuts " << o->critical_edges().size()
            << ", tight-set cuts " << tight_cuts << " (|S| = " << o->s_count() << ")\n"
            << "forests " << o->forests().size() << " (bound 2k+1 = " << 2 * k + 1 << ")\n"
            << "entries " << o->space_entries() << " (" << static_cast<double>(o->space_entries()) / static_cast<double>(k * n)
            << " per k*n)\n";
    } else {
        const auto& g = std::get<GeneralOracle>(oracle);
        const std::size_t n = g.n();
        const std::size_t k = g.k();
        out << "mode general  k " << k << "  n " << n << '\n'
            << "cuts " << g.cuts().size() << '\n'
            << "  non-adjacent cuts " << g.nonadjacent_cut_count() << " (bound (2k+1)n = " << (2 * k + 1) * n << ")\n"
            << "  adjacent cuts " << g.adjacent_cut_count() << " (bound (k+1)n = " << (k + 1) * n << ")\n"
            << "entries " << g.space_entries() << '\n';
    }
    return out.str();
}

BenchResult bench_queries(const Oracle& oracle, std::size_t queries, std::uint64_t seed, unsigned repetitions) {
    const std::size_t n = oracle_n(oracle);
    if (n < 2) throw UsageError("bench needs at least two nodes");
    std::mt19937_64 rng(seed);
    std::vector<NodeId> s(queries);
    std::vector<NodeId> t(queries);
    for (std::size_t i = 0; i < queries; ++i) {
        s[i] = static_cast<NodeId>(rng() % n);
        do {
            t[i] = static_cast<NodeId>(rng() % n);
        } while (t[i] == s[i]);
    }
    BenchResult result;
    result.queries = queries;
    result.mean_ns = std::numeric_limits<double>::infinity();
    std::visit(
        [&](const auto& o) {
            for (unsigned rep = 0; rep <= repetitions; ++rep) {
                std::size_t con = 0;
                std::uint64_t checksum = 0;
                const auto start = std::chrono::steady_clock::now();
                for (std::size_t i = 0; i < queries; ++i) {
                    const auto id = o.query_cut(s[i], t[i]);
                    con += id ? 0 : 1;
                    checksum += id.value_or(0);
                }
                const auto stop = std::chrono::steady_clock::now();
                volatile std::uint64_t keep = checksum;
                (void)keep;
                // rep 0 warms the caches and is not timed.
                if (rep == 0) continue;
                const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
                result.mean_ns = std::min(result.mean_ns, ns / static_cast<double>(queries));
                result.con_answers = con;
            }
        },
        oracle);
    return result;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"vcq: constant-time vertex-connectivity query oracles"};
    app.require_subcommand(1);

    // build
    std::string build_graph;
    std::string build_mode = "kconn";
    std::size_t build_k = 0;
    std::string build_out;
    bool build_verify = false;
    bool build_no_verify = false;
    unsigned threads = 0;
    auto* build = app.add_subcommand("build", "Build an oracle from a graph file");
    build->add_option("graph", build_graph, "Graph file (edge-list format)")->required();
    build->add_option("--mode", build_mode, "kconn or general")->check(CLI::IsMember({"kconn", "general"}));
    build->add_option("-k", build_k, "Connectivity threshold")->required();
    build->add_option("-o,--out", build_out, "Oracle file (default: <graph>.oracle)");
    build->add_flag("--verify", build_verify, "Force the all-pairs k-connectivity check");
    build->add_flag("--no-verify", build_no_verify, "Skip the all-pairs k-connectivity check");
    build->add_option("--threads", threads, "Worker threads (0 = hardware)");

    // query
    std::string query_oracle;
    std::vector<long long> query_args;
    std::string query_file;
    auto* query = app.add_subcommand("query", "Answer con/cut queries");
    query->add_option("oracle", query_oracle, "Oracle file")->required();
    query->add_option("ids", query_args, "Pairs as s t s t ...");
    query->add_option("--pairs", query_file, "File with one \"s t\" pair per line");

    // stats
    std::string stats_oracle;
    auto* stats = app.add_subcommand("stats", "Print space accounting of an oracle");
    stats->add_option("oracle", stats_oracle, "Oracle file")->required();

    // verify
    std::string verify_graph;
    std::string verify_oracle;
    std::string verify_mode = "kconn";
    std::size_t verify_k = 0;
    std::string verify_id;
    bool verify_no_lemmas = false;
    auto* verify = app.add_subcommand("verify", "Check an oracle against brute force");
    verify->add_option("graph", verify_graph, "Graph file")->required();
    verify->add_option("--oracle", verify_oracle, "Existing oracle file (otherwise built)");
    verify->add_option("--mode", verify_mode, "kconn or general")->check(CLI::IsMember({"kconn", "general"}));
    verify->add_option("-k", verify_k, "Connectivity threshold (required without --oracle)");
    verify->add_option("--id", verify_id, "Instance id in the report (default: graph path)");
    verify->add_flag("--no-lemmas", verify_no_lemmas, "Skip lemma suites on small graphs");

    // bench
    std::string bench_oracle;
    std::string bench_graph;
    std::string bench_mode = "kconn";
    std::size_t bench_k = 0;
    std::size_t bench_queries_count = 1000000;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Measure query latency on random pairs");
    bench->add_option("--oracle", bench_oracle, "Oracle file");
    bench->add_option("--graph", bench_graph, "Graph file to build from");
    bench->add_option("--mode", bench_mode, "kconn or general")->check(CLI::IsMember({"kconn", "general"}));
    bench->add_option("-k", bench_k, "Connectivity threshold");
    bench->add_option("--queries", bench_queries_count, "Number of random pairs");
    bench->add_option("--seed", bench_seed, "RNG seed");

    // gen
    std::vector<std::string> gen_words;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Emit a named graph family");
    gen->add_option("family", gen_words, "complete n | cycle n | path n | star n | petersen | wheel n | hypercube d | "
                                         "bridged-cliques c b | clique-chain r q b | gnp n p seed [min_kappa]")
        ->required();
    gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

    // sparsify
    std::string sparsify_graph;
    std::size_t sparsify_k = 0;
    std::string sparsify_out;
    auto* sparsify = app.add_subcommand("sparsify", "Emit the Nagamochi-Ibaraki certificate");
    sparsify->add_option("graph", sparsify_graph, "Graph file")->required();
    sparsify->add_option("-k", sparsify_k, "Connectivity threshold")->required();
    sparsify->add_option("-o,--out", sparsify_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*build) {
            if (build_verify && build_no_verify) throw UsageError("--verify and --no-verify are exclusive");
            std::optional<bool> verify_flag;
            if (build_verify) verify_flag = true;
            if (build_no_verify) verify_flag = false;
            const Graph g = read_graph_file(build_graph);
            const Oracle o = build_oracle(g, build_mode, build_k, verify_flag, threads);
            const std::string path = build_out.empty() ? build_graph + ".oracle" : build_out;
            save_oracle(o, path);
            out << describe(o) << "wrote " << path << '\n';
            return kOk;
        }
        if (*query) {
            const Oracle o = load_oracle(query_oracle);
            const std::size_t n = oracle_n(o);
            std::vector<std::pair<NodeId, NodeId>> pairs;
            if (!query_args.empty()) {
                if (query_args.size() % 2 != 0) throw UsageError("pairs need an even number of node ids");
                std::ostringstream text;
                for (std::size_t i = 0; i < query_args.size(); i += 2) text << query_args[i] << ' ' << query_args[i + 1] << '\n';
                std::istringstream stream(text.str());
                pairs = parse_pairs(stream, n);
            } else if (!query_file.empty()) {
                std::ifstream file(query_file);
                if (!file) throw Error("cannot open pairs file " + query_file);
                pairs = parse_pairs(file, n);
            } else {
                pairs = parse_pairs(in, n);
            }
            std::visit(
                [&](const auto& x) {
                    for (const auto& [s, t] : pairs) answer(x, s, t, out);
                },
                o);
            return kOk;
        }
        if (*stats) {
            out << describe(load_oracle(stats_oracle));
            return kOk;
        }
        if (*verify) {
            const Graph g = read_graph_file(verify_graph);
            Oracle o = verify_oracle.empty() ? (verify_k == 0 ? throw UsageError("verify needs -k or --oracle")
                                                              : build_oracle(g, verify_mode, verify_k, std::nullopt, 0))
                                             : load_oracle(verify_oracle);
            const std::string id = verify_id.empty() ? verify_graph : verify_id;
            const auto lines = std::visit(
                [&](const auto& x) { return verify::oracle_checks(g, x, id, !verify_no_lemmas); }, o);
            bool all = true;
            for (const auto& line : lines) {
                out << verify::format_check(line) << '\n';
                if (!line.pass) {
                    all = false;
                    err << line.check << ": " << line.detail << '\n';
                }
            }
            return all ? kOk : kMismatch;
        }
        if (*bench) {
            Oracle o;
            if (!bench_oracle.empty()) {
                o = load_oracle(bench_oracle);
            } else if (!bench_graph.empty() && bench_k != 0) {
                o = build_oracle(read_graph_file(bench_graph), bench_mode, bench_k, std::nullopt, 0);
            } else {
                throw UsageError("bench needs --oracle, or --graph with -k");
            }
            const BenchResult r = bench_queries(o, bench_queries_count, bench_seed);
            out << "n " << oracle_n(o) << "  queries " << r.queries << "  con " << r.con_answers << "  cut "
                << r.queries - r.con_answers << '\n'
                << "mean_ns_per_query " << r.mean_ns << '\n';
            return kOk;
        }
        if (*gen) {
            const Graph g = gen::by_name(gen_words);
            if (gen_out.empty()) {
                out << emit_graph(g);
            } else {
                write_graph_file(g, gen_out);
            }
            return kOk;
        }
        if (*sparsify) {
            const Graph g = read_graph_file(sparsify_graph);
            const Graph h = ni_certificate(g, sparsify_k);
            if (sparsify_out.empty()) {
                out << emit_graph(h);
            } else {
                write_graph_file(h, sparsify_out);
            }
            err << "kept " << h.m() << " of " << g.m() << " edges (bound (k+1)(n-1) = "
                << (sparsify_k + 1) * (g.n() == 0 ? 0 : g.n() - 1) << ")\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotKConnected& e) {
        err << "error: " << e.what() << '\n';
        return kNotKConnected;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kMismatch;
    } catch (const Error& e) {
        // parse, format and I/O failures
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace vcq::cli
