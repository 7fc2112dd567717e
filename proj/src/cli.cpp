#include "sgh/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgh/coloring_complex.hpp"
#include "sgh/corpus.hpp"
#include "sgh/group_algebra.hpp"
#include "sgh/hodge.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return SignedGraph::parse(buf.str());
    } catch (const std::invalid_argument& ex) {
        throw UsageError(path + ": " + ex.what());
    }
}

// the complex-building verbs share the size guard and the edge precondition
void require_complex_sized(const SignedGraph& g, bool allow_large) {
    if (g.edge_count() == 0)
        throw UsageError("the coloring complex is undefined for a graph with no edges");
    const int limit = allow_large ? 6 : 4;
    if (g.vertex_count() > limit)
        throw UsageError("graphs on more than " + std::to_string(limit) + " vertices " +
                         (allow_large ? "are not supported"
                                      : "need --allow-large (supported up to 6)"));
}

std::string tuple_string(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::int64_t to_int64(const Int& v) {
    return v.convert_to<std::int64_t>();
}

nlohmann::json json_ints(const std::vector<Int>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& v : values) arr.push_back(to_int64(v));
    return arr;
}

int run_chroma(const SignedGraph& g, bool json, std::ostream& out) {
    const IntPolynomial chi = chromatic_polynomial(g);
    const std::vector<Int> c = chromatic_coefficients(g);
    if (json) {
        nlohmann::json j;
        j["chromatic"] = json_ints(chi.coeffs());
        j["c"] = json_ints(c);
        out << j.dump(2) << "\n";
    } else {
        out << chi.to_string() << "\n";
        out << "c = " << tuple_string(c) << "\n";
    }
    return 0;
}

int run_complex(const SignedGraph& g, bool json, std::ostream& out) {
    const ColoringComplex cc(g);
    const std::vector<std::int64_t> f = cc.f_vector();
    const std::int64_t facets = f.back();
    if (json) {
        nlohmann::json j;
        j["f_vector"] = f;
        j["facets"] = facets;
        out << j.dump(2) << "\n";
    } else {
        out << "f = (";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << f[i];
        out << ")\n";
        out << "facets = " << facets << "\n";
    }
    return 0;
}

int run_hodge(const SignedGraph& g, bool json, std::ostream& out) {
    const ColoringComplex cc(g);
    const std::vector<Int> homology = homology_dims(cc);
    const std::vector<Int> euler = hodge_dims_euler(cc);
    const std::vector<Int> kernel = hodge_dims_kernel(cc);
    if (json) {
        nlohmann::json j;
        j["homology"] = json_ints(homology);
        j["hodge_euler"] = json_ints(euler);
        j["hodge_kernel"] = json_ints(kernel);
        out << j.dump(2) << "\n";
    } else {
        out << "homology = " << tuple_string(homology) << "\n";
        out << "hodge (alternating traces) = " << tuple_string(euler) << "\n";
        out << "hodge (kernel ranks) = " << tuple_string(kernel) << "\n";
    }
    return 0;
}

int run_verify(const SignedGraph& g, bool json, std::ostream& out) {
    const HodgeReport rep = verify_main_theorem(g);
    if (json) {
        out << to_json(rep) << "\n";
    } else {
        out << "graph: " << g.to_string() << "\n";
        out << "χ = " << rep.chromatic.to_string() << "\n";
        for (const auto& [name, passed] : rep.checks)
            out << name << ": " << (passed ? "ok" : "FAIL") << "\n";
        if (rep.verdict)
            out << "verdict: PASS — c = " << tuple_string(rep.coefficients)
                << " = hodge dimensions\n";
        else
            out << "verdict: FAIL — c = " << tuple_string(rep.coefficients) << ", hodge "
                << tuple_string(rep.hodge_euler) << " / " << tuple_string(rep.hodge_kernel)
                << "\n";
    }
    return rep.verdict ? 0 : 1;
}

// idempotency, mutual orthogonality, and completeness inside the group algebra
bool algebra_identities_hold(int rank) {
    std::vector<AlgebraElement> ps;
    for (int j = 0; j <= rank; ++j) ps.push_back(eulerian_idempotent(rank, j));
    AlgebraElement sum(rank);
    for (const AlgebraElement& p : ps) sum = sum + p;
    if (!(sum == AlgebraElement::unit(rank))) return false;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t k = i; k < ps.size(); ++k) {
            const AlgebraElement product = multiply(ps[i], ps[k]);
            if (i == k ? !(product == ps[i]) : !product.is_zero()) return false;
        }
    return true;
}

// a light main-theorem probe for graphs too large for the full lemma battery
bool spot_check(const SignedGraph& g) {
    const ColoringComplex cc(g);
    const std::vector<Int> c = chromatic_coefficients(g);
    return hodge_dims_euler(cc) == c && hodge_dims_kernel(cc) == c;
}

int run_corpus(int n, int count, std::uint64_t seed, bool allow_large, bool slow, bool json,
               std::ostream& out) {
    // the constructor rejects n < 1; the guard rejects oversized corpora
    require_complex_sized(SignedGraph(n, {}, {}, {1}), allow_large);
    const std::vector<SignedGraph> graphs = random_corpus(n, count, seed);

    // verify concurrently, report in index order
    std::vector<std::optional<HodgeReport>> reports(graphs.size());
    std::vector<std::string> errors(graphs.size());
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < graphs.size();) {
            try {
                reports[i] = verify_main_theorem(graphs[i]);
            } catch (const std::exception& ex) {
                errors[i] = ex.what();
            }
        }
    };
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(hw, graphs.size()); ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    int passed = 0;
    for (const auto& rep : reports)
        if (rep && rep->verdict) ++passed;
    bool all_ok = passed == static_cast<int>(graphs.size());

    std::optional<bool> algebra_ok;
    std::vector<std::pair<std::string, bool>> spots;
    if (slow) {
        algebra_ok = algebra_identities_hold(4);
        if (!*algebra_ok) all_ok = false;
        for (const SignedGraph& g :
             {base_case_graph(5, BaseKind::edge), base_case_graph(5, BaseKind::half_edge)}) {
            const bool ok = spot_check(g);
            spots.emplace_back(g.to_string(), ok);
            if (!ok) all_ok = false;
        }
    }

    if (json) {
        nlohmann::json j;
        j["count"] = graphs.size();
        j["passed"] = passed;
        nlohmann::json items = nlohmann::json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            nlohmann::json item;
            item["index"] = i;
            item["graph"] = graphs[i].to_string();
            if (reports[i])
                item["report"] = nlohmann::json::parse(to_json(*reports[i]));
            else
                item["error"] = errors[i];
            items.push_back(std::move(item));
        }
        j["items"] = std::move(items);
        if (slow) {
            nlohmann::json extra;
            extra["algebra_identities_rank_4"] = *algebra_ok;
            nlohmann::json sj = nlohmann::json::array();
            for (const auto& [name, ok] : spots) sj.push_back({{"graph", name}, {"ok", ok}});
            extra["spot_checks"] = std::move(sj);
            j["slow_checks"] = std::move(extra);
        }
        j["verdict"] = all_ok;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << "[" << i << "] " << graphs[i].to_string() << " ";
            if (!reports[i])
                out << "error: " << errors[i] << "\n";
            else
                out << (reports[i]->verdict ? "ok" : "FAIL") << "\n";
        }
        if (slow) {
            out << "algebra identities at rank 4: " << (*algebra_ok ? "ok" : "FAIL") << "\n";
            for (const auto& [name, ok] : spots)
                out << "spot check " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        }
        out << "corpus: " << passed << "/" << graphs.size() << " passed\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed-graph chromatic polynomials and coloring-complex hodge decompositions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON instead of text");

    std::string path;
    bool allow_large = false;
    int n = 3;
    int count = 20;
    std::uint64_t seed = 1;
    bool slow = false;

    CLI::App* chroma = app.add_subcommand(
        "chroma", "chromatic polynomial and its signless coefficients");
    chroma->add_option("file", path, "graph file")->required();

    CLI::App* complex_cmd =
        app.add_subcommand("complex", "face counts of the coloring complex");
    complex_cmd->add_option("file", path, "graph file")->required();
    complex_cmd->add_flag("--allow-large", allow_large, "allow graphs on 5 or 6 vertices");

    CLI::App* hodge_cmd = app.add_subcommand(
        "hodge", "homology and hodge summand dimensions, both computations");
    hodge_cmd->add_option("file", path, "graph file")->required();
    hodge_cmd->add_flag("--allow-large", allow_large, "allow graphs on 5 or 6 vertices");

    CLI::App* verify = app.add_subcommand(
        "verify", "check that the hodge dimensions equal the chromatic coefficients");
    verify->add_option("file", path, "graph file")->required();
    verify->add_flag("--allow-large", allow_large, "allow graphs on 5 or 6 vertices");

    CLI::App* corpus = app.add_subcommand(
        "corpus", "verify a reproducible random corpus of signed graphs");
    corpus->add_option("--n", n, "vertices per graph")->capture_default_str();
    corpus->add_option("--count", count, "number of graphs")->capture_default_str();
    corpus->add_option("--seed", seed, "generator seed")->capture_default_str();
    corpus->add_flag("--allow-large", allow_large, "allow graphs on 5 or 6 vertices");
    corpus->add_flag("--slow", slow,
                     "also check the rank-4 algebra identities and two 5-vertex graphs");

    // let --json appear after the verb as well as before it
    for (CLI::App* sub : {chroma, complex_cmd, hodge_cmd, verify, corpus}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(chroma)) return run_chroma(load_graph(path), json, out);
        if (app.got_subcommand(complex_cmd)) {
            const SignedGraph g = load_graph(path);
            require_complex_sized(g, allow_large);
            return run_complex(g, json, out);
        }
        if (app.got_subcommand(hodge_cmd)) {
            const SignedGraph g = load_graph(path);
            require_complex_sized(g, allow_large);
            return run_hodge(g, json, out);
        }
        if (app.got_subcommand(verify)) {
            const SignedGraph g = load_graph(path);
            require_complex_sized(g, allow_large);
            return run_verify(g, json, out);
        }
        if (app.got_subcommand(corpus))
            return run_corpus(n, count, seed, allow_large, slow, json, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "error: no verb\n";
    return 2;
}

}  // namespace sgh
