// Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
// Exit code 0 iff every criterion passes.  Time limits are part of the
// criteria and are pinned below.  --slow (or SGH_SLOW=1) adds the rank-4
// group-algebra identities.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "face_oracle.hpp"
#include "sgh/coloring_complex.hpp"
#include "sgh/corpus.hpp"
#include "sgh/group_algebra.hpp"
#include "sgh/hodge.hpp"
#include "sgh/signed_graph.hpp"

using namespace sgh;

namespace {

constexpr std::uint64_t kCorpusSeed = 2026;  // the 50 four-vertex graphs
constexpr int kRandomCount = 50;

struct Outcome {
    bool ok = true;
    std::string detail;  // first failure, for the diagnostic line
};

void fail(Outcome& o, const std::string& what) {
    if (o.ok) o.detail = what;
    o.ok = false;
}

std::vector<Int> unit_vector(int length, int position) {
    std::vector<Int> v(static_cast<std::size_t>(length), Int(0));
    v[static_cast<std::size_t>(position)] = 1;
    return v;
}

// criterion 1: the running example, end to end
Outcome running_example_end_to_end() {
    Outcome o;
    const SignedGraph g(3, {{1, 2}}, {{1, 2}, {2, 3}}, {1});
    const IntPolynomial chi = chromatic_polynomial(g);
    if (chi.coeffs() != std::vector<Int>{-2, 5, -4, 1}) fail(o, "chromatic polynomial");
    if (chromatic_by_interpolation(g) != chi) fail(o, "interpolation path");
    const ColoringComplex cc(g);
    if (homology_dims(cc) != std::vector<Int>{0, 0, 11}) fail(o, "homology");
    const std::vector<Int> expected{2, 5, 4};
    if (hodge_dims_euler(cc) != expected) fail(o, "hodge by alternating traces");
    if (hodge_dims_kernel(cc) != expected) fail(o, "hodge by kernel ranks");
    if (chromatic_coefficients(g) != expected) fail(o, "coefficients");
    return o;
}

// criterion 2: base-case complexes have one top sphere; base cycles close
Outcome base_cases() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        const ColoringComplex cc(base_case_graph(n, BaseKind::half_edge));
        std::vector<Int> homology = homology_dims(cc);
        if (homology != unit_vector(n, n - 1))
            fail(o, "homology of the half-edge graph on " + std::to_string(n));
        if (hodge_dims_euler(cc) != unit_vector(n, n - 1) ||
            hodge_dims_kernel(cc) != unit_vector(n, n - 1))
            fail(o, "hodge concentration on " + std::to_string(n));
    }
    for (BaseKind kind : {BaseKind::half_edge, BaseKind::edge}) {
        for (int n = 2; n <= 4; ++n) {
            const ColoringComplex cc(base_case_graph(n, kind));
            const std::vector<Rational> cycle = base_cycle(cc, kind);
            const QMatrix b = cc.boundary_matrix(cc.top_grade());
            std::vector<Rational> image(static_cast<std::size_t>(b.rows()), Rational(0));
            for (int r = 0; r < b.rows(); ++r)
                for (const auto& [c, x] : b.row(r))
                    image[static_cast<std::size_t>(r)] += x * cycle[static_cast<std::size_t>(c)];
            bool closed = true;
            for (const Rational& x : image) closed = closed && x == 0;
            bool nonzero = false;
            for (const Rational& x : cycle) nonzero = nonzero || x != 0;
            if (!closed || !nonzero)
                fail(o, "base cycle, kind " + std::to_string(static_cast<int>(kind)) + ", n=" +
                        std::to_string(n));
        }
    }
    return o;
}

// ρ̃ generating element evaluated at an integer point
AlgebraElement rho_evaluated(int n, int at) {
    AlgebraElement sum(n);
    Int power = 1;
    for (int k = 0; k <= n; ++k) {
        sum = sum + eulerian_idempotent(n, k).scaled(Rational(power));
        power *= at;
    }
    return sum;
}

// criterion 3: the idempotent family identities in the group algebra
Outcome group_algebra_identities(bool slow) {
    Outcome o;
    const int max_rank = slow ? 4 : 3;
    for (int n = 1; n <= max_rank; ++n) {
        std::vector<AlgebraElement> ps;
        for (int j = 0; j <= n; ++j) ps.push_back(eulerian_idempotent(n, j));
        AlgebraElement sum(n);
        for (const AlgebraElement& p : ps) sum = sum + p;
        if (!(sum == AlgebraElement::unit(n)))
            fail(o, "partition of identity at rank " + std::to_string(n));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t k = i; k < ps.size(); ++k) {
                const AlgebraElement product = multiply(ps[i], ps[k]);
                const bool good = i == k ? product == ps[i] : product.is_zero();
                if (!good) fail(o, "orthogonal idempotency at rank " + std::to_string(n));
            }
    }
    for (int n = 1; n <= 3; ++n)
        for (int j = 0; j <= n + 1; ++j) {
            const AlgebraElement expect = rho_evaluated(n, 2 * j + 1).scaled(j % 2 ? 1 : -1);
            if (!(lambda_element(n, j) == expect))
                fail(o, "evaluation relation at rank " + std::to_string(n) + ", j=" +
                        std::to_string(j));
        }
    return o;
}

// criterion 4: boundary maps commute with all idempotent families
Outcome intertwining(const std::vector<SignedGraph>& corpus) {
    Outcome o;
    for (const SignedGraph& g : corpus) {
        const ColoringComplex cc(g);
        if (!verify_intertwining(cc).all()) fail(o, g.to_string());
    }
    return o;
}

// criterion 5: hodge dimensions equal the chromatic coefficients
Outcome main_theorem(const std::vector<SignedGraph>& corpus) {
    Outcome o;
    for (const SignedGraph& g : corpus) {
        const ColoringComplex cc(g);
        const std::vector<Int> c = chromatic_coefficients(g);
        if (hodge_dims_euler(cc) != c || hodge_dims_kernel(cc) != c) fail(o, g.to_string());
    }
    return o;
}

// criterion 6: chain dimensions satisfy deletion-contraction per positive edge
Outcome dimension_identity(const std::vector<SignedGraph>& small_corpus) {
    Outcome o;
    for (const SignedGraph& g : small_corpus)
        if (!verify_chain_dimension_identity(g)) fail(o, g.to_string());
    return o;
}

// criterion 7: switching at any vertex preserves everything
Outcome switching(const std::vector<SignedGraph>& small_corpus) {
    Outcome o;
    for (const SignedGraph& g : small_corpus) {
        const IntPolynomial chi = chromatic_polynomial(g);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (chromatic_polynomial(switch_at(g, v)) != chi)
                fail(o, g.to_string() + " chromatic, vertex " + std::to_string(v));
            if (!verify_switching_equivariance(g, v))
                fail(o, g.to_string() + " chain map, vertex " + std::to_string(v));
        }
    }
    return o;
}

// criterion 8: the independent oracles reproduce both pillars
Outcome oracles(const std::vector<SignedGraph>& corpus,
                const std::vector<SignedGraph>& small_corpus) {
    Outcome o;
    for (const SignedGraph& g : corpus)
        if (chromatic_by_interpolation(g) != chromatic_polynomial(g))
            fail(o, g.to_string() + " chromatic paths");
    for (const SignedGraph& g : small_corpus) {
        const ColoringComplex cc(g);
        const auto oracle = face_oracle::hyperplane_oracle_faces(g);
        for (int r = -1; r <= cc.top_grade(); ++r) {
            const auto& got = cc.faces(r);
            const std::set<Face> have(got.begin(), got.end());
            if (have != oracle.at(r)) fail(o, g.to_string() + " faces at grade " +
                                               std::to_string(r));
        }
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--slow") slow = true;
    if (const char* env = std::getenv("SGH_SLOW"); env && std::string(env) == "1") slow = true;

    // the shared corpus: exhaustive classes for n <= 3 plus 50 seeded n = 4 draws
    std::vector<SignedGraph> small_corpus;
    for (int n = 1; n <= 3; ++n)
        for (const SignedGraph& g : exhaustive_corpus(n)) small_corpus.push_back(g);
    std::vector<SignedGraph> corpus = small_corpus;
    for (const SignedGraph& g : random_corpus(4, kRandomCount, kCorpusSeed))
        corpus.push_back(g);

    struct Criterion {
        std::string name;
        double limit_seconds;  // 0 = no pinned limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"running example end-to-end", 5.0, [] { return running_example_end_to_end(); }},
        {"base-case homology and cycles", 30.0, [] { return base_cases(); }},
        {"group-algebra identities", 0.0, [&] { return group_algebra_identities(slow); }},
        {"boundary-idempotent intertwining", 0.0, [&] { return intertwining(corpus); }},
        {"hodge dimensions equal chromatic coefficients", 600.0,
         [&] { return main_theorem(corpus); }},
        {"chain-dimension deletion-contraction", 0.0,
         [&] { return dimension_identity(small_corpus); }},
        {"switching invariance", 0.0, [&] { return switching(small_corpus); }},
        {"independent oracles agree", 0.0, [&] { return oracles(corpus, small_corpus); }},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = criteria[i].run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = criteria[i].limit_seconds == 0.0 || seconds < criteria[i].limit_seconds;
        const bool ok = outcome.ok && in_time;
        all_ok = all_ok && ok;
        std::ostringstream line;
        line << "[" << i + 1 << "] " << criteria[i].name << ": " << (ok ? "PASS" : "FAIL")
             << " (" << std::fixed << std::setprecision(2) << seconds << "s";
        if (criteria[i].limit_seconds > 0.0) line << ", limit " << criteria[i].limit_seconds << "s";
        line << ")";
        std::cout << line.str() << "\n";
        if (!outcome.ok) std::cout << "    first failure: " << outcome.detail << "\n";
        if (!in_time) std::cout << "    over the pinned time limit\n";
    }
    std::cout << (all_ok ? "acceptance: all 8 criteria passed" : "acceptance: FAILED") << "\n";
    return all_ok ? 0 : 1;
}
