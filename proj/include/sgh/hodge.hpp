#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgh/coloring_complex.hpp"
#include "sgh/int_polynomial.hpp"
#include "sgh/rational.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {

// reduced homology dimensions of the complex, indexed from grade -1 up to the
// top grade n-2
std::vector<Int> homology_dims(const ColoringComplex& cc);

// Hodge summand dimensions of the top homology (j = 0..n-1), computed as the
// alternating sum over every grade of the idempotent-projector traces
std::vector<Int> hodge_dims_euler(const ColoringComplex& cc);

// the same dimensions read off at the top grade alone: the projector's trace
// minus the rank of the boundary restricted to the projector's image
std::vector<Int> hodge_dims_kernel(const ColoringComplex& cc);

// whether boundary-then-project equals project-then-boundary at every grade,
// for each of the three families of group-algebra elements
struct IntertwiningChecks {
    bool idempotents = false;    // eulerian_idempotent, degree-matched
    bool descent_sums = false;   // l_element, target summed over two degrees
    bool binomial_sums = false;  // lambda_element, including its extension
    bool all() const { return idempotents && descent_sums && binomial_sums; }
};
IntertwiningChecks verify_intertwining(const ColoringComplex& cc);

// the two irreducible inputs of the deletion-contraction recursion
enum class BaseKind { half_edge, edge };

// a lone half-edge at vertex n, or a lone positive edge {n-1, n}
SignedGraph base_case_graph(int n, BaseKind kind);

// the distinguished facet of that graph's complex: singleton early blocks
// 1, 2, ..., then either both literals of n kept final (half_edge) or the
// doubleton {n-1, n} as the last early block (edge)
Face base_case_face(int n, BaseKind kind);

// coefficients over the top-grade basis of the sign-weighted group average of
// the distinguished facet: a cycle spanning the top Hodge summand
std::vector<Rational> base_cycle(const ColoringComplex& cc, BaseKind kind);

// dim C_r^{(j)} for r = -1..max_n-2 (rows) and j = 0..max_n-1 (columns);
// entries outside the graph's own range are zero, and an edgeless graph's
// table is identically zero (its complex is void)
std::vector<std::vector<Int>> chain_dimension_table(const SignedGraph& g, int max_n);

// for every positive edge e of g, the chain dimensions satisfy
//   dim C(g) = dim C(g minus e) - dim C(g contracted at e) + dim C(e alone)
// entrywise over the whole table
bool verify_chain_dimension_identity(const SignedGraph& g);

// negating vertex v maps the complex of g grade-by-grade onto the complex of
// switch_at(g, v), commuting with every boundary map, with the action of a
// sample of signed permutations, and preserving the Hodge dimensions
bool verify_switching_equivariance(const SignedGraph& g, int v);

// everything checked about one graph, with a stable check order
struct HodgeReport {
    SignedGraph graph;
    IntPolynomial chromatic;
    std::vector<Int> coefficients;  // c_0..c_{n-1}, all natural
    std::vector<Int> homology;      // grades -1..n-2
    std::vector<Int> hodge_euler;   // j = 0..n-1
    std::vector<Int> hodge_kernel;
    std::vector<std::pair<std::string, bool>> checks;
    bool verdict = false;
};

// runs the full battery against g; throws only on malformed input (no edges,
// too many vertices) — failed checks are reported, not thrown
HodgeReport verify_main_theorem(const SignedGraph& g);

// stable JSON shape with exactly the keys: chromatic (ascending integer
// coefficients), c, homology, hodge_euler, hodge_kernel, checks, verdict
std::string to_json(const HodgeReport& report);

}  // namespace sgh
