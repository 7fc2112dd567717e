#pragma once

#include "sgh/int_polynomial.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgh {

// An edge handle: a signed pair edge {i,j} or a half-edge at one vertex.
struct Edge {
    enum class Kind { positive, negative, half };
    Kind kind;
    int i;      // vertex (smaller endpoint for pairs)
    int j = 0;  // larger endpoint; unused for half-edges

    static Edge positive(int a, int b);
    static Edge negative(int a, int b);
    static Edge half(int v);
    auto operator<=>(const Edge&) const = default;
    std::string to_string() const;
};

// Signed graph on vertices 1..n: positive and negative pair edges (each sign
// class simple, the same pair may carry both signs) plus at most one
// half-edge per vertex.
class SignedGraph {
 public:
    using Pair = std::pair<int, int>;  // normalized i < j

    SignedGraph(int n, std::set<Pair> positive, std::set<Pair> negative, std::set<int> half_edges);
    explicit SignedGraph(int n) : SignedGraph(n, {}, {}, {}) {}

    // Text format, one declaration per line ('#' starts a comment):
    //   vertices <n>
    //   edge + <i> <j>
    //   edge - <i> <j>
    //   halfedge <i>
    static SignedGraph parse(std::string_view text);

    int vertex_count() const { return n_; }
    const std::set<Pair>& positive_edges() const { return pos_; }
    const std::set<Pair>& negative_edges() const { return neg_; }
    const std::set<int>& half_edges() const { return half_; }
    std::size_t edge_count() const { return pos_.size() + neg_.size() + half_.size(); }
    bool has_edge(const Edge& e) const;
    std::vector<Edge> edges() const;

    bool operator==(const SignedGraph& o) const = default;
    auto operator<=>(const SignedGraph& o) const = default;

    // single-line form, also the deletion/contraction memo key
    std::string to_string() const;

 private:
    int n_;
    std::set<Pair> pos_, neg_;
    std::set<int> half_;
};

// negate the sign of every pair edge incident to v (half-edges unaffected);
// a pair carrying both signs keeps both
SignedGraph switch_at(const SignedGraph& g, int v);

SignedGraph delete_edge(const SignedGraph& g, const Edge& e);

// contraction: positive pair {i,j} merges j into i (a parallel negative copy
// becomes a half-edge at the merged vertex); a half-edge at i deletes vertex i
// and truncates its pair edges to half-edges at the far endpoint.  Vertices
// above the removed one shift down to keep labels contiguous.
SignedGraph contract_edge(const SignedGraph& g, const Edge& e);

// #{φ : [n] -> {-c..c} proper}: φ(i) ≠ φ(j) on positive edges, φ(i) ≠ -φ(j)
// on negative edges, φ(i) ≠ 0 at half-edges
Int count_proper_colorings(const SignedGraph& g, int c);

// deletion-contraction over positive edges, switching a negative pair positive
// when no positive edge remains; edge-free base case λ^{n-h}(λ-1)^h
IntPolynomial chromatic_polynomial(const SignedGraph& g);

// independent path: exact Lagrange interpolation through λ = 1, 3, …, 2n+1
// using the brute-force counts
IntPolynomial chromatic_by_interpolation(const SignedGraph& g);

// c_j with χ(λ) = λ^n + Σ_j (-1)^{n-j} c_j λ^j; throws if any c_j < 0
std::vector<Int> chromatic_coefficients(const SignedGraph& g);

}  // namespace sgh
