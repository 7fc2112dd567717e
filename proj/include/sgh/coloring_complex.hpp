#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/group_algebra.hpp"
#include "sgh/qmatrix.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/signed_permutation.hpp"

namespace sgh {

// An ordered set partition of the signed ground set {+1,-1,...,+n,-n} whose
// last block is distinguished.  A face of grade r has r+2 blocks: r+1 "early"
// blocks followed by the final block.  The early blocks jointly contain at
// most one of {+v, -v} for each vertex v, so every vertex keeps at least one
// literal in the final block.  Grade -1 is the trivial partition consisting
// of the final block alone.
//
// Blocks are stored sorted with +v immediately before -v.  The serialized
// form joins elements with ',' and blocks with '|', e.g. "1,3|-2|-1,2,-3".
class Face {
  public:
    // normalizes block order and validates the partition + chain condition
    explicit Face(std::vector<std::vector<int>> blocks);

    // the trivial partition of {±1..±n}, the unique face of grade -1
    static Face trivial(int n);

    static Face parse(std::string_view text);

    int grade() const { return static_cast<int>(blocks_.size()) - 2; }
    int ground_set_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& final_block() const { return blocks_.back(); }

    std::string to_string() const;

    auto operator<=>(const Face&) const = default;

  private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

// merges blocks i and i+1 (1-based, i in 1..grade+1), dropping the grade by one
Face merge_blocks(const Face& f, int i);

// action of a signed permutation of rank grade+1: the new block in early
// position m is P_{pi^{-1}(m)}, where P_{-i} means P_i with every sign
// flipped; final-block literals flip sign exactly when their vertex's early
// literal sat in a flipped block
Face apply_permutation(const Face& f, const SignedPermutation& pi);

// flips the sign of both literals of vertex v (the chain map induced by
// switching the graph at v)
Face negate_vertex(const Face& f, int v);

// true when the block realizes some edge of g: a positive edge {a,b} as
// {a,b} or {-a,-b}, a negative edge {a,b} as {a,-b} or {-a,b}
bool block_contains_edge(const std::vector<int>& block, const SignedGraph& g);

// the maximal faces of the coloring complex, sorted.  Pair edges contribute
// faces with one doubleton early block realizing the edge and signed
// singletons for every other vertex; half-edges contribute faces whose early
// blocks are signed singletons for every other vertex, keeping both literals
// of the half-edge vertex in the final block.
std::vector<Face> facets(const SignedGraph& g);

// The coloring complex of a signed graph with at least one edge or half-edge:
// all faces obtained from the facets by repeatedly merging adjacent blocks,
// organized by grade from -1 (the trivial partition) up to n-2.  Provides the
// boundary maps and the signed-permutation action on each grade.
class ColoringComplex {
  public:
    explicit ColoringComplex(const SignedGraph& g);

    const SignedGraph& graph() const { return g_; }
    int top_grade() const { return g_.vertex_count() - 2; }

    const std::vector<Face>& faces(int grade) const;
    int index_of(int grade, const Face& f) const;  // -1 when absent

    // face counts from grade -1 upward (f_{-1} is always 1)
    std::vector<std::int64_t> f_vector() const;

    // the signed sum of adjacent-block merges, sending grade r to grade r-1:
    // column f gets (-1)^{i-1} at row merge_blocks(f, i) for i = 1..r+1
    QMatrix boundary_matrix(int r) const;

    // permutation matrix of the action on the given grade (pi of rank grade+1)
    QMatrix action_matrix(int grade, const SignedPermutation& pi) const;

    // linear extension of the action to a group-algebra element
    QMatrix algebra_action_matrix(int grade, const AlgebraElement& a) const;

  private:
    SignedGraph g_;
    std::vector<std::vector<Face>> by_grade_;  // index 0 holds grade -1
};

}  // namespace sgh
