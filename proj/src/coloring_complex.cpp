#include "sgh/coloring_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgh {

namespace {

// +v sorts immediately before -v
bool literal_less(int a, int b) {
    return std::pair(std::abs(a), a < 0) < std::pair(std::abs(b), b < 0);
}

}  // namespace

Face::Face(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("face: needs at least the final block");
    for (const auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("face: empty block");
        for (int x : b) {
            if (x == 0) throw std::invalid_argument("face: zero literal");
            n_ = std::max(n_, std::abs(x));
        }
    }
    // every literal of {±1..±n} appears exactly once across the blocks
    std::vector<int> seen(2 * static_cast<std::size_t>(n_), 0);
    auto slot = [this](int x) {
        return static_cast<std::size_t>(x > 0 ? x - 1 : n_ - x - 1);
    };
    for (const auto& b : blocks_)
        for (int x : b)
            if (seen[slot(x)]++)
                throw std::invalid_argument("face: repeated literal " + std::to_string(x));
    for (int v = 1; v <= n_; ++v)
        if (!seen[slot(v)] || !seen[slot(-v)])
            throw std::invalid_argument("face: missing a literal of vertex " + std::to_string(v));
    // chain condition: the early blocks jointly take at most one literal per vertex
    std::vector<int> early(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t bi = 0; bi + 1 < blocks_.size(); ++bi)
        for (int x : blocks_[bi])
            if (early[static_cast<std::size_t>(std::abs(x))]++)
                throw std::invalid_argument("face: both literals of vertex " +
                                            std::to_string(std::abs(x)) + " before the final block");
    for (auto& b : blocks_) std::sort(b.begin(), b.end(), literal_less);
}

Face Face::trivial(int n) {
    if (n < 1) throw std::invalid_argument("face: ground set needs at least one vertex");
    std::vector<int> all;
    all.reserve(2 * static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        all.push_back(v);
        all.push_back(-v);
    }
    return Face({std::move(all)});
}

Face Face::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    std::string token;
    auto flush_token = [&] {
        if (token.empty()) throw std::invalid_argument("face parse: empty element");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("face parse: bad element '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("face parse: bad element '" + token + "'");
        current.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush_token();
        } else if (ch == '|') {
            flush_token();
            blocks.push_back(std::move(current));
            current.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            token.push_back(ch);
        }
    }
    flush_token();
    blocks.push_back(std::move(current));
    return Face(std::move(blocks));
}

std::string Face::to_string() const {
    std::ostringstream out;
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        if (bi) out << '|';
        for (std::size_t k = 0; k < blocks_[bi].size(); ++k) {
            if (k) out << ',';
            out << blocks_[bi][k];
        }
    }
    return out.str();
}

Face merge_blocks(const Face& f, int i) {
    if (i < 1 || i > f.grade() + 1)
        throw std::invalid_argument("merge_blocks: index " + std::to_string(i) + " out of range");
    std::vector<std::vector<int>> blocks = f.blocks();
    auto& dst = blocks[static_cast<std::size_t>(i - 1)];
    auto& src = blocks[static_cast<std::size_t>(i)];
    dst.insert(dst.end(), src.begin(), src.end());
    blocks.erase(blocks.begin() + i);
    return Face(std::move(blocks));
}

Face apply_permutation(const Face& f, const SignedPermutation& pi) {
    const int r = f.grade();
    if (pi.rank() != r + 1)
        throw std::invalid_argument("apply_permutation: rank " + std::to_string(pi.rank()) +
                                    " does not match grade " + std::to_string(r));
    const SignedPermutation inv = inverse(pi);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(r) + 2);
    std::map<int, bool> flipped;  // vertex -> its early literal sat in a negated block
    for (int m = 1; m <= r + 1; ++m) {
        const int k = inv(m);
        const bool neg = k < 0;
        std::vector<int> blk = f.blocks()[static_cast<std::size_t>(std::abs(k)) - 1];
        if (neg)
            for (int& x : blk) x = -x;
        for (int x : blk) flipped[std::abs(x)] = neg;
        blocks.push_back(std::move(blk));
    }
    std::vector<int> fin;
    fin.reserve(f.final_block().size());
    for (int x : f.final_block()) {
        auto it = flipped.find(std::abs(x));
        fin.push_back(it != flipped.end() && it->second ? -x : x);
    }
    blocks.push_back(std::move(fin));
    return Face(std::move(blocks));
}

Face negate_vertex(const Face& f, int v) {
    if (v < 1 || v > f.ground_set_size()) throw std::invalid_argument("negate_vertex: vertex out of range");
    std::vector<std::vector<int>> blocks = f.blocks();
    for (auto& b : blocks)
        for (int& x : b)
            if (std::abs(x) == v) x = -x;
    return Face(std::move(blocks));
}

bool block_contains_edge(const std::vector<int>& block, const SignedGraph& g) {
    std::set<int> s(block.begin(), block.end());
    for (const auto& [a, b] : g.positive_edges())
        if ((s.contains(a) && s.contains(b)) || (s.contains(-a) && s.contains(-b))) return true;
    for (const auto& [a, b] : g.negative_edges())
        if ((s.contains(a) && s.contains(-b)) || (s.contains(-a) && s.contains(b))) return true;
    return false;
}

namespace {

// everything in {±1..±n} not claimed by the early blocks
std::vector<int> remaining_literals(const std::vector<std::vector<int>>& early, int n) {
    std::set<int> used;
    for (const auto& b : early) used.insert(b.begin(), b.end());
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!used.contains(v)) out.push_back(v);
        if (!used.contains(-v)) out.push_back(-v);
    }
    return out;
}

// inserts one facet per ordering of the given early-block items
void add_facets_for_items(std::set<Face>& out, const std::vector<std::vector<int>>& items, int n) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(items.size() + 1);
        for (std::size_t idx : order) blocks.push_back(items[idx]);
        blocks.push_back(remaining_literals(blocks, n));
        out.insert(Face(std::move(blocks)));
    } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

std::vector<Face> facets(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::set<Face> out;

    std::vector<std::pair<int, int>> embeddings;
    for (const auto& [a, b] : g.positive_edges()) {
        embeddings.emplace_back(a, b);
        embeddings.emplace_back(-a, -b);
    }
    for (const auto& [a, b] : g.negative_edges()) {
        embeddings.emplace_back(a, -b);
        embeddings.emplace_back(-a, b);
    }
    for (const auto& [x, y] : embeddings) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != std::abs(x) && v != std::abs(y)) rest.push_back(v);
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            std::vector<std::vector<int>> items{{x, y}};
            for (std::size_t t = 0; t < rest.size(); ++t)
                items.push_back({(mask >> t & 1u) ? -rest[t] : rest[t]});
            add_facets_for_items(out, items, n);
        }
    }

    for (int i : g.half_edges()) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != i) rest.push_back(v);
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            std::vector<std::vector<int>> items;
            for (std::size_t t = 0; t < rest.size(); ++t)
                items.push_back({(mask >> t & 1u) ? -rest[t] : rest[t]});
            add_facets_for_items(out, items, n);
        }
    }

    return {out.begin(), out.end()};
}

ColoringComplex::ColoringComplex(const SignedGraph& g) : g_(g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("coloring complex: the graph has no edges or half-edges");
    if (g.vertex_count() > 6)
        throw std::invalid_argument("coloring complex: supported only up to 6 vertices");
    const int top = top_grade();
    by_grade_.assign(static_cast<std::size_t>(top) + 2, {});

    std::vector<Face> fac = facets(g_);
    std::set<Face> current(fac.begin(), fac.end());
    for (int r = top; r >= 0; --r) {
        by_grade_[static_cast<std::size_t>(r) + 1] = {current.begin(), current.end()};
        std::set<Face> lower;
        for (const Face& f : current)
            for (int i = 1; i <= r + 1; ++i) lower.insert(merge_blocks(f, i));
        current = std::move(lower);
    }
    by_grade_[0] = {current.begin(), current.end()};
    if (by_grade_[0].size() != 1 || by_grade_[0][0] != Face::trivial(g.vertex_count()))
        throw std::logic_error("coloring complex: merging did not terminate at the trivial partition");
}

const std::vector<Face>& ColoringComplex::faces(int grade) const {
    if (grade < -1 || grade > top_grade())
        throw std::invalid_argument("coloring complex: grade " + std::to_string(grade) + " out of range");
    return by_grade_[static_cast<std::size_t>(grade) + 1];
}

int ColoringComplex::index_of(int grade, const Face& f) const {
    const auto& basis = faces(grade);
    auto it = std::lower_bound(basis.begin(), basis.end(), f);
    if (it == basis.end() || *it != f) return -1;
    return static_cast<int>(it - basis.begin());
}

std::vector<std::int64_t> ColoringComplex::f_vector() const {
    std::vector<std::int64_t> out;
    out.reserve(by_grade_.size());
    for (const auto& basis : by_grade_) out.push_back(static_cast<std::int64_t>(basis.size()));
    return out;
}

QMatrix ColoringComplex::boundary_matrix(int r) const {
    if (r < 0 || r > top_grade())
        throw std::invalid_argument("boundary_matrix: grade " + std::to_string(r) + " out of range");
    const auto& cols = faces(r);
    QMatrix m(static_cast<int>(faces(r - 1).size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int i = 1; i <= r + 1; ++i) {
            const int row = index_of(r - 1, merge_blocks(cols[c], i));
            if (row < 0) throw std::logic_error("boundary_matrix: merged face missing from the complex");
            m.add(row, static_cast<int>(c), (i % 2) ? Rational(1) : Rational(-1));
        }
    }
    return m;
}

QMatrix ColoringComplex::action_matrix(int grade, const SignedPermutation& pi) const {
    const auto& basis = faces(grade);
    if (pi.rank() != grade + 1)
        throw std::invalid_argument("action_matrix: rank " + std::to_string(pi.rank()) +
                                    " does not match grade " + std::to_string(grade));
    QMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const int row = index_of(grade, apply_permutation(basis[c], pi));
        if (row < 0) throw std::logic_error("action_matrix: the action left the face set");
        m.set(row, static_cast<int>(c), Rational(1));
    }
    return m;
}

QMatrix ColoringComplex::algebra_action_matrix(int grade, const AlgebraElement& a) const {
    const auto& basis = faces(grade);
    if (a.rank() != grade + 1)
        throw std::invalid_argument("algebra_action_matrix: rank " + std::to_string(a.rank()) +
                                    " does not match grade " + std::to_string(grade));
    QMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (const auto& [w, coeff] : a.terms()) {
            const int row = index_of(grade, apply_permutation(basis[c], w));
            if (row < 0) throw std::logic_error("algebra_action_matrix: the action left the face set");
            m.add(row, static_cast<int>(c), coeff);
        }
    }
    return m;
}

}  // namespace sgh
