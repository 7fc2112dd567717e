#include "sgh/group_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace sgh {

AlgebraElement::AlgebraElement(int rank) : rank_(rank) {
    if (rank < 0 || rank > 6) throw std::invalid_argument("AlgebraElement: rank must be in 0..6");
}

AlgebraElement AlgebraElement::unit(int rank) {
    AlgebraElement e(rank);
    e.add_term(SignedPermutation::identity(rank), 1);
    return e;
}

Rational AlgebraElement::coeff(const SignedPermutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const SignedPermutation& g, const Rational& c) {
    if (g.rank() != rank_) throw std::invalid_argument("AlgebraElement::add_term: rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("AlgebraElement::+: rank mismatch");
    AlgebraElement out = *this;
    for (const auto& [g, c] : o.terms_) out.add_term(g, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.scaled(-1); }

AlgebraElement AlgebraElement::scaled(const Rational& s) const {
    AlgebraElement out(rank_);
    if (s == 0) return out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * s);
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("multiply: rank mismatch");
    AlgebraElement out(a.rank());
    for (const auto& [g, x] : a.terms())
        for (const auto& [h, y] : b.terms()) out.add_term(compose(g, h), x * y);
    return out;
}

AlgebraElement l_element(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("l_element: j must be in 0..n");
    AlgebraElement out(n);
    const int outer = (j % 2 == 1) ? 1 : -1;  // (-1)^{j-1}
    for (const auto& pi : enumerate_group(n))
        if (descents(pi) == j) out.add_term(pi, outer * sign_of(pi));
    return out;
}

namespace {
Int binomial(int n, int k) {
    Int b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}
}  // namespace

AlgebraElement lambda_element(int n, int j) {
    if (j < 0 || j > n + 1) throw std::invalid_argument("lambda_element: j must be in 0..n+1");
    AlgebraElement out(n);
    for (int i = 0; i <= j; ++i) {
        if (j - i > n) continue;  // only j = n+1 skips a summand
        Rational c(binomial(n + i, i));
        if (i % 2) c = -c;
        out = out + l_element(n, j - i).scaled(c);
    }
    return out;
}

AlgebraElement eulerian_idempotent(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("eulerian_idempotent: j must be in 0..n");
    // expand Π_{k=1}^n (x - 2d + 2k - 1) once per descent value d
    std::vector<std::vector<Rational>> coeff_by_descent;
    coeff_by_descent.reserve(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
        std::vector<Rational> p{1};
        for (int k = 1; k <= n; ++k) {
            std::vector<Rational> q(p.size() + 1);
            const Rational root(-2 * d + 2 * k - 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i] += p[i] * root;
                q[i + 1] += p[i];
            }
            p = std::move(q);
        }
        coeff_by_descent.push_back(std::move(p));
    }
    Int denom = 1;
    for (int i = 1; i <= n; ++i) denom *= 2 * i;  // 2^n n!

    AlgebraElement out(n);
    for (const auto& pi : enumerate_group(n)) {
        Rational c = coeff_by_descent[static_cast<std::size_t>(descents(pi))][static_cast<std::size_t>(j)] /
                     Rational(denom) * sign_of(pi);
        out.add_term(pi, c);
    }
    return out;
}

}  // namespace sgh
