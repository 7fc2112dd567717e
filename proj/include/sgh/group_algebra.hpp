#pragma once

#include "sgh/rational.hpp"
#include "sgh/signed_permutation.hpp"

#include <map>

namespace sgh {

// Element of the rational group algebra Q[B_n]: finitely supported mapping
// from group elements to coefficients; zero coefficients are never stored.
class AlgebraElement {
 public:
    explicit AlgebraElement(int rank);
    static AlgebraElement unit(int rank);  // identity permutation, coefficient 1

    int rank() const { return rank_; }
    const std::map<SignedPermutation, Rational>& terms() const { return terms_; }
    Rational coeff(const SignedPermutation& g) const;
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SignedPermutation& g, const Rational& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Rational& s) const;
    bool operator==(const AlgebraElement& o) const = default;

 private:
    int rank_;
    std::map<SignedPermutation, Rational> terms_;
};

// convolution product: (a·b)(k) = Σ_{g∘h = k} a(g) b(h)
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// (-1)^{j-1} Σ_{des(π)=j} sgn(π) π, for 0 ≤ j ≤ n
AlgebraElement l_element(int n, int j);

// Σ_{i=0}^{j} (-1)^i C(n+i, i) l_element(n, j-i), for 0 ≤ j ≤ n+1; the j = n+1
// case skips the out-of-range summand and extends the family by one slot, which
// the boundary intertwining identity needs on its target side
AlgebraElement lambda_element(int n, int j);

// coefficient of x^j in Σ_π [Π_{k=1}^n (x - 2 des(π) + 2k - 1) / (2^n n!)] sgn(π) π.
// These are orthogonal idempotents summing to the identity; the coefficient
// polynomial is expanded once per descent value, so cost is O(|B_n|).
AlgebraElement eulerian_idempotent(int n, int j);

}  // namespace sgh
