#pragma once

#include "sgh/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sgh {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored ascending by power with no trailing zero (the zero polynomial
// stores nothing and reports degree -1).
class IntPolynomial {
 public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending_coeffs);
    static IntPolynomial monomial(int power, Int coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // zero for powers outside the stored range
    const Int& coeff(int power) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int operator()(const Int& x) const;
    Rational operator()(const Rational& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const = default;

    // "λ^3 - 4λ^2 + 5λ - 2" (descending powers, unit coefficients elided)
    std::string to_string(std::string_view var = "λ") const;

 private:
    std::vector<Int> coeffs_;
};

}  // namespace sgh
