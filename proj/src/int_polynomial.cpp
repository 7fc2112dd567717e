#include "sgh/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace sgh {

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int power, Int coeff) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    if (coeff == 0) return {};
    std::vector<Int> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(int power) const {
    static const Int zero = 0;
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(power)];
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] -= o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Int& c = coeff(p);
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || p == 0) out << mag.str();
        if (p > 0) {
            out << var;
            if (p > 1) out << "^" << p;
        }
    }
    return out.str();
}

}  // namespace sgh
