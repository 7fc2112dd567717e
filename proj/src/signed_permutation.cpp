#include "sgh/signed_permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sgh {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : window_) {
        int v = std::abs(x);
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("SignedPermutation: window is not a signed permutation of [" +
                                        std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("SignedPermutation::identity: negative rank");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
    if (i == 0) return 0;
    int v = std::abs(i);
    if (v > rank()) throw std::out_of_range("SignedPermutation: argument outside ±[n]");
    int img = window_[static_cast<std::size_t>(v - 1)];
    return i > 0 ? img : -img;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i) out << " ";
        out << window_[i];
    }
    out << "]";
    return out.str();
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::string inner(text);
    if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']')
        throw std::invalid_argument("SignedPermutation::parse: expected \"[a b c]\"");
    inner = inner.substr(1, inner.size() - 2);
    std::istringstream in(inner);
    std::vector<int> w;
    int x;
    while (in >> x) w.push_back(x);
    if (!in.eof()) throw std::invalid_argument("SignedPermutation::parse: trailing garbage");
    return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
    std::vector<int> w(static_cast<std::size_t>(a.rank()));
    for (int i = 1; i <= a.rank(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return SignedPermutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& a) {
    std::vector<int> w(static_cast<std::size_t>(a.rank()));
    for (int i = 1; i <= a.rank(); ++i) {
        int j = a(i);
        if (j > 0)
            w[static_cast<std::size_t>(j - 1)] = i;
        else
            w[static_cast<std::size_t>(-j - 1)] = -i;
    }
    return SignedPermutation(std::move(w));
}

int descents(const SignedPermutation& a) {
    int d = 0, prev = 0;  // π(0) = 0 counts position i = 0
    for (int x : a.window()) {
        if (prev > x) ++d;
        prev = x;
    }
    return d;
}

int sign_of(const SignedPermutation& a) {
    const auto& w = a.window();
    int parity = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) ++parity;
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (std::abs(w[i]) > std::abs(w[j])) ++parity;
    }
    return parity % 2 ? -1 : 1;
}

std::vector<SignedPermutation> enumerate_group(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("enumerate_group: rank must be in 0..6");
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    std::vector<SignedPermutation> out;
    out.reserve((static_cast<std::size_t>(1) << n) * [n] {
        std::size_t f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
        return f;
    }());
    do {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.emplace_back(SignedPermutation(std::move(w)));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace sgh
