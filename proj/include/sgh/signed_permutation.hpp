#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sgh {

// Element of the hyperoctahedral group B_n in window notation [π(1) … π(n)]:
// a permutation π of {±1,…,±n} with π(-i) = -π(i) (and π(0) = 0 implicitly).
// Rank 0 (the empty window) is the trivial group and is a valid value; it acts
// as the identity wherever a group of rank 0 is called for.
class SignedPermutation {
 public:
    SignedPermutation() = default;  // rank 0
    explicit SignedPermutation(std::vector<int> window);
    static SignedPermutation identity(int n);

    int rank() const { return static_cast<int>(window_.size()); }
    const std::vector<int>& window() const { return window_; }

    // signed application: i in {-n,…,-1,0,1,…,n}, with (0 -> 0)
    int operator()(int i) const;

    auto operator<=>(const SignedPermutation&) const = default;

    // "[2 -1 -3]"
    std::string to_string() const;
    static SignedPermutation parse(std::string_view text);

 private:
    std::vector<int> window_;
};

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);  // a∘b: i ↦ a(b(i))
SignedPermutation inverse(const SignedPermutation& a);

// #{i in [0, n-1] : π(i) > π(i+1)}, with π(0) = 0
int descents(const SignedPermutation& a);

// (-1)^length = determinant of the signed permutation matrix
int sign_of(const SignedPermutation& a);

// all 2^n n! elements, ordered lexicographically by (underlying permutation,
// sign mask); n ≤ 6 guard
std::vector<SignedPermutation> enumerate_group(int n);

}  // namespace sgh
