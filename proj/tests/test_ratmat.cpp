#include "doctest.h"

#include "sgh/int_polynomial.hpp"
#include "sgh/qmatrix.hpp"
#include "sgh/rational.hpp"

#include <cstdint>
#include <vector>

using namespace sgh;

namespace {

// Independent oracle: dense textbook Gaussian elimination over Rational.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

QMatrix from_dense(const std::vector<std::vector<Rational>>& d, int cols) {
    QMatrix m(static_cast<int>(d.size()), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c)
            if (d[r][c] != 0) m.set(r, c, d[r][c]);
    return m;
}

// small deterministic LCG for reproducible random matrices
struct TestRng {
    std::uint64_t s;
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>((next() >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

TEST_SUITE("ratmat") {

TEST_CASE("rational lowest terms and integrality probes") {
    Rational q(6, 4);
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 2);
    CHECK(!is_integer(q));
    CHECK(is_integer(Rational(8, 4)));
    CHECK(to_count(Rational(12, 4), "test") == 3);
    CHECK_THROWS_AS(to_count(Rational(1, 2), "test"), std::logic_error);
    CHECK_THROWS_AS(to_count(Rational(-1), "test"), std::logic_error);
}

TEST_CASE("rank of [[1,2],[2,4]] is 1") {
    QMatrix m(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    CHECK(rank(m) == 1);
    CHECK(kernel_dim(m) == 1);
}

TEST_CASE("trace of the half projector") {
    QMatrix m(2, 2);
    m.set(0, 0, Rational(1, 2));
    m.set(0, 1, Rational(1, 2));
    m.set(1, 0, Rational(1, 2));
    m.set(1, 1, Rational(1, 2));
    CHECK(trace(m) == 1);
    CHECK(rank(m) == 1);  // idempotent: rank == trace
    CHECK(matmul(m, m) == m);
}

TEST_CASE("matmul identity and shape checks") {
    QMatrix m(2, 3);
    m.set(0, 0, Rational(1, 3));
    m.set(1, 2, -2);
    CHECK(matmul(QMatrix::identity(2), m) == m);
    CHECK(matmul(m, QMatrix::identity(3)) == m);
    CHECK_THROWS_AS(matmul(m, m), std::invalid_argument);
    CHECK_THROWS_AS(trace(m), std::invalid_argument);
}

TEST_CASE("zero-dimensional matrices behave") {
    QMatrix a(0, 5), b(5, 0);
    CHECK(rank(a) == 0);
    CHECK(kernel_dim(a) == 5);
    CHECK(rank(b) == 0);
    QMatrix ab = matmul(a, b);
    CHECK(ab.rows() == 0);
    CHECK(ab.cols() == 0);
    CHECK(trace(QMatrix(0, 0)) == 0);
}

TEST_CASE("sparse storage drops explicit zeros") {
    QMatrix m(2, 2);
    m.set(0, 0, 5);
    m.set(0, 0, 0);
    CHECK(m.nnz() == 0);
    m.add(1, 1, Rational(1, 2));
    m.add(1, 1, Rational(-1, 2));
    CHECK(m.nnz() == 0);
    CHECK(m.at(1, 1) == 0);
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
}

TEST_CASE("rank agrees with the dense oracle on random rational matrices") {
    TestRng rng{20130727};
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.range(1, 7), cols = rng.range(1, 7);
        std::vector<std::vector<Rational>> d(rows, std::vector<Rational>(cols));
        for (auto& row : d)
            for (auto& x : row) {
                int num = rng.range(-3, 3);
                int den = rng.range(1, 4);
                x = Rational(num, den);
            }
        QMatrix m = from_dense(d, cols);
        CHECK(rank(m) == dense_rank(d));
        CHECK(kernel_dim(m) + rank(m) == static_cast<std::size_t>(cols));
    }
}

TEST_CASE("rank is submultiplicative and transpose-free sanity") {
    // products of random matrices: rank(AB) <= min(rank A, rank B)
    TestRng rng{7};
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.range(2, 6), k = rng.range(2, 6), m = rng.range(2, 6);
        QMatrix a(n, k), b(k, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) {
                int v = rng.range(-2, 2);
                if (v != 0) a.set(i, j, v);
            }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) {
                int v = rng.range(-2, 2);
                if (v != 0) b.set(i, j, v);
            }
        CHECK(rank(matmul(a, b)) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("matrix addition, subtraction, scaling") {
    QMatrix a(2, 2), b(2, 2);
    a.set(0, 1, Rational(2, 3));
    b.set(0, 1, Rational(1, 3));
    b.set(1, 0, 4);
    QMatrix s = a + b;
    CHECK(s.at(0, 1) == 1);
    CHECK(s.at(1, 0) == 4);
    CHECK((s - b) == a);
    CHECK(a.scaled(3).at(0, 1) == 2);
    CHECK(a.scaled(0).is_zero());
    QMatrix wrong(2, 3);
    CHECK_THROWS_AS(a + wrong, std::invalid_argument);
}

TEST_CASE("polynomial construction trims and formats") {
    IntPolynomial p({-2, 5, -4, 1});  // λ^3 - 4λ^2 + 5λ - 2
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "λ^3 - 4λ^2 + 5λ - 2");
    CHECK(p.to_string("x") == "x^3 - 4x^2 + 5x - 2");
    CHECK(p(Int(3)) == 4);   // 27 - 36 + 15 - 2
    CHECK(p(Int(1)) == 0);

    CHECK(IntPolynomial({0, 0, 0}).is_zero());
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial({0, -1, 1}).to_string() == "λ^2 - λ");
    CHECK(IntPolynomial({1}).to_string() == "1");
    CHECK(IntPolynomial({-1, 1}).to_string() == "λ - 1");
    CHECK(IntPolynomial::monomial(2).to_string() == "λ^2");
    CHECK(IntPolynomial::monomial(0, -7).to_string() == "-7");
    CHECK_THROWS_AS(IntPolynomial::monomial(-1), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial x = IntPolynomial::monomial(1);
    IntPolynomial one = IntPolynomial::monomial(0);
    IntPolynomial p = (x - one) * (x - one) * (x - IntPolynomial::monomial(0, 2));
    CHECK(p == IntPolynomial({-2, 5, -4, 1}));
    CHECK((p - p).is_zero());
    CHECK((p + p) == p * IntPolynomial::monomial(0, 2));
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);
    // rational evaluation stays exact
    CHECK(p(Rational(1, 2)) == Rational(-3, 8));
}

}  // TEST_SUITE
