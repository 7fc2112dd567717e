#pragma once

#include "sgh/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sgh {

// Sparse rational matrix with explicit dimensions (rows/cols may be zero:
// boundary maps at the ends of a chain complex are honest 0xN and Nx0 maps).
// Rows are sorted (col, value) vectors holding only nonzero entries.
class QMatrix {
 public:
    using Row = std::vector<std::pair<int, Rational>>;

    QMatrix() = default;
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    // zero when the slot holds no entry; bounds-checked
    const Rational& at(int r, int c) const;
    void set(int r, int c, Rational v);
    void add(int r, int c, const Rational& v);
    const Row& row(int r) const { return rows_data_[r]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& s) const;
    bool operator==(const QMatrix& o) const = default;

 private:
    int rows_ = 0, cols_ = 0;
    std::vector<Row> rows_data_;
};

QMatrix matmul(const QMatrix& a, const QMatrix& b);
Rational trace(const QMatrix& m);

// Exact rank by fraction-free integer elimination: each row is cleared of
// denominators and GCD-normalized, pivots are chosen to limit fill-in.
std::size_t rank(const QMatrix& m);
std::size_t kernel_dim(const QMatrix& m);

}  // namespace sgh
