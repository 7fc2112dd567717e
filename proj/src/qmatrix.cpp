#include "sgh/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgh {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative dimension");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::size_t QMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& r : rows_data_) total += r.size();
    return total;
}

namespace {
QMatrix::Row::iterator find_col(QMatrix::Row& row, int c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const auto& e, int col) { return e.first < col; });
}
}  // namespace

const Rational& QMatrix::at(int r, int c) const {
    static const Rational zero = 0;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("QMatrix::at");
    const Row& row = rows_data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : zero;
}

void QMatrix::set(int r, int c, Rational v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("QMatrix::set");
    Row& row = rows_data_[static_cast<std::size_t>(r)];
    auto it = find_col(row, c);
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = std::move(v);
    } else if (v != 0) {
        row.insert(it, {c, std::move(v)});
    }
}

void QMatrix::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("QMatrix::add");
    Row& row = rows_data_[static_cast<std::size_t>(r)];
    auto it = find_col(row, c);
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix::+: shape mismatch");
    QMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        out.rows_data_[r] = rows_data_[r];
        for (const auto& [c, v] : o.rows_data_[r]) out.add(r, c, v);
    }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o.scaled(-1); }

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (int r = 0; r < rows_; ++r) {
        out.rows_data_[r] = rows_data_[r];
        for (auto& [c, v] : out.rows_data_[r]) v *= s;
    }
    return out;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    QMatrix out(a.rows(), b.cols());
    // dense scratch per output row keeps the accumulation linear in the fill
    std::vector<Rational> acc(static_cast<std::size_t>(b.cols()));
    std::vector<int> touched;
    for (int i = 0; i < a.rows(); ++i) {
        touched.clear();
        for (const auto& [k, v] : a.row(i)) {
            for (const auto& [c, w] : b.row(k)) {
                if (acc[c] == 0 && !(v == 0)) touched.push_back(c);
                acc[c] += v * w;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            if (acc[c] != 0) out.set(i, c, acc[c]);
            acc[c] = 0;
        }
    }
    return out;
}

Rational trace(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace: matrix not square");
    Rational t = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i))
            if (c == i) t += v;
    return t;
}

namespace {

using IRow = std::vector<std::pair<int, Int>>;

// clear denominators and strip the content so every row is a primitive integer vector
IRow primitive_int_row(const QMatrix::Row& row) {
    Int lcm_den = 1;
    for (const auto& [c, v] : row) {
        Int d = denominator(v);
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    IRow out;
    out.reserve(row.size());
    Int content = 0;
    for (const auto& [c, v] : row) {
        Int x = numerator(v) * (lcm_den / denominator(v));
        content = gcd(content, x);
        out.emplace_back(c, std::move(x));
    }
    if (content > 1)
        for (auto& [c, x] : out) x /= content;
    return out;
}

// row_j := (pj * row_j - jj * pivot) / content, leading column of row_j eliminated
IRow combine(const IRow& row_j, const Int& jj, const IRow& pivot, const Int& pj) {
    IRow out;
    out.reserve(row_j.size() + pivot.size());
    auto a = row_j.begin(), b = pivot.begin();
    Int content = 0;
    auto push = [&](int c, Int v) {
        if (v == 0) return;
        content = gcd(content, v);
        out.emplace_back(c, std::move(v));
    };
    while (a != row_j.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row_j.end() && a->first < b->first)) {
            push(a->first, a->second * pj);
            ++a;
        } else if (a == row_j.end() || b->first < a->first) {
            push(b->first, -(b->second * jj));
            ++b;
        } else {
            push(a->first, a->second * pj - b->second * jj);
            ++a, ++b;
        }
    }
    if (content > 1)
        for (auto& [c, v] : out) v /= content;
    return out;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
    std::vector<IRow> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) rows.push_back(primitive_int_row(m.row(r)));

    std::size_t rank_ = 0;
    while (!rows.empty()) {
        // pivot on the lowest leading column; among candidates prefer the sparsest row
        std::size_t pivot = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            int ci = rows[i].front().first, cp = rows[pivot].front().first;
            if (ci < cp || (ci == cp && rows[i].size() < rows[pivot].size())) pivot = i;
        }
        IRow prow = std::move(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        ++rank_;
        const int col = prow.front().first;
        const Int& pv = prow.front().second;
        std::vector<IRow> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            if (row.front().first == col) {
                IRow combined = combine(row, row.front().second, prow, pv);
                if (!combined.empty()) next.push_back(std::move(combined));
            } else {
                next.push_back(std::move(row));
            }
        }
        rows = std::move(next);
    }
    return rank_;
}

std::size_t kernel_dim(const QMatrix& m) { return static_cast<std::size_t>(m.cols()) - rank(m); }

}  // namespace sgh
