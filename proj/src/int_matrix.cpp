#include "ghom/int_matrix.hpp"

#include <cassert>
#include <sstream>

#include "ghom/common.hpp"

namespace ghom {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows.begin()->size());
    IntMatrix m(r, c);
    long i = 0;
    for (const auto& row : rows) {
        assert(static_cast<long>(row.size()) == c);
        long j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
    IntMatrix m(static_cast<long>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<long>(i), 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(long rows, long cols, const std::vector<Int>& d) {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < d.size(); ++i) {
        long k = static_cast<long>(i);
        assert(k < rows && k < cols);
        m.at(k, k) = d[i];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum: dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference: dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<long>(x.size()) != cols_) throw Error("matrix apply: dimension mismatch");
    std::vector<Int> y(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    return y;
}

std::vector<Int> IntMatrix::col(long c) const {
    std::vector<Int> v(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row(long r) const {
    std::vector<Int> v(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(r, j);
    return v;
}

void IntMatrix::set_col(long c, const std::vector<Int>& v) {
    assert(static_cast<long>(v.size()) == rows_);
    for (long i = 0; i < rows_; ++i) at(i, c) = v[static_cast<size_t>(i)];
}

IntMatrix IntMatrix::select_cols(const std::vector<long>& idx) const {
    IntMatrix r(rows_, static_cast<long>(idx.size()));
    for (long j = 0; j < r.cols_; ++j)
        for (long i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[static_cast<size_t>(j)]);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<long>& idx) const {
    IntMatrix r(static_cast<long>(idx.size()), cols_);
    for (long i = 0; i < r.rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(idx[static_cast<size_t>(i)], j);
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw Error("hcat: row mismatch");
    IntMatrix r(a.rows_, a.cols_ + b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
        for (long j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw Error("vcat: column mismatch");
    IntMatrix r(a.rows_ + b.rows_, a.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

void IntMatrix::swap_rows(long i, long j) {
    if (i == j) return;
    for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(long i, long j) {
    if (i == j) return;
    for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(long dst, long src, const Int& q) {
    if (q == 0) return;
    for (long c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(long dst, long src, const Int& q) {
    if (q == 0) return;
    for (long r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_row(long i) {
    for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(long j) {
    for (long r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant: square matrix required");
    long n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sgn > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace ghom
