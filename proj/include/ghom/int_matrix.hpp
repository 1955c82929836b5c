#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ghom/common.hpp"
#include "ghom/intx.hpp"

namespace ghom {

// Dense matrix over Z, row-major. Empty (0xN, Nx0) matrices are legal
// values and behave as the corresponding zero maps.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {}

    static IntMatrix identity(long n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix column(const std::vector<Int>& v);
    static IntMatrix diagonal(long rows, long cols, const std::vector<Int>& d);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long r, long c) { return e_[static_cast<size_t>(r * cols_ + c)]; }
    const Int& at(long r, long c) const { return e_[static_cast<size_t>(r * cols_ + c)]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& k) const;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // M*x
    std::vector<Int> col(long c) const;
    std::vector<Int> row(long r) const;
    void set_col(long c, const std::vector<Int>& v);

    IntMatrix select_cols(const std::vector<long>& idx) const;
    IntMatrix select_rows(const std::vector<long>& idx) const;
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);

    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    void add_row_multiple(long dst, long src, const Int& q);  // row dst += q * row src
    void add_col_multiple(long dst, long src, const Int& q);
    void negate_row(long i);
    void negate_col(long j);

    std::string to_string() const;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Fraction-free determinant (Bareiss). Square input required.
Int determinant(IntMatrix m);

}  // namespace ghom
