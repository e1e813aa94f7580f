#ifndef EQALG_INTMAT_HPP
#define EQALG_INTMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqalg {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> init);

    static IntMat identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long r, long c) { return a_[r * cols_ + c]; }
    const Int& at(long r, long c) const { return a_[r * cols_ + c]; }

    Vec col(long c) const;
    Vec row(long r) const;
    void set_col(long c, const Vec& v);

    IntMat operator*(const IntMat& o) const;
    Vec operator*(const Vec& v) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMat transposed() const;

    // Append the columns of o on the right.
    IntMat hcat(const IntMat& o) const;

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);
    void negate_row(long i);
    void negate_col(long i);
    // row i -= q * row j
    void row_sub(long i, long j, const Int& q);
    // col i -= q * col j
    void col_sub(long i, long j, const Int& q);
    // col i += q * col j
    void col_add(long i, long j, const Int& q) { col_sub(i, j, Int(-q)); }
    void row_add(long i, long j, const Int& q) { row_sub(i, j, Int(-q)); }

    bool is_zero() const;
    std::string str() const;

private:
    long rows_, cols_;
    std::vector<Int> a_;
};

// Builds a matrix from a list of column vectors (all of length nrows).
IntMat from_cols(long nrows, const std::vector<Vec>& cols);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Int& c, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(long n);
Vec unit_vec(long n, long i);

}  // namespace eqalg

#endif
