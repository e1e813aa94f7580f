#include "eqalg/intmat.hpp"

#include <sstream>

namespace eqalg {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<long>(init.size());
    cols_ = rows_ ? static_cast<long>(init.begin()->size()) : 0;
    a_.assign(rows_ * cols_, Int(0));
    long r = 0;
    for (const auto& row : init) {
        if (static_cast<long>(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
        long c = 0;
        for (long v : row) at(r, c++) = v;
        ++r;
    }
}

IntMat IntMat::identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec IntMat::col(long c) const {
    Vec v(rows_);
    for (long r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec IntMat::row(long r) const {
    Vec v(cols_);
    for (long c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void IntMat::set_col(long c, const Vec& v) {
    for (long r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat res(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols_; ++j) res.at(i, j) += x * o.at(k, j);
        }
    return res;
}

Vec IntMat::operator*(const Vec& v) const {
    if (cols_ != static_cast<long>(v.size())) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec res(rows_, Int(0));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) res[i] += at(i, j) * v[j];
    return res;
}

IntMat IntMat::operator+(const IntMat& o) const {
    IntMat res(rows_, cols_);
    for (long i = 0; i < rows_ * cols_; ++i) res.a_[i] = a_[i] + o.a_[i];
    return res;
}

IntMat IntMat::operator-(const IntMat& o) const {
    IntMat res(rows_, cols_);
    for (long i = 0; i < rows_ * cols_; ++i) res.a_[i] = a_[i] - o.a_[i];
    return res;
}

IntMat IntMat::transposed() const {
    IntMat res(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) res.at(j, i) = at(i, j);
    return res;
}

IntMat IntMat::hcat(const IntMat& o) const {
    if (rows_ != o.rows_ && o.cols_ != 0) throw std::invalid_argument("hcat row mismatch");
    IntMat res(rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) res.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols_; ++j) res.at(i, cols_ + j) = o.at(i, j);
    }
    return res;
}

void IntMat::swap_rows(long i, long j) {
    for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(long i, long j) {
    for (long r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(long i) {
    for (long c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(long i) {
    for (long r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMat::row_sub(long i, long j, const Int& q) {
    if (q == 0) return;
    for (long c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMat::col_sub(long i, long j, const Int& q) {
    if (q == 0) return;
    for (long r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
}

bool IntMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

IntMat from_cols(long nrows, const std::vector<Vec>& cols) {
    IntMat m(nrows, static_cast<long>(cols.size()));
    for (long c = 0; c < static_cast<long>(cols.size()); ++c) m.set_col(c, cols[c]);
    return m;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Int& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vec(long n) { return Vec(n, Int(0)); }

Vec unit_vec(long n, long i) {
    Vec v(n, Int(0));
    v[i] = 1;
    return v;
}

}  // namespace eqalg
