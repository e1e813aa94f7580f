#ifndef EQALG_SMITH_HPP
#define EQALG_SMITH_HPP

#include "eqalg/intmat.hpp"

namespace eqalg {

// Smith normal form  u * a * v = d  with u, v unimodular and the diagonal of d
// a nonnegative divisibility chain d0 | d1 | ... (trailing zeros allowed).
// uinv and vinv are the tracked inverses of u and v.
struct SmithResult {
    IntMat d;
    IntMat u, uinv;
    IntMat v, vinv;
    long rank = 0;  // number of nonzero diagonal entries

    Int diag(long i) const {
        long n = std::min(d.rows(), d.cols());
        return i < n ? d.at(i, i) : Int(0);
    }
};

SmithResult smith(const IntMat& a);

// Basis of { x : a x = 0 }, returned as columns.
IntMat kernel_lattice(const IntMat& a);

// One solution of a x = b over the integers, if any.
bool solve_exact(const IntMat& a, const Vec& b, Vec& x_out);

}  // namespace eqalg

#endif
