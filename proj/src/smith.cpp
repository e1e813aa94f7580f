#include "eqalg/smith.hpp"

namespace eqalg {

namespace {

// Tracks a under row ops (mirrored in u/uinv) and column ops (v/vinv),
// maintaining u*orig*v == a at all times.
struct Worker {
    IntMat a, u, uinv, v, vinv;

    explicit Worker(const IntMat& m)
        : a(m),
          u(IntMat::identity(m.rows())),
          uinv(IntMat::identity(m.rows())),
          v(IntMat::identity(m.cols())),
          vinv(IntMat::identity(m.cols())) {}

    void swap_rows(long i, long j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        uinv.swap_cols(i, j);
    }
    void swap_cols(long i, long j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void row_sub(long i, long j, const Int& q) {
        a.row_sub(i, j, q);
        u.row_sub(i, j, q);
        uinv.col_add(j, i, q);
    }
    void col_sub(long i, long j, const Int& q) {
        a.col_sub(i, j, q);
        v.col_sub(i, j, q);
        vinv.row_add(j, i, q);
    }
    void negate_row(long i) {
        a.negate_row(i);
        u.negate_row(i);
        uinv.negate_col(i);
    }
};

// Minimal-absolute-value nonzero pivot in the submatrix a[t.., t..];
// keeps intermediate entry growth in check.
bool find_pivot(const IntMat& a, long t, long& pr, long& pc) {
    bool found = false;
    Int best;
    for (long i = t; i < a.rows(); ++i)
        for (long j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith(const IntMat& m) {
    Worker w(m);
    long n = std::min(m.rows(), m.cols());
    long t = 0;
    for (; t < n; ++t) {
        long pr, pc;
        if (!find_pivot(w.a, t, pr, pc)) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        for (;;) {
            // Clear column t below the pivot, then row t; re-pivot whenever a
            // division leaves a smaller remainder.
            bool dirty = false;
            for (long i = t + 1; i < m.rows(); ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.row_sub(i, t, q);
                if (w.a.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (long j = t + 1; j < m.cols(); ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.col_sub(j, t, q);
                if (w.a.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
        // Enforce divisibility of the remaining block by the pivot.
        bool redo = false;
        for (long i = t + 1; i < m.rows() && !redo; ++i)
            for (long j = t + 1; j < m.cols(); ++j) {
                if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                    w.row_sub(t, i, Int(-1));  // row t += row i
                    redo = true;
                    break;
                }
            }
        if (redo) --t;  // re-run elimination at this position
    }
    SmithResult res;
    res.d = w.a;
    res.u = w.u;
    res.uinv = w.uinv;
    res.v = w.v;
    res.vinv = w.vinv;
    res.rank = t;
    return res;
}

IntMat kernel_lattice(const IntMat& a) {
    if (a.cols() == 0) return IntMat(0, 0);
    if (a.rows() == 0) return IntMat::identity(a.cols());
    SmithResult s = smith(a);
    std::vector<Vec> cols;
    for (long j = s.rank; j < a.cols(); ++j) cols.push_back(s.v.col(j));
    return from_cols(a.cols(), cols);
}

bool solve_exact(const IntMat& a, const Vec& b, Vec& x_out) {
    SmithResult s = smith(a);
    Vec c = s.u * b;
    Vec z(a.cols(), Int(0));
    for (long i = 0; i < static_cast<long>(c.size()); ++i) {
        Int d = i < std::min(a.rows(), a.cols()) ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % d != 0) return false;
            z[i] = c[i] / d;
        }
    }
    x_out = s.v * z;
    return true;
}

}  // namespace eqalg
