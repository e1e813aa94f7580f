#ifndef EQALG_BOX_HPP
#define EQALG_BOX_HPP

#include "eqalg/witt.hpp"

namespace eqalg {

// Box product of two-level Mackey functors, kept with its presentation
// bookkeeping so callers can construct maps out of it. The fixed level is
// presented on "e-pairs" (generator pairs of the underlying levels) followed
// by "fix-pairs" (generator pairs of the fixed levels).
struct BoxResult {
    MackeyZ2 mackey;
    TensorProduct tens_e;  // underlying tensor square before any balancing
    Presentation e_pres;   // tens_e.group -> final level_e
    Presentation fix_pres; // over n_ep + n_fp pair generators
    long n_me = 0, n_ne = 0, n_mf = 0, n_nf = 0;

    long n_epairs() const { return n_me * n_ne; }
    long n_fixpairs() const { return n_mf * n_nf; }
    long ep_index(long i, long j) const { return i * n_ne + j; }
    long fp_index(long i, long j) const { return n_epairs() + i * n_nf + j; }

    // canonical level_e coordinates of an elementary tensor of underlying
    // elements, after balancing
    Vec e_tensor(const Vec& me, const Vec& ne) const;
    // canonical level_fix coordinates of classes of elementary tensors
    Vec fix_of_epair(const Vec& me, const Vec& ne) const;
    Vec fix_of_fixpair(const Vec& mf, const Vec& nf) const;
};

BoxResult box(const MackeyZ2& m, const MackeyZ2& n);

// Mackey module over a Green functor, with bilinear action tables at both
// levels (act_e over the underlying ring's generators, act_fix over the
// fixed ring's generators). For a right module the table entry is x . alpha.
struct ModuleData {
    MackeyZ2 mackey;
    std::vector<std::vector<Vec>> act_e;    // [A_e gen][module e gen]
    std::vector<std::vector<Vec>> act_fix;  // [A_fix gen][module fix gen]

    Vec apply_e(const Vec& alpha, const Vec& x) const;    // bilinear
    Vec apply_fix(const Vec& beta, const Vec& x) const;   // bilinear
};

Report validate_module(const ModuleData& mod, const GreenZ2& a, bool right);

// Box product over a Green functor: the box relations plus two-sided
// balancing at both levels.
BoxResult box_over_green(const ModuleData& m_right, const ModuleData& n_left,
                         const GreenZ2& a);

// Left and right module structures of a Hermitian Mackey functor over the
// Witt Green functor of its underlying ring.
struct HermitianWittModules {
    ModuleData right_module;  // H with x . alpha actions
    ModuleData left_module;   // H with alpha . x actions
};

HermitianWittModules hermitian_witt_actions(const HermitianMackey& h,
                                            const WittGreen& w);

}  // namespace eqalg

#endif
