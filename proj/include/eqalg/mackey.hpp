#ifndef EQALG_MACKEY_HPP
#define EQALG_MACKEY_HPP

#include "eqalg/ringalg.hpp"

namespace eqalg {

// Two-level Mackey functor for the group of order two. level_e is the value
// at the free orbit, level_fix the value at the fixed point.
struct MackeyZ2 {
    FgAbGroup level_e, level_fix;
    GroupHom res;   // level_fix -> level_e
    GroupHom tran;  // level_e -> level_fix
    GroupHom w;     // level_e -> level_e
};

Report validate_mackey(const MackeyZ2& m);

MackeyZ2 mackey_direct_sum(const std::vector<MackeyZ2>& parts);

// Mackey functor with compatible ring structures on both levels. The
// involution is a ring automorphism of the underlying level and res is a
// unital ring map; tran satisfies Frobenius reciprocity.
struct GreenZ2 {
    MackeyZ2 mackey;
    PresRing ring_e;    // carrier == mackey.level_e
    PresRing ring_fix;  // carrier == mackey.level_fix
};

Report validate_green(const GreenZ2& g);

// Ring with anti-involution at the underlying level acting multiplicatively
// on the fixed level. The action is recorded on generator pairs only; act()
// extends it to arbitrary elements via the quadratic extension rule
// (a+b).x = a.x + b.x + tran(a res(x) w(b)).
struct HermitianMackey {
    MackeyZ2 mackey;
    PresRing ring_e;  // carrier == mackey.level_e, w present and == mackey.w
    // action[i][j] = (i-th level_e generator) . (j-th level_fix generator)
    std::vector<std::vector<Vec>> action;
    std::optional<Vec> unit_fix;  // element with res(unit_fix) = 1

    // a given as a raw (unreduced) coefficient vector over level_e gens.
    Vec act(const Vec& a, const Vec& x) const;
};

Report validate_hermitian(const HermitianMackey& h);

// level_e = R, level_fix = fixed subgroup of w, res = inclusion,
// tran = 1 + w corestricted, action a.x = a x w(a).
HermitianMackey hermitian_from_ring(const PresRing& r);

struct BurnsideData {
    GreenZ2 green;
    HermitianMackey hermitian;
};

// The Burnside Mackey functor: level_e = Z, level_fix = Z{1,t} with t^2 = 2t,
// res(1) = 1, res(t) = 2, tran(1) = t, trivial involution.
BurnsideData burnside();

}  // namespace eqalg

#endif
