#ifndef EQALG_THR_HPP
#define EQALG_THR_HPP

#include "eqalg/box.hpp"
#include "eqalg/iso.hpp"

namespace eqalg {

// Closed-form presentation of the two-level invariant attached to a
// Hermitian input: underlying level R/[R,R], fixed level a quotient of the
// tensor square of the fixed level of the input.
struct Pi0Report {
    MackeyZ2 result;
    std::vector<std::string> presentation_trace;  // imposed relation generators

    // bookkeeping for building maps in and out of the result
    CommutatorQuotient cq;  // underlying level as a quotient of ring_e
    TensorProduct tens;     // tensor square of the input's fixed level
    Presentation fix_pres;  // tens.group -> result.level_fix

    // commutative case only
    std::optional<PresRing> ring_e;    // ring structure on the underlying level
    std::optional<PresRing> ring_fix;  // ring structure on the fixed level
    std::optional<std::vector<Vec>> norm;  // per ring_e generator: N(a) (x) 1
};

// Requires a valid Hermitian input with unit_fix such that res(unit_fix) is
// the ring unit. When run_oracle is set, independently recomputes the answer
// as a balanced box product over the Witt Green functor of ring_e and
// asserts that the constructed comparison map is an isomorphism.
Pi0Report thr_pi0(const HermitianMackey& h, bool run_oracle = true);

// Commutative variant: ring_e must be commutative and ring_fix must be the
// ring structure on the input's fixed level. Adds the quotient ring
// structure, checks that res is a unital ring map and that the norm
// a -> N(a) (x) 1 is multiplicative on generators.
Pi0Report thr_pi0_commutative(const HermitianMackey& h, const PresRing& ring_fix,
                              bool run_oracle = true);

// Conjugation-class Mackey functor of a finite monoid with anti-involution:
// underlying level free on conjugation classes (closure of mn ~ nm), fixed
// level the class coinvariants plus the free group on fixed-pair classes.
struct DihedralPi0 {
    MackeyZ2 mackey;
    std::vector<std::string> class_names;   // underlying basis
    std::vector<long> class_of;             // monoid element -> class index
    std::vector<std::string> fix_names;     // orbit names then pair-class names
    long n_orbits = 0, n_pairs = 0;
};

DihedralPi0 dihedral_pi0(const FinMonoid& m);

// Group-ring computation. Path (a) is the box product of the base answer
// with the dihedral class functor; for the integer base a direct closed-form
// presentation (path (b)) is also built and the two are checked isomorphic.
struct GroupRingPi0 {
    MackeyZ2 result;    // path (b) when available, otherwise path (a)
    MackeyZ2 box_path;  // path (a)
    bool integral_base = false;
    DihedralPi0 classes;
};

GroupRingPi0 thr_group_ring(const FinMonoid& g, const HermitianMackey& base);

// Infinite-cyclic group ring truncated to the window |n| <= N: underlying
// level free on t^n, fixed level free on t^1..t^N and an extra generator u
// with tran(t^0) = 2u, tran(t^{+-n}) = t^n, res(t^n) = t^n + t^{-n},
// res(u) = t^0.
MackeyZ2 laurent_thr_pi0(long window);

}  // namespace eqalg

#endif
