#ifndef EQALG_RINGALG_HPP
#define EQALG_RINGALG_HPP

#include "eqalg/fgab.hpp"

#include <string>

namespace eqalg {

struct Violation {
    std::string law;
    std::string witness;
};

using Report = std::vector<Violation>;

std::string report_str(const Report& r);

// Ring presented by structure constants on the canonical generators of its
// additive carrier; optionally equipped with an anti-involution w.
struct PresRing {
    FgAbGroup carrier;
    // mul[i][j] = expansion of gen_i * gen_j over the canonical generators.
    std::vector<std::vector<Vec>> mul;
    Vec unit;
    std::optional<GroupHom> w;

    long gens() const { return carrier.gens(); }
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec apply_w(const Vec& x) const;
    bool is_commutative() const;
    bool has_involution() const { return w.has_value(); }
};

Report validate_ring(const PresRing& r);

// Finite monoid with an anti-involution, given by a multiplication table.
struct FinMonoid {
    std::vector<std::string> elements;
    std::vector<std::vector<long>> table;  // table[i][j] = index of elements[i]*elements[j]
    std::vector<long> iota;                // anti-involution permutation
    long identity = 0;

    long size() const { return static_cast<long>(elements.size()); }
    long mul(long i, long j) const { return table[i][j]; }
    bool is_group() const;
};

Report validate_monoid(const FinMonoid& m);

FinMonoid monoid_product(const FinMonoid& a, const FinMonoid& b);

struct CommutatorQuotient {
    FgAbGroup group;
    GroupHom proj;            // carrier -> group
    IntMat section;           // lift of canonical quotient generators
    std::optional<GroupHom> involution;  // induced by w when present
};

CommutatorQuotient commutator_quotient(const PresRing& r);

// The ring S (x) S with componentwise multiplication and the flip involution.
struct FlipSquare {
    PresRing ring;             // on the canonical tensor-square group
    TensorProduct tens;        // pair-basis bookkeeping
    GroupHom flip;             // the ring automorphism tau
    InvariantsCoinvariants ic; // invariants/coinvariants of tau
};

FlipSquare flip_square(const PresRing& s);

PresRing monoid_ring(const PresRing& r, const FinMonoid& m);

}  // namespace eqalg

#endif
