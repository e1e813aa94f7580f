#ifndef EQALG_FGAB_HPP
#define EQALG_FGAB_HPP

#include "eqalg/intmat.hpp"

#include <optional>

namespace eqalg {

// Finitely generated abelian group in invariant-factor form: the canonical
// generators are k torsion generators of orders d1 | d2 | ... | dk (each >= 2)
// followed by free_rank free generators. Coordinate i of an element is taken
// mod di on the torsion part.
class FgAbGroup {
public:
    FgAbGroup() = default;
    FgAbGroup(std::vector<Int> torsion, long free_rank);

    static FgAbGroup free(long rank) { return FgAbGroup({}, rank); }
    static FgAbGroup cyclic(const Int& n);  // n == 0 gives Z
    static FgAbGroup trivial() { return FgAbGroup({}, 0); }

    long gens() const { return static_cast<long>(torsion_.size()) + free_rank_; }
    long torsion_count() const { return static_cast<long>(torsion_.size()); }
    long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    // Order of generator i: the invariant factor, or 0 for a free generator.
    Int gen_order(long i) const {
        return i < torsion_count() ? torsion_[i] : Int(0);
    }

    bool is_trivial() const { return gens() == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const;  // 0 if infinite

    Vec reduce(const Vec& v) const;
    bool same_element(const Vec& a, const Vec& b) const;

    bool operator==(const FgAbGroup& o) const {
        return torsion_ == o.torsion_ && free_rank_ == o.free_rank_;
    }

    // Enumerates all elements of a finite group (throws on infinite).
    std::vector<Vec> elements() const;

    std::string str() const;  // e.g. "Z/2 + Z/4 + Z^2"

private:
    std::vector<Int> torsion_;  // d1 | d2 | ..., each >= 2
    long free_rank_ = 0;
};

struct GroupHom {
    FgAbGroup src, dst;
    IntMat m;  // dst.gens() x src.gens()

    GroupHom() = default;
    GroupHom(FgAbGroup s, FgAbGroup d, IntMat mat)
        : src(std::move(s)), dst(std::move(d)), m(std::move(mat)) {}

    static GroupHom id(const FgAbGroup& g) { return {g, g, IntMat::identity(g.gens())}; }
    static GroupHom zero(const FgAbGroup& s, const FgAbGroup& d) { return {s, d, IntMat(d.gens(), s.gens())}; }
    static GroupHom mul_by(const FgAbGroup& g, const Int& n);

    Vec apply(const Vec& x) const { return dst.reduce(m * x); }
    bool well_defined() const;
    bool is_zero_map() const;
    bool same_map(const GroupHom& o) const;  // equality as maps (mod dst relations)

    GroupHom compose(const GroupHom& inner) const;  // this ∘ inner
    GroupHom operator+(const GroupHom& o) const;
    GroupHom operator-(const GroupHom& o) const;
};

// Result of canonicalizing a presentation: the group plus the recorded basis
// change. to_canon maps presentation-generator coordinates to canonical
// coordinates; from_canon is a section (to_canon * from_canon == id exactly).
struct Presentation {
    FgAbGroup group;
    IntMat to_canon;    // group.gens() x n_presentation_gens
    IntMat from_canon;  // n_presentation_gens x group.gens()

    Vec project(const Vec& v) const { return group.reduce(to_canon * v); }
    Vec lift(const Vec& v) const { return from_canon * v; }
};

// Group presented by generator_count generators modulo the columns of
// relations (an n x m integer matrix; m may be 0).
Presentation canonicalize(long generator_count, const IntMat& relations);

// Quotient of g by the subgroup generated by the columns of extra_relations.
Presentation quotient(const FgAbGroup& g, const IntMat& extra_relations);

struct Subgroup {
    FgAbGroup group;
    GroupHom incl;          // group -> ambient
    IntMat gens_in_ambient; // ambient.gens() x (number of subgroup generating vectors)
    Presentation pres;      // over those generating vectors

    // Express an ambient element lying in the subgroup in subgroup coordinates.
    std::optional<Vec> corestrict(const Vec& ambient_elt) const;
};

Subgroup kernel(const GroupHom& h);

struct Cokernel {
    FgAbGroup group;
    GroupHom proj;  // ambient -> group
    IntMat section; // ambient.gens() x group.gens(), lift of canonical generators
};

Cokernel cokernel(const GroupHom& h);

// Solve h(x) = b in the target group; empty if b is not in the image.
std::optional<Vec> solve_in_group(const GroupHom& h, const Vec& b);

struct TensorProduct {
    FgAbGroup group;
    long na = 0, nb = 0;
    Presentation pres;  // over the na*nb elementary-tensor generators

    long pair_index(long i, long j) const { return i * nb + j; }
    // Elementary tensor of canonical generators, in canonical coordinates.
    Vec gen_tensor(long i, long j) const { return pres.project(unit_vec(na * nb, pair_index(i, j))); }
    // Bilinear expansion of x (x) y.
    Vec tensor(const Vec& x, const Vec& y) const;
    // Same, but returning raw pair-basis coordinates.
    Vec tensor_pair_coords(const Vec& x, const Vec& y) const;
};

TensorProduct tensor(const FgAbGroup& a, const FgAbGroup& b);

FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b);

struct InvariantsCoinvariants {
    Subgroup invariants;        // A^t  with inclusion
    Cokernel coinvariants;      // A_t  with projection
    GroupHom norm;              // A_t -> A^t, [a] -> a + t(a)
};

// t must be an involution on a; throws std::invalid_argument otherwise.
InvariantsCoinvariants invariants_and_coinvariants(const FgAbGroup& a, const GroupHom& t);

// Builds a hom from the images of the source's canonical generators.
inline GroupHom hom_from_cols(const FgAbGroup& src, const FgAbGroup& dst,
                              const std::vector<Vec>& cols) {
    return {src, dst, from_cols(dst.gens(), cols)};
}

struct DirectSum {
    FgAbGroup group;
    // Inclusion/projection for each summand.
    std::vector<GroupHom> incl, proj;
};

DirectSum direct_sum(const std::vector<FgAbGroup>& parts);

}  // namespace eqalg

#endif
