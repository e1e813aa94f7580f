#ifndef EQALG_ISO_HPP
#define EQALG_ISO_HPP

#include "eqalg/mackey.hpp"

namespace eqalg {

struct MackeyHom {
    GroupHom phi_e;    // M.level_e -> N.level_e
    GroupHom phi_fix;  // M.level_fix -> N.level_fix
};

bool is_bijective(const GroupHom& h);

// Commutation with res, tran and w plus well-definedness of both components.
bool is_mackey_hom(const MackeyZ2& m, const MackeyZ2& n, const MackeyHom& h);

bool is_mackey_iso(const MackeyZ2& m, const MackeyZ2& n, const MackeyHom& h);

// Integer lattice of all Mackey homomorphisms M -> N, as a basis of stacked
// (phi_e, phi_fix) coefficient vectors.
std::vector<Vec> mackey_hom_lattice(const MackeyZ2& m, const MackeyZ2& n);

// Searches the hom lattice for an isomorphism: tries basis vectors and
// small seeded-random integer combinations. Deterministic for a fixed seed.
std::optional<MackeyHom> find_mackey_iso(const MackeyZ2& m, const MackeyZ2& n,
                                         unsigned long seed = 0x5eed);

inline bool mackey_isomorphic(const MackeyZ2& m, const MackeyZ2& n,
                              unsigned long seed = 0x5eed) {
    return find_mackey_iso(m, n, seed).has_value();
}

}  // namespace eqalg

#endif
