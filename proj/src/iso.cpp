#include "eqalg/iso.hpp"

#include "eqalg/smith.hpp"

#include <random>

namespace eqalg {

bool is_bijective(const GroupHom& h) {
    return kernel(h).group.is_trivial() && cokernel(h).group.is_trivial();
}

bool is_mackey_hom(const MackeyZ2& m, const MackeyZ2& n, const MackeyHom& h) {
    if (!(h.phi_e.src == m.level_e) || !(h.phi_e.dst == n.level_e) ||
        !(h.phi_fix.src == m.level_fix) || !(h.phi_fix.dst == n.level_fix))
        return false;
    if (!h.phi_e.well_defined() || !h.phi_fix.well_defined()) return false;
    if (!h.phi_e.compose(m.res).same_map(n.res.compose(h.phi_fix))) return false;
    if (!h.phi_fix.compose(m.tran).same_map(n.tran.compose(h.phi_e))) return false;
    if (!h.phi_e.compose(m.w).same_map(n.w.compose(h.phi_e))) return false;
    return true;
}

bool is_mackey_iso(const MackeyZ2& m, const MackeyZ2& n, const MackeyHom& h) {
    return is_mackey_hom(m, n, h) && is_bijective(h.phi_e) && is_bijective(h.phi_fix);
}

namespace {

struct LatticeBuilder {
    // variables: entries of phi_e (row-major), then entries of phi_fix, then
    // one slack variable per congruence row with finite modulus
    long ge_m, ge_n, gf_m, gf_n;
    long nvars_main;
    std::vector<Vec> rows;           // linear forms over the main variables
    std::vector<Int> moduli;         // 0 = exact equation, d = congruence mod d

    long evar(long r, long c) const { return r * ge_m + c; }
    long fvar(long r, long c) const { return ge_n * ge_m + r * gf_m + c; }

    void add_row(const Vec& form, const Int& mod) {
        rows.push_back(form);
        moduli.push_back(mod);
    }
};

}  // namespace

std::vector<Vec> mackey_hom_lattice(const MackeyZ2& m, const MackeyZ2& n) {
    LatticeBuilder lb;
    lb.ge_m = m.level_e.gens();
    lb.ge_n = n.level_e.gens();
    lb.gf_m = m.level_fix.gens();
    lb.gf_n = n.level_fix.gens();
    lb.nvars_main = lb.ge_n * lb.ge_m + lb.gf_n * lb.gf_m;

    auto zero_form = [&] { return zero_vec(lb.nvars_main); };

    // well-definedness: d_j * phi[r][j] == 0 mod torsion of target row r
    for (long j = 0; j < m.level_e.torsion_count(); ++j)
        for (long r = 0; r < lb.ge_n; ++r) {
            Vec f = zero_form();
            f[lb.evar(r, j)] = m.level_e.gen_order(j);
            lb.add_row(f, n.level_e.gen_order(r));
        }
    for (long j = 0; j < m.level_fix.torsion_count(); ++j)
        for (long r = 0; r < lb.gf_n; ++r) {
            Vec f = zero_form();
            f[lb.fvar(r, j)] = m.level_fix.gen_order(j);
            lb.add_row(f, n.level_fix.gen_order(r));
        }

    // phi_e res_M = res_N phi_fix   (entries over N_e rows, M_fix columns)
    for (long r = 0; r < lb.ge_n; ++r)
        for (long j = 0; j < lb.gf_m; ++j) {
            Vec f = zero_form();
            for (long k = 0; k < lb.ge_m; ++k) f[lb.evar(r, k)] += m.res.m.at(k, j);
            for (long k = 0; k < lb.gf_n; ++k) f[lb.fvar(k, j)] -= n.res.m.at(r, k);
            lb.add_row(f, n.level_e.gen_order(r));
        }
    // phi_fix tran_M = tran_N phi_e
    for (long r = 0; r < lb.gf_n; ++r)
        for (long j = 0; j < lb.ge_m; ++j) {
            Vec f = zero_form();
            for (long k = 0; k < lb.gf_m; ++k) f[lb.fvar(r, k)] += m.tran.m.at(k, j);
            for (long k = 0; k < lb.ge_n; ++k) f[lb.evar(k, j)] -= n.tran.m.at(r, k);
            lb.add_row(f, n.level_fix.gen_order(r));
        }
    // phi_e w_M = w_N phi_e
    for (long r = 0; r < lb.ge_n; ++r)
        for (long j = 0; j < lb.ge_m; ++j) {
            Vec f = zero_form();
            for (long k = 0; k < lb.ge_m; ++k) f[lb.evar(r, k)] += m.w.m.at(k, j);
            for (long k = 0; k < lb.ge_n; ++k) f[lb.evar(k, j)] -= n.w.m.at(r, k);
            lb.add_row(f, n.level_e.gen_order(r));
        }

    // assemble with slack columns for the congruences
    long nslack = 0;
    for (const Int& d : lb.moduli)
        if (d != 0) ++nslack;
    IntMat a(static_cast<long>(lb.rows.size()), lb.nvars_main + nslack);
    long slack = 0;
    for (size_t r = 0; r < lb.rows.size(); ++r) {
        for (long c = 0; c < lb.nvars_main; ++c) a.at(static_cast<long>(r), c) = lb.rows[r][c];
        if (lb.moduli[r] != 0) a.at(static_cast<long>(r), lb.nvars_main + slack++) = lb.moduli[r];
    }

    IntMat ker = kernel_lattice(a);
    std::vector<Vec> basis;
    for (long c = 0; c < ker.cols(); ++c) {
        Vec v(lb.nvars_main);
        bool nonzero = false;
        for (long r = 0; r < lb.nvars_main; ++r) {
            v[r] = ker.at(r, c);
            nonzero = nonzero || v[r] != 0;
        }
        if (nonzero) basis.push_back(v);
    }
    return basis;
}

std::optional<MackeyHom> find_mackey_iso(const MackeyZ2& m, const MackeyZ2& n,
                                         unsigned long seed) {
    if (!(m.level_e == n.level_e) || !(m.level_fix == n.level_fix))
        return std::nullopt;  // canonical forms differ: not isomorphic

    std::vector<Vec> basis = mackey_hom_lattice(m, n);
    if (basis.empty()) {
        if (m.level_e.is_trivial() && m.level_fix.is_trivial()) {
            MackeyHom h{GroupHom::zero(m.level_e, n.level_e),
                        GroupHom::zero(m.level_fix, n.level_fix)};
            return h;
        }
        return std::nullopt;
    }

    const long ge_m = m.level_e.gens(), ge_n = n.level_e.gens();
    const long gf_m = m.level_fix.gens(), gf_n = n.level_fix.gens();
    auto build = [&](const Vec& v) {
        IntMat pe(ge_n, ge_m), pf(gf_n, gf_m);
        long idx = 0;
        for (long r = 0; r < ge_n; ++r)
            for (long c = 0; c < ge_m; ++c) pe.at(r, c) = v[idx++];
        for (long r = 0; r < gf_n; ++r)
            for (long c = 0; c < gf_m; ++c) pf.at(r, c) = v[idx++];
        return MackeyHom{GroupHom(m.level_e, n.level_e, pe),
                         GroupHom(m.level_fix, n.level_fix, pf)};
    };
    auto try_vec = [&](const Vec& v) -> std::optional<MackeyHom> {
        MackeyHom h = build(v);
        if (is_bijective(h.phi_e) && is_bijective(h.phi_fix)) return h;
        return std::nullopt;
    };

    for (const Vec& b : basis) {
        if (auto h = try_vec(b)) return h;
        if (auto h = try_vec(Int(-1) * b)) return h;
    }
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (auto h = try_vec(basis[i] + basis[j])) return h;
            if (auto h = try_vec(basis[i] - basis[j])) return h;
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    const long tries = 400 * static_cast<long>(basis.size()) + 400;
    for (long t = 0; t < tries; ++t) {
        Vec v = zero_vec(static_cast<long>(basis[0].size()));
        for (const Vec& b : basis) {
            int c = coef(rng);
            if (c != 0) v = v + Int(c) * b;
        }
        if (is_zero(v)) continue;
        if (auto h = try_vec(v)) return h;
    }
    return std::nullopt;
}

}  // namespace eqalg
