#include "eqalg/box.hpp"

#include <stdexcept>

namespace eqalg {

Vec BoxResult::e_tensor(const Vec& me, const Vec& ne) const {
    return e_pres.project(tens_e.tensor(me, ne));
}

Vec BoxResult::fix_of_epair(const Vec& me, const Vec& ne) const {
    Vec raw = zero_vec(n_epairs() + n_fixpairs());
    Vec p = tens_e.tensor_pair_coords(me, ne);
    for (long k = 0; k < n_epairs(); ++k) raw[k] = p[k];
    return fix_pres.project(raw);
}

Vec BoxResult::fix_of_fixpair(const Vec& mf, const Vec& nf) const {
    Vec raw = zero_vec(n_epairs() + n_fixpairs());
    for (long i = 0; i < n_mf; ++i)
        for (long j = 0; j < n_nf; ++j) raw[fp_index(i, j)] = mf[i] * nf[j];
    return fix_pres.project(raw);
}

Vec ModuleData::apply_e(const Vec& alpha, const Vec& x) const {
    const long ne = mackey.level_e.gens();
    Vec xr = mackey.level_e.reduce(x);
    Vec out = zero_vec(ne);
    for (size_t t = 0; t < act_e.size(); ++t) {
        if (alpha[t] == 0) continue;
        for (long i = 0; i < ne; ++i)
            if (xr[i] != 0) out = out + (alpha[t] * xr[i]) * act_e[t][i];
    }
    return mackey.level_e.reduce(out);
}

Vec ModuleData::apply_fix(const Vec& beta, const Vec& x) const {
    const long nf = mackey.level_fix.gens();
    Vec xr = mackey.level_fix.reduce(x);
    Vec out = zero_vec(nf);
    for (size_t t = 0; t < act_fix.size(); ++t) {
        if (beta[t] == 0) continue;
        for (long i = 0; i < nf; ++i)
            if (xr[i] != 0) out = out + (beta[t] * xr[i]) * act_fix[t][i];
    }
    return mackey.level_fix.reduce(out);
}

namespace {

BoxResult box_core(const MackeyZ2& m, const MackeyZ2& n, const ModuleData* mr,
                   const ModuleData* nl, const GreenZ2* a) {
    BoxResult br;
    br.n_me = m.level_e.gens();
    br.n_ne = n.level_e.gens();
    br.n_mf = m.level_fix.gens();
    br.n_nf = n.level_fix.gens();
    br.tens_e = tensor(m.level_e, n.level_e);

    // underlying level: tensor product, balanced over the Green functor's
    // underlying ring when module data is present
    std::vector<Vec> e_balance;
    if (a) {
        const long ga = a->mackey.level_e.gens();
        for (long t = 0; t < ga; ++t)
            for (long i = 0; i < br.n_me; ++i)
                for (long j = 0; j < br.n_ne; ++j) {
                    Vec lhs = br.tens_e.tensor(mr->act_e[t][i], unit_vec(br.n_ne, j));
                    Vec rhs = br.tens_e.tensor(unit_vec(br.n_me, i), nl->act_e[t][j]);
                    e_balance.push_back(lhs - rhs);
                }
    }
    br.e_pres = quotient(br.tens_e.group,
                         from_cols(br.tens_e.group.gens(), e_balance));
    br.mackey.level_e = br.e_pres.group;

    // involution w (x) w on the underlying level
    const long le = br.mackey.level_e.gens();
    std::vector<Vec> w_cols;
    for (long c = 0; c < le; ++c) {
        Vec p = br.tens_e.pres.lift(br.e_pres.lift(unit_vec(le, c)));
        Vec acc = zero_vec(br.tens_e.group.gens());
        for (long i = 0; i < br.n_me; ++i)
            for (long j = 0; j < br.n_ne; ++j) {
                const Int& u = p[br.tens_e.pair_index(i, j)];
                if (u == 0) continue;
                Vec t = br.tens_e.tensor(m.w.apply(unit_vec(br.n_me, i)),
                                         n.w.apply(unit_vec(br.n_ne, j)));
                acc = acc + u * t;
            }
        w_cols.push_back(br.e_pres.project(acc));
    }
    br.mackey.w = hom_from_cols(br.mackey.level_e, br.mackey.level_e, w_cols);
    if (!br.mackey.w.well_defined())
        throw std::logic_error("box: induced involution not well defined");

    // fixed level presentation on e-pairs and fix-pairs
    const long nep = br.n_epairs(), nfp = br.n_fixpairs(), ntot = nep + nfp;
    std::vector<Vec> rels;
    auto push_scaled = [&](long idx, const Int& d) {
        if (d == 0) return;
        Vec col = zero_vec(ntot);
        col[idx] = d;
        rels.push_back(col);
    };
    for (long i = 0; i < br.n_me; ++i)
        for (long j = 0; j < br.n_ne; ++j) {
            push_scaled(br.ep_index(i, j), m.level_e.gen_order(i));
            push_scaled(br.ep_index(i, j), n.level_e.gen_order(j));
        }
    for (long i = 0; i < br.n_mf; ++i)
        for (long j = 0; j < br.n_nf; ++j) {
            push_scaled(br.fp_index(i, j), m.level_fix.gen_order(i));
            push_scaled(br.fp_index(i, j), n.level_fix.gen_order(j));
        }

    // w(m) (x) w(n) - m (x) n
    for (long i = 0; i < br.n_me; ++i)
        for (long j = 0; j < br.n_ne; ++j) {
            Vec col = zero_vec(ntot);
            Vec p = br.tens_e.tensor_pair_coords(m.w.apply(unit_vec(br.n_me, i)),
                                                 n.w.apply(unit_vec(br.n_ne, j)));
            for (long k = 0; k < nep; ++k) col[k] = p[k];
            col[br.ep_index(i, j)] -= 1;
            rels.push_back(col);
        }
    // x (x) tran(b) - res(x) (x) b
    for (long i = 0; i < br.n_mf; ++i)
        for (long j = 0; j < br.n_ne; ++j) {
            Vec col = zero_vec(ntot);
            for (long l = 0; l < br.n_nf; ++l) col[br.fp_index(i, l)] += n.tran.m.at(l, j);
            for (long k = 0; k < br.n_me; ++k) col[br.ep_index(k, j)] -= m.res.m.at(k, i);
            rels.push_back(col);
        }
    // tran(a) (x) y - a (x) res(y)
    for (long i = 0; i < br.n_me; ++i)
        for (long j = 0; j < br.n_nf; ++j) {
            Vec col = zero_vec(ntot);
            for (long k = 0; k < br.n_mf; ++k) col[br.fp_index(k, j)] += m.tran.m.at(k, i);
            for (long l = 0; l < br.n_ne; ++l) col[br.ep_index(i, l)] -= n.res.m.at(l, j);
            rels.push_back(col);
        }
    if (a) {
        // underlying balancing, now as relations among the e-pair classes
        const long ga = a->mackey.level_e.gens();
        for (long t = 0; t < ga; ++t)
            for (long i = 0; i < br.n_me; ++i)
                for (long j = 0; j < br.n_ne; ++j) {
                    Vec col = zero_vec(ntot);
                    Vec lhs = br.tens_e.tensor_pair_coords(mr->act_e[t][i],
                                                           unit_vec(br.n_ne, j));
                    Vec rhs = br.tens_e.tensor_pair_coords(unit_vec(br.n_me, i),
                                                           nl->act_e[t][j]);
                    for (long k = 0; k < nep; ++k) col[k] = lhs[k] - rhs[k];
                    rels.push_back(col);
                }
        // fixed-level balancing: (x . beta) (x) y - x (x) (beta . y)
        const long gf = a->mackey.level_fix.gens();
        for (long t = 0; t < gf; ++t)
            for (long i = 0; i < br.n_mf; ++i)
                for (long j = 0; j < br.n_nf; ++j) {
                    Vec col = zero_vec(ntot);
                    const Vec& xb = mr->act_fix[t][i];  // x_i . beta_t
                    const Vec& by = nl->act_fix[t][j];  // beta_t . y_j
                    for (long k = 0; k < br.n_mf; ++k) col[br.fp_index(k, j)] += xb[k];
                    for (long l = 0; l < br.n_nf; ++l) col[br.fp_index(i, l)] -= by[l];
                    rels.push_back(col);
                }
    }
    br.fix_pres = canonicalize(ntot, from_cols(ntot, rels));
    br.mackey.level_fix = br.fix_pres.group;

    // tran: class of an elementary e-pair
    std::vector<Vec> tran_cols;
    for (long c = 0; c < le; ++c) {
        Vec p = br.tens_e.pres.lift(br.e_pres.lift(unit_vec(le, c)));
        Vec raw = zero_vec(ntot);
        for (long k = 0; k < nep; ++k) raw[k] = p[k];
        tran_cols.push_back(br.fix_pres.project(raw));
    }
    br.mackey.tran = hom_from_cols(br.mackey.level_e, br.mackey.level_fix, tran_cols);

    // res: (1 + w) on e-pairs, res (x) res on fix-pairs
    const long lf = br.mackey.level_fix.gens();
    std::vector<Vec> res_cols;
    for (long c = 0; c < lf; ++c) {
        Vec raw = br.fix_pres.lift(unit_vec(lf, c));
        Vec acc = zero_vec(br.tens_e.group.gens());
        for (long i = 0; i < br.n_me; ++i)
            for (long j = 0; j < br.n_ne; ++j) {
                const Int& u = raw[br.ep_index(i, j)];
                if (u == 0) continue;
                acc = acc + u * br.tens_e.gen_tensor(i, j);
                acc = acc + u * br.tens_e.tensor(m.w.apply(unit_vec(br.n_me, i)),
                                                 n.w.apply(unit_vec(br.n_ne, j)));
            }
        for (long i = 0; i < br.n_mf; ++i)
            for (long j = 0; j < br.n_nf; ++j) {
                const Int& u = raw[br.fp_index(i, j)];
                if (u == 0) continue;
                acc = acc + u * br.tens_e.tensor(m.res.apply(unit_vec(br.n_mf, i)),
                                                 n.res.apply(unit_vec(br.n_nf, j)));
            }
        res_cols.push_back(br.e_pres.project(acc));
    }
    br.mackey.res = hom_from_cols(br.mackey.level_fix, br.mackey.level_e, res_cols);

    Report rep = validate_mackey(br.mackey);
    if (!rep.empty())
        throw std::logic_error("box: output fails Mackey axioms:\n" + report_str(rep));
    return br;
}

}  // namespace

BoxResult box(const MackeyZ2& m, const MackeyZ2& n) {
    return box_core(m, n, nullptr, nullptr, nullptr);
}

BoxResult box_over_green(const ModuleData& m_right, const ModuleData& n_left,
                         const GreenZ2& a) {
    return box_core(m_right.mackey, n_left.mackey, &m_right, &n_left, &a);
}

Report validate_module(const ModuleData& mod, const GreenZ2& a, bool right) {
    Report rep;
    const long ga_e = a.mackey.level_e.gens(), ga_f = a.mackey.level_fix.gens();
    const long ne = mod.mackey.level_e.gens(), nf = mod.mackey.level_fix.gens();
    if (static_cast<long>(mod.act_e.size()) != ga_e ||
        static_cast<long>(mod.act_fix.size()) != ga_f) {
        rep.push_back({"shape", "action table sizes"});
        return rep;
    }

    auto mul_a_e = [&](long t, long s) { return a.ring_e.mul[t][s]; };
    auto apply_e_raw = [&](const Vec& alpha, const Vec& x) {
        return mod.apply_e(alpha, x);
    };

    // well-definedness in the ring variable
    for (long t = 0; t < a.mackey.level_e.torsion_count(); ++t) {
        Int d = a.mackey.level_e.gen_order(t);
        for (long i = 0; i < ne; ++i)
            if (!is_zero(mod.mackey.level_e.reduce(d * mod.act_e[t][i])))
                rep.push_back({"module well-defined", "underlying, ring gen " + std::to_string(t)});
    }
    for (long t = 0; t < a.mackey.level_fix.torsion_count(); ++t) {
        Int d = a.mackey.level_fix.gen_order(t);
        for (long i = 0; i < nf; ++i)
            if (!is_zero(mod.mackey.level_fix.reduce(d * mod.act_fix[t][i])))
                rep.push_back({"module well-defined", "fixed, ring gen " + std::to_string(t)});
    }

    // unit laws
    for (long i = 0; i < ne; ++i)
        if (!mod.mackey.level_e.same_element(apply_e_raw(a.ring_e.unit, unit_vec(ne, i)),
                                             mod.mackey.level_e.reduce(unit_vec(ne, i))))
            rep.push_back({"module unit", "underlying gen " + std::to_string(i)});
    for (long i = 0; i < nf; ++i)
        if (!mod.mackey.level_fix.same_element(
                mod.apply_fix(a.ring_fix.unit, unit_vec(nf, i)),
                mod.mackey.level_fix.reduce(unit_vec(nf, i))))
            rep.push_back({"module unit", "fixed gen " + std::to_string(i)});

    // associativity on generators, in the order dictated by the handedness
    for (long t = 0; t < ga_e; ++t)
        for (long s = 0; s < ga_e; ++s)
            for (long i = 0; i < ne; ++i) {
                Vec prod_act = apply_e_raw(mul_a_e(t, s), unit_vec(ne, i));
                Vec stepwise =
                    right ? apply_e_raw(unit_vec(ga_e, s),
                                        apply_e_raw(unit_vec(ga_e, t), unit_vec(ne, i)))
                          : apply_e_raw(unit_vec(ga_e, t),
                                        apply_e_raw(unit_vec(ga_e, s), unit_vec(ne, i)));
                if (!mod.mackey.level_e.same_element(prod_act, stepwise))
                    rep.push_back({"module associativity",
                                   "underlying gens " + std::to_string(t) + "," +
                                       std::to_string(s) + "," + std::to_string(i)});
            }
    for (long t = 0; t < ga_f; ++t)
        for (long s = 0; s < ga_f; ++s)
            for (long i = 0; i < nf; ++i) {
                Vec prod_act = mod.apply_fix(a.ring_fix.mul[t][s], unit_vec(nf, i));
                Vec stepwise =
                    right ? mod.apply_fix(unit_vec(ga_f, s),
                                          mod.apply_fix(unit_vec(ga_f, t), unit_vec(nf, i)))
                          : mod.apply_fix(unit_vec(ga_f, t),
                                          mod.apply_fix(unit_vec(ga_f, s), unit_vec(nf, i)));
                if (!mod.mackey.level_fix.same_element(prod_act, stepwise))
                    rep.push_back({"module associativity",
                                   "fixed gens " + std::to_string(t) + "," +
                                       std::to_string(s) + "," + std::to_string(i)});
            }

    // res(beta . y) = res(beta) . res(y)
    for (long t = 0; t < ga_f; ++t)
        for (long i = 0; i < nf; ++i) {
            Vec lhs = mod.mackey.res.apply(mod.act_fix[t][i]);
            Vec rhs = apply_e_raw(a.mackey.res.apply(unit_vec(ga_f, t)),
                                  mod.mackey.res.apply(unit_vec(nf, i)));
            if (!mod.mackey.level_e.same_element(lhs, rhs))
                rep.push_back({"module res", "gens " + std::to_string(t) + "," +
                                                 std::to_string(i)});
        }
    // tran(alpha) . y = tran(alpha . res(y))
    for (long t = 0; t < ga_e; ++t)
        for (long i = 0; i < nf; ++i) {
            Vec lhs = mod.apply_fix(a.mackey.tran.apply(unit_vec(ga_e, t)), unit_vec(nf, i));
            Vec rhs = mod.mackey.tran.apply(
                apply_e_raw(unit_vec(ga_e, t), mod.mackey.res.apply(unit_vec(nf, i))));
            if (!mod.mackey.level_fix.same_element(lhs, rhs))
                rep.push_back({"module frobenius", "gens " + std::to_string(t) + "," +
                                                       std::to_string(i)});
        }
    // w(alpha . x) = w(alpha) . w(x)
    for (long t = 0; t < ga_e; ++t)
        for (long i = 0; i < ne; ++i) {
            Vec lhs = mod.mackey.w.apply(mod.act_e[t][i]);
            Vec rhs = apply_e_raw(a.mackey.w.apply(unit_vec(ga_e, t)),
                                  mod.mackey.w.apply(unit_vec(ne, i)));
            if (!mod.mackey.level_e.same_element(lhs, rhs))
                rep.push_back({"module equivariance", "gens " + std::to_string(t) + "," +
                                                          std::to_string(i)});
        }
    return rep;
}

HermitianWittModules hermitian_witt_actions(const HermitianMackey& h,
                                            const WittGreen& w) {
    const PresRing& s = h.ring_e;
    const long n = s.gens();
    const long nf = h.mackey.level_fix.gens();
    const WittArith& ar = w.arith;
    const TensorProduct& tens = ar.square().tens;
    const long ge = w.green.mackey.level_e.gens();
    const long gf = w.green.mackey.level_fix.gens();

    HermitianWittModules out;
    out.left_module.mackey = h.mackey;
    out.right_module.mackey = h.mackey;
    out.left_module.act_e.assign(ge, std::vector<Vec>(n));
    out.right_module.act_e.assign(ge, std::vector<Vec>(n));
    out.left_module.act_fix.assign(gf, std::vector<Vec>(nf));
    out.right_module.act_fix.assign(gf, std::vector<Vec>(nf));

    // underlying level: (g_k (x) g_l) . b = g_k b w(g_l),
    //                   b . (g_k (x) g_l) = w(g_l) b g_k
    for (long t = 0; t < ge; ++t) {
        Vec pairs = tens.pres.lift(unit_vec(ge, t));
        for (long b = 0; b < n; ++b) {
            Vec lacc = zero_vec(n), racc = zero_vec(n);
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l) {
                    const Int& u = pairs[tens.pair_index(k, l)];
                    if (u == 0) continue;
                    Vec wl = h.mackey.w.apply(unit_vec(n, l));
                    Vec lterm = s.multiply(s.multiply(unit_vec(n, k), unit_vec(n, b)), wl);
                    Vec rterm = s.multiply(s.multiply(wl, unit_vec(n, b)), unit_vec(n, k));
                    lacc = lacc + u * lterm;
                    racc = racc + u * rterm;
                }
            out.left_module.act_e[t][b] = s.carrier.reduce(lacc);
            out.right_module.act_e[t][b] = s.carrier.reduce(racc);
        }
    }

    // fixed level: (a,c) . x = a . x + tran(mu_1(c (x) res(x))) and the
    // mirrored right-handed formula
    for (long t = 0; t < gf; ++t) {
        WittElem el = w.fix_to_elem(unit_vec(gf, t));
        Vec cpairs = tens.pres.lift(ar.lift_coinv(el.c));
        Vec wa = h.mackey.w.apply(el.a);
        for (long x = 0; x < nf; ++x) {
            Vec resx = h.mackey.res.apply(unit_vec(nf, x));
            Vec lmid = zero_vec(n), rmid = zero_vec(n);
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l) {
                    const Int& u = cpairs[tens.pair_index(k, l)];
                    if (u == 0) continue;
                    Vec wl = h.mackey.w.apply(unit_vec(n, l));
                    lmid = lmid + u * s.multiply(s.multiply(unit_vec(n, k), resx), wl);
                    rmid = rmid + u * s.multiply(s.multiply(wl, resx), unit_vec(n, k));
                }
            Vec lval = h.act(el.a, unit_vec(nf, x)) + h.mackey.tran.apply(lmid);
            Vec rval = h.act(wa, unit_vec(nf, x)) + h.mackey.tran.apply(rmid);
            out.left_module.act_fix[t][x] = h.mackey.level_fix.reduce(lval);
            out.right_module.act_fix[t][x] = h.mackey.level_fix.reduce(rval);
        }
    }
    return out;
}

}  // namespace eqalg
