#include "eqalg/thr.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqalg {

namespace {

struct UnionFind {
    std::vector<long> parent;
    explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    long find(long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(long a, long b) { parent[find(a)] = find(b); }
};

// Compresses union-find roots to consecutive indices; returns (class_of, count).
std::pair<std::vector<long>, long> compress(UnionFind& uf, long n) {
    std::vector<long> label(n, -1);
    std::vector<long> cls(n);
    long next = 0;
    for (long i = 0; i < n; ++i) {
        long r = uf.find(i);
        if (label[r] < 0) label[r] = next++;
        cls[i] = label[r];
    }
    return {cls, next};
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

}  // namespace

Pi0Report thr_pi0(const HermitianMackey& h, bool run_oracle) {
    if (!h.unit_fix)
        throw std::invalid_argument("thr_pi0: input has no fixed-level unit");
    Report hv = validate_hermitian(h);
    if (!hv.empty())
        throw std::invalid_argument("thr_pi0: invalid Hermitian input: " + report_str(hv));
    const PresRing& r = h.ring_e;
    if (!r.carrier.same_element(h.mackey.res.apply(*h.unit_fix), r.unit))
        throw std::invalid_argument("thr_pi0: res(unit_fix) is not the ring unit");

    Pi0Report out;
    out.cq = commutator_quotient(r);
    const FgAbGroup& f = h.mackey.level_fix;
    out.tens = tensor(f, f);
    const long ne = r.gens(), nf = f.gens();

    // Relation generators in the tensor square of the fixed level:
    //   i)  x (x) a.y - w(a).x (x) y
    //   ii) x (x) tran(a res(y) w(b)) - tran(w(b) res(x) a) (x) y
    // over canonical generators; general parameters reduce to these because
    // ii) is multi-additive and the failure of additivity of the action in a
    // is itself an instance of ii).
    std::vector<Vec> rels;
    auto res_of = [&](long i) { return h.mackey.res.apply(unit_vec(nf, i)); };
    for (long a = 0; a < ne; ++a) {
        Vec ea = unit_vec(ne, a), wa = r.apply_w(ea);
        for (long i = 0; i < nf; ++i)
            for (long j = 0; j < nf; ++j) {
                Vec lhs = out.tens.tensor(unit_vec(nf, i), h.act(ea, unit_vec(nf, j)));
                Vec rhs = out.tens.tensor(h.act(wa, unit_vec(nf, i)), unit_vec(nf, j));
                rels.push_back(lhs - rhs);
                std::ostringstream os;
                os << "twist(a=" << a << ",x=" << i << ",y=" << j << ")";
                out.presentation_trace.push_back(os.str());
            }
    }
    for (long a = 0; a < ne; ++a)
        for (long b = 0; b < ne; ++b) {
            Vec ea = unit_vec(ne, a), wb = r.apply_w(unit_vec(ne, b));
            for (long i = 0; i < nf; ++i)
                for (long j = 0; j < nf; ++j) {
                    Vec t1 = h.mackey.tran.apply(r.multiply(ea, r.multiply(res_of(j), wb)));
                    Vec t2 = h.mackey.tran.apply(r.multiply(wb, r.multiply(res_of(i), ea)));
                    Vec lhs = out.tens.tensor(unit_vec(nf, i), t1);
                    Vec rhs = out.tens.tensor(t2, unit_vec(nf, j));
                    rels.push_back(lhs - rhs);
                    std::ostringstream os;
                    os << "transfer(a=" << a << ",b=" << b << ",x=" << i << ",y=" << j << ")";
                    out.presentation_trace.push_back(os.str());
                }
        }
    out.fix_pres = quotient(out.tens.group, from_cols(out.tens.group.gens(), rels));

    MackeyZ2 m;
    m.level_e = out.cq.group;
    m.level_fix = out.fix_pres.group;
    m.w = *out.cq.involution;

    // tran(a) = tran(a) (x) unit; must kill commutators
    std::vector<Vec> tran_cols;
    for (long k = 0; k < m.level_e.gens(); ++k) {
        Vec a = out.cq.section.col(k);
        tran_cols.push_back(out.fix_pres.project(
            out.tens.tensor(h.mackey.tran.apply(a), *h.unit_fix)));
    }
    m.tran = hom_from_cols(m.level_e, m.level_fix, tran_cols);
    for (long i = 0; i < ne; ++i)
        for (long j = 0; j < ne; ++j) {
            Vec comm = r.multiply(unit_vec(ne, i), unit_vec(ne, j)) -
                       r.multiply(unit_vec(ne, j), unit_vec(ne, i));
            require(is_zero(out.fix_pres.project(
                        out.tens.tensor(h.mackey.tran.apply(comm), *h.unit_fix))),
                    "thr_pi0: transfer does not kill commutators");
        }

    // res(x (x) y) = res(x) res(y), defined through the pair basis
    std::vector<Vec> res_cols;
    for (long k = 0; k < m.level_fix.gens(); ++k) {
        Vec pair = out.tens.pres.lift(out.fix_pres.lift(unit_vec(m.level_fix.gens(), k)));
        Vec val = zero_vec(ne);
        for (long i = 0; i < nf; ++i)
            for (long j = 0; j < nf; ++j) {
                const Int& c = pair[out.tens.pair_index(i, j)];
                if (c != 0) val = val + c * r.multiply(res_of(i), res_of(j));
            }
        res_cols.push_back(out.cq.proj.apply(val));
    }
    m.res = hom_from_cols(m.level_fix, m.level_e, res_cols);

    Report mv = validate_mackey(m);
    require(mv.empty(), "thr_pi0: presented output fails validation: " + report_str(mv));
    out.result = m;

    if (run_oracle) {
        WittGreen wg = witt_green(r);
        HermitianWittModules mods = hermitian_witt_actions(h, wg);
        BoxResult bx = box_over_green(mods.right_module, mods.left_module, wg.green);

        // comparison map: underlying x (x) y -> class of xy; fixed-level
        // e-pair a (x) b -> tran(ab) (x) 1, fix-pair x (x) y -> x (x) y
        std::vector<Vec> pe_cols;
        for (long k = 0; k < bx.mackey.level_e.gens(); ++k) {
            Vec te = bx.e_pres.lift(unit_vec(bx.mackey.level_e.gens(), k));
            Vec pair = bx.tens_e.pres.lift(te);
            Vec val = zero_vec(ne);
            for (long i = 0; i < ne; ++i)
                for (long j = 0; j < ne; ++j) {
                    const Int& c = pair[bx.tens_e.pair_index(i, j)];
                    if (c != 0)
                        val = val + c * r.multiply(unit_vec(ne, i), unit_vec(ne, j));
                }
            pe_cols.push_back(out.cq.proj.apply(val));
        }
        std::vector<Vec> pf_cols;
        for (long k = 0; k < bx.mackey.level_fix.gens(); ++k) {
            Vec raw = bx.fix_pres.lift(unit_vec(bx.mackey.level_fix.gens(), k));
            Vec val = zero_vec(m.level_fix.gens());
            for (long i = 0; i < ne; ++i)
                for (long j = 0; j < ne; ++j) {
                    const Int& c = raw[bx.ep_index(i, j)];
                    if (c != 0)
                        val = val + c * out.fix_pres.project(out.tens.tensor(
                                          h.mackey.tran.apply(r.multiply(
                                              unit_vec(ne, i), unit_vec(ne, j))),
                                          *h.unit_fix));
                }
            for (long i = 0; i < nf; ++i)
                for (long j = 0; j < nf; ++j) {
                    const Int& c = raw[bx.fp_index(i, j)];
                    if (c != 0) val = val + c * out.fix_pres.project(out.tens.gen_tensor(i, j));
                }
            pf_cols.push_back(m.level_fix.reduce(val));
        }
        MackeyHom cmp{hom_from_cols(bx.mackey.level_e, m.level_e, pe_cols),
                      hom_from_cols(bx.mackey.level_fix, m.level_fix, pf_cols)};
        require(is_mackey_iso(bx.mackey, m, cmp),
                "thr_pi0: presentation disagrees with the balanced box product");
        out.presentation_trace.push_back("oracle: balanced box product comparison passed");
    }
    return out;
}

Pi0Report thr_pi0_commutative(const HermitianMackey& h, const PresRing& ring_fix,
                              bool run_oracle) {
    if (!h.ring_e.is_commutative())
        throw std::invalid_argument("thr_pi0_commutative: underlying ring not commutative");
    if (!(ring_fix.carrier == h.mackey.level_fix))
        throw std::invalid_argument("thr_pi0_commutative: fixed ring carrier mismatch");
    Report rv = validate_ring(ring_fix);
    require(rv.empty(), "thr_pi0_commutative: invalid fixed ring: " + report_str(rv));

    Pi0Report out = thr_pi0(h, run_oracle);
    const PresRing& r = h.ring_e;
    const long ne = r.gens(), nf = ring_fix.gens();
    const long qg = out.result.level_fix.gens();

    // underlying-level ring structure on the commutator quotient
    PresRing re;
    re.carrier = out.cq.group;
    re.unit = out.cq.proj.apply(r.unit);
    re.w = out.cq.involution;
    re.mul.assign(re.gens(), std::vector<Vec>(re.gens()));
    for (long i = 0; i < re.gens(); ++i)
        for (long j = 0; j < re.gens(); ++j)
            re.mul[i][j] = out.cq.proj.apply(
                r.multiply(out.cq.section.col(i), out.cq.section.col(j)));
    require(validate_ring(re).empty(), "thr_pi0_commutative: underlying quotient ring invalid");

    // fixed-level ring: (x (x) y)(x' (x) y') = xx' (x) yy'
    auto mul_fix = [&](const Vec& u, const Vec& v) {
        Vec pu = out.tens.pres.lift(out.fix_pres.lift(u));
        Vec pv = out.tens.pres.lift(out.fix_pres.lift(v));
        Vec acc = zero_vec(out.tens.group.gens());
        for (long i = 0; i < nf; ++i)
            for (long j = 0; j < nf; ++j) {
                const Int& cu = pu[out.tens.pair_index(i, j)];
                if (cu == 0) continue;
                for (long k = 0; k < nf; ++k)
                    for (long l = 0; l < nf; ++l) {
                        const Int& cv = pv[out.tens.pair_index(k, l)];
                        if (cv == 0) continue;
                        acc = acc + Int(cu * cv) * out.tens.tensor(ring_fix.mul[i][k],
                                                                   ring_fix.mul[j][l]);
                    }
            }
        return out.fix_pres.project(acc);
    };
    PresRing rf;
    rf.carrier = out.result.level_fix;
    rf.unit = out.fix_pres.project(out.tens.tensor(*h.unit_fix, *h.unit_fix));
    rf.mul.assign(qg, std::vector<Vec>(qg));
    for (long i = 0; i < qg; ++i)
        for (long j = 0; j < qg; ++j)
            rf.mul[i][j] = mul_fix(unit_vec(qg, i), unit_vec(qg, j));
    Report fv = validate_ring(rf);
    require(fv.empty(), "thr_pi0_commutative: fixed quotient ring invalid: " + report_str(fv));

    // res is a unital ring map
    require(re.carrier.same_element(out.result.res.apply(rf.unit), re.unit),
            "thr_pi0_commutative: res not unital");
    for (long i = 0; i < qg; ++i)
        for (long j = 0; j < qg; ++j) {
            Vec lhs = out.result.res.apply(rf.mul[i][j]);
            Vec rhs = re.multiply(out.result.res.apply(unit_vec(qg, i)),
                                  out.result.res.apply(unit_vec(qg, j)));
            require(re.carrier.same_element(lhs, rhs),
                    "thr_pi0_commutative: res not multiplicative");
        }

    // multiplicative norm a -> N(a) (x) 1
    auto norm_of = [&](const Vec& a) {
        return out.fix_pres.project(out.tens.tensor(h.act(a, *h.unit_fix), *h.unit_fix));
    };
    std::vector<Vec> norm;
    for (long i = 0; i < ne; ++i) norm.push_back(norm_of(unit_vec(ne, i)));
    for (long i = 0; i < ne; ++i)
        for (long j = 0; j < ne; ++j) {
            Vec lhs = norm_of(r.mul[i][j]);
            Vec rhs = rf.multiply(norm[i], norm[j]);
            require(rf.carrier.same_element(lhs, rhs),
                    "thr_pi0_commutative: norm not multiplicative");
        }

    out.ring_e = re;
    out.ring_fix = rf;
    out.norm = norm;
    out.presentation_trace.push_back("commutative: ring, res and norm checks passed");
    return out;
}

DihedralPi0 dihedral_pi0(const FinMonoid& mon) {
    Report mv = validate_monoid(mon);
    if (!mv.empty())
        throw std::invalid_argument("dihedral_pi0: invalid monoid: " + report_str(mv));
    const long n = mon.size();

    // conjugation classes: closure of mn ~ nm
    UnionFind cu(n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) cu.unite(mon.mul(a, b), mon.mul(b, a));
    auto [cls, nc] = compress(cu, n);

    DihedralPi0 out;
    out.class_of = cls;
    out.class_names.assign(nc, "");
    for (long i = 0; i < n; ++i)
        if (out.class_names[cls[i]].empty())
            out.class_names[cls[i]] = "[" + mon.elements[i] + "]";

    // involution on classes
    std::vector<long> wc(nc, -1);
    for (long i = 0; i < n; ++i) {
        long img = cls[mon.iota[i]];
        if (wc[cls[i]] < 0) wc[cls[i]] = img;
        else if (wc[cls[i]] != img)
            throw std::runtime_error("dihedral_pi0: involution not class-invariant");
    }

    // fixed elements and fixed-pair classes: (iota(m) x m, y) ~ (x, m y iota(m))
    std::vector<long> fixed;
    std::vector<long> fix_index(n, -1);
    for (long i = 0; i < n; ++i)
        if (mon.iota[i] == i) {
            fix_index[i] = static_cast<long>(fixed.size());
            fixed.push_back(i);
        }
    const long nfx = static_cast<long>(fixed.size());
    UnionFind pu(nfx * nfx);
    auto pidx = [&](long x, long y) { return fix_index[x] * nfx + fix_index[y]; };
    for (long xi = 0; xi < nfx; ++xi)
        for (long yi = 0; yi < nfx; ++yi) {
            long x = fixed[xi], y = fixed[yi];
            for (long m = 0; m < n; ++m) {
                long x2 = mon.mul(mon.iota[m], mon.mul(x, m));
                long y2 = mon.mul(m, mon.mul(y, mon.iota[m]));
                pu.unite(pidx(x2, y), pidx(x, y2));
            }
        }
    auto [pcls, np] = compress(pu, nfx * nfx);

    // orbits of the class involution (basis of the coinvariants)
    std::vector<long> orbit_of(nc, -1);
    std::vector<long> orbit_rep;
    long no = 0;
    for (long c = 0; c < nc; ++c)
        if (orbit_of[c] < 0) {
            orbit_of[c] = no;
            orbit_of[wc[c]] = no;
            orbit_rep.push_back(c);
            ++no;
        }
    out.n_orbits = no;
    out.n_pairs = np;
    for (long o = 0; o < no; ++o)
        out.fix_names.push_back(out.class_names[orbit_rep[o]] + "~");
    std::vector<std::pair<long, long>> pair_rep(np, {-1, -1});
    for (long xi = 0; xi < nfx; ++xi)
        for (long yi = 0; yi < nfx; ++yi) {
            long p = pcls[xi * nfx + yi];
            if (pair_rep[p].first < 0) {
                pair_rep[p] = {fixed[xi], fixed[yi]};
                out.fix_names.push_back("(" + mon.elements[fixed[xi]] + "," +
                                        mon.elements[fixed[yi]] + ")");
            }
        }

    MackeyZ2 m;
    m.level_e = FgAbGroup::free(nc);
    m.level_fix = FgAbGroup::free(no + np);
    IntMat wmat(nc, nc);
    for (long c = 0; c < nc; ++c) wmat.at(wc[c], c) = 1;
    m.w = {m.level_e, m.level_e, wmat};
    IntMat tmat(no + np, nc);
    for (long c = 0; c < nc; ++c) tmat.at(orbit_of[c], c) = 1;
    m.tran = {m.level_e, m.level_fix, tmat};
    IntMat rmat(nc, no + np);
    for (long o = 0; o < no; ++o) {
        rmat.at(orbit_rep[o], o) += 1;
        rmat.at(wc[orbit_rep[o]], o) += 1;
    }
    for (long p = 0; p < np; ++p)
        rmat.at(cls[mon.mul(pair_rep[p].first, pair_rep[p].second)], no + p) = 1;
    m.res = {m.level_fix, m.level_e, rmat};

    Report mkv = validate_mackey(m);
    require(mkv.empty(), "dihedral_pi0: output fails validation: " + report_str(mkv));
    out.mackey = m;
    return out;
}

namespace {

bool is_integer_base(const HermitianMackey& h) {
    const PresRing& r = h.ring_e;
    return r.carrier == FgAbGroup::free(1) && r.unit == Vec{1} &&
           r.mul[0][0] == Vec{1} && r.w && r.w->same_map(GroupHom::id(r.carrier)) &&
           h.mackey.level_fix == FgAbGroup::free(1) &&
           h.mackey.res.m == IntMat::identity(1);
}

}  // namespace

GroupRingPi0 thr_group_ring(const FinMonoid& g, const HermitianMackey& base) {
    if (!g.is_group())
        throw std::invalid_argument("thr_group_ring: monoid has no inverses");
    GroupRingPi0 out;
    out.classes = dihedral_pi0(g);
    Pi0Report basep = thr_pi0(base, /*run_oracle=*/false);
    BoxResult bx = box(basep.result, out.classes.mackey);
    out.box_path = bx.mackey;
    out.integral_base = is_integer_base(base);
    if (!out.integral_base) {
        out.result = out.box_path;
        return out;
    }

    // closed-form integral presentation: quotient of the dihedral fixed
    // level by 2.(pair class of (x,y)) - (orbit class of xy)
    const DihedralPi0& d = out.classes;
    const long n = g.size(), no = d.n_orbits, np = d.n_pairs;
    std::vector<long> orbit_of_class(d.class_names.size());
    {
        // recover orbit index per class from the transfer matrix
        for (long c = 0; c < static_cast<long>(d.class_names.size()); ++c) {
            for (long k = 0; k < no; ++k)
                if (d.mackey.tran.m.at(k, c) == 1) orbit_of_class[c] = k;
        }
    }
    std::vector<long> fix_index(n, -1);
    std::vector<long> fixed;
    for (long i = 0; i < n; ++i)
        if (g.iota[i] == i) {
            fix_index[i] = static_cast<long>(fixed.size());
            fixed.push_back(i);
        }
    // pair-class index of a raw fixed pair via the same identifications
    const long nfx = static_cast<long>(fixed.size());
    UnionFind pu(nfx * nfx);
    auto pidx = [&](long x, long y) { return fix_index[x] * nfx + fix_index[y]; };
    for (long xi = 0; xi < nfx; ++xi)
        for (long yi = 0; yi < nfx; ++yi)
            for (long m = 0; m < n; ++m) {
                long x = fixed[xi], y = fixed[yi];
                pu.unite(pidx(g.mul(g.iota[m], g.mul(x, m)), y),
                         pidx(x, g.mul(m, g.mul(y, g.iota[m]))));
            }
    auto [pcls, np2] = compress(pu, nfx * nfx);
    require(np2 == np, "thr_group_ring: pair-class count mismatch");

    std::vector<Vec> dcols;
    for (long xi = 0; xi < nfx; ++xi)
        for (long yi = 0; yi < nfx; ++yi) {
            Vec col = zero_vec(no + np);
            col[no + pcls[xi * nfx + yi]] += 2;
            long prod_class = d.class_of[g.mul(fixed[xi], fixed[yi])];
            col[orbit_of_class[prod_class]] -= 1;
            dcols.push_back(col);
        }
    Presentation q = quotient(d.mackey.level_fix, from_cols(no + np, dcols));

    MackeyZ2 m;
    m.level_e = d.mackey.level_e;
    m.w = d.mackey.w;
    m.level_fix = q.group;
    std::vector<Vec> tran_cols;
    for (long c = 0; c < m.level_e.gens(); ++c)
        tran_cols.push_back(q.project(d.mackey.tran.apply(unit_vec(m.level_e.gens(), c))));
    m.tran = hom_from_cols(m.level_e, m.level_fix, tran_cols);
    std::vector<Vec> res_cols;
    for (long k = 0; k < m.level_fix.gens(); ++k)
        res_cols.push_back(d.mackey.res.apply(q.lift(unit_vec(m.level_fix.gens(), k))));
    m.res = hom_from_cols(m.level_fix, m.level_e, res_cols);

    Report mkv = validate_mackey(m);
    require(mkv.empty(), "thr_group_ring: integral presentation fails validation: " +
                             report_str(mkv));

    // natural comparison with the box path: a class maps to 1 (x) class, an
    // orbit or pair generator to the fixed pair 1 (x) generator
    Vec xe = basep.cq.proj.apply(Vec{1});
    Vec xfix = basep.fix_pres.project(basep.tens.tensor(*base.unit_fix, *base.unit_fix));
    std::vector<Vec> pe_cols;
    for (long c = 0; c < m.level_e.gens(); ++c)
        pe_cols.push_back(bx.e_tensor(xe, unit_vec(m.level_e.gens(), c)));
    std::vector<Vec> pf_cols;
    for (long k = 0; k < m.level_fix.gens(); ++k) {
        Vec raw = q.lift(unit_vec(m.level_fix.gens(), k));
        Vec val = zero_vec(out.box_path.level_fix.gens());
        for (long i = 0; i < no + np; ++i)
            if (raw[i] != 0)
                val = val + raw[i] * bx.fix_of_fixpair(xfix, unit_vec(no + np, i));
        pf_cols.push_back(out.box_path.level_fix.reduce(val));
    }
    MackeyHom cmp{hom_from_cols(m.level_e, out.box_path.level_e, pe_cols),
                  hom_from_cols(m.level_fix, out.box_path.level_fix, pf_cols)};
    require(is_mackey_iso(m, out.box_path, cmp) || mackey_isomorphic(m, out.box_path),
            "thr_group_ring: integral presentation disagrees with the box path");
    out.result = m;
    return out;
}

MackeyZ2 laurent_thr_pi0(long window) {
    if (window < 1) throw std::invalid_argument("laurent_thr_pi0: window must be >= 1");
    const long n = window;
    const long ne = 2 * n + 1;      // t^{-n} .. t^{n}, index k+n
    const long nf = n + 1;          // t^1 .. t^n then u
    auto eidx = [&](long k) { return k + n; };
    MackeyZ2 m;
    m.level_e = FgAbGroup::free(ne);
    m.level_fix = FgAbGroup::free(nf);
    IntMat wmat(ne, ne);
    for (long k = -n; k <= n; ++k) wmat.at(eidx(-k), eidx(k)) = 1;
    m.w = {m.level_e, m.level_e, wmat};
    IntMat tmat(nf, ne);
    for (long k = 1; k <= n; ++k) {
        tmat.at(k - 1, eidx(k)) = 1;
        tmat.at(k - 1, eidx(-k)) = 1;
    }
    tmat.at(nf - 1, eidx(0)) = 2;
    m.tran = {m.level_e, m.level_fix, tmat};
    IntMat rmat(ne, nf);
    for (long k = 1; k <= n; ++k) {
        rmat.at(eidx(k), k - 1) = 1;
        rmat.at(eidx(-k), k - 1) = 1;
    }
    rmat.at(eidx(0), nf - 1) = 1;
    m.res = {m.level_fix, m.level_e, rmat};
    Report mkv = validate_mackey(m);
    require(mkv.empty(), "laurent_thr_pi0: output fails validation: " + report_str(mkv));
    return m;
}

}  // namespace eqalg
