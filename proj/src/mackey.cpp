#include "eqalg/mackey.hpp"

#include <stdexcept>

namespace eqalg {

namespace {

bool hom_shape_ok(const GroupHom& h, const FgAbGroup& src, const FgAbGroup& dst) {
    return h.src == src && h.dst == dst && h.m.rows() == dst.gens() &&
           h.m.cols() == src.gens();
}

Int binom2(const Int& n) { return n * (n - 1) / 2; }

}  // namespace

Report validate_mackey(const MackeyZ2& m) {
    Report rep;
    if (!hom_shape_ok(m.res, m.level_fix, m.level_e) ||
        !hom_shape_ok(m.tran, m.level_e, m.level_fix) ||
        !hom_shape_ok(m.w, m.level_e, m.level_e)) {
        rep.push_back({"shape", "structure map sources/targets"});
        return rep;
    }
    if (!m.res.well_defined()) rep.push_back({"well-defined", "res"});
    if (!m.tran.well_defined()) rep.push_back({"well-defined", "tran"});
    if (!m.w.well_defined()) rep.push_back({"well-defined", "w"});
    if (!rep.empty()) return rep;

    if (!m.w.compose(m.w).same_map(GroupHom::id(m.level_e)))
        rep.push_back({"involution", "w o w != id"});
    if (!m.w.compose(m.res).same_map(m.res))
        rep.push_back({"equivariance", "w o res != res"});
    if (!m.tran.compose(m.w).same_map(m.tran))
        rep.push_back({"equivariance", "tran o w != tran"});
    if (!m.res.compose(m.tran).same_map(GroupHom::id(m.level_e) + m.w))
        rep.push_back({"double coset", "res o tran != 1 + w"});
    return rep;
}

MackeyZ2 mackey_direct_sum(const std::vector<MackeyZ2>& parts) {
    std::vector<FgAbGroup> es, fs;
    for (const auto& p : parts) {
        es.push_back(p.level_e);
        fs.push_back(p.level_fix);
    }
    DirectSum de = direct_sum(es), df = direct_sum(fs);
    MackeyZ2 out;
    out.level_e = de.group;
    out.level_fix = df.group;
    out.res = GroupHom::zero(df.group, de.group);
    out.tran = GroupHom::zero(de.group, df.group);
    out.w = GroupHom::zero(de.group, de.group);
    for (size_t i = 0; i < parts.size(); ++i) {
        out.res = out.res + de.incl[i].compose(parts[i].res).compose(df.proj[i]);
        out.tran = out.tran + df.incl[i].compose(parts[i].tran).compose(de.proj[i]);
        out.w = out.w + de.incl[i].compose(parts[i].w).compose(de.proj[i]);
    }
    return out;
}

Report validate_green(const GreenZ2& g) {
    Report rep = validate_mackey(g.mackey);
    if (!(g.ring_e.carrier == g.mackey.level_e) ||
        !(g.ring_fix.carrier == g.mackey.level_fix)) {
        rep.push_back({"shape", "ring carriers do not match levels"});
        return rep;
    }
    for (auto& v : validate_ring(g.ring_e)) rep.push_back({"ring_e " + v.law, v.witness});
    for (auto& v : validate_ring(g.ring_fix)) rep.push_back({"ring_fix " + v.law, v.witness});

    const long ne = g.mackey.level_e.gens(), nf = g.mackey.level_fix.gens();

    // involution is a ring automorphism of the underlying level
    for (long i = 0; i < ne; ++i)
        for (long j = 0; j < ne; ++j) {
            Vec lhs = g.mackey.w.apply(g.ring_e.mul[i][j]);
            Vec rhs = g.ring_e.multiply(g.mackey.w.apply(unit_vec(ne, i)),
                                        g.mackey.w.apply(unit_vec(ne, j)));
            if (!g.mackey.level_e.same_element(lhs, rhs)) {
                rep.push_back({"involution multiplicative",
                               "gens " + std::to_string(i) + "," + std::to_string(j)});
            }
        }

    // res is a unital ring map
    if (!g.mackey.level_e.same_element(g.mackey.res.apply(g.ring_fix.unit),
                                       g.mackey.level_e.reduce(g.ring_e.unit)))
        rep.push_back({"res unital", "res(1) != 1"});
    for (long i = 0; i < nf; ++i)
        for (long j = 0; j < nf; ++j) {
            Vec lhs = g.mackey.res.apply(g.ring_fix.mul[i][j]);
            Vec rhs = g.ring_e.multiply(g.mackey.res.apply(unit_vec(nf, i)),
                                        g.mackey.res.apply(unit_vec(nf, j)));
            if (!g.mackey.level_e.same_element(lhs, rhs))
                rep.push_back({"res multiplicative",
                               "gens " + std::to_string(i) + "," + std::to_string(j)});
        }

    // Frobenius reciprocity on generators
    for (long a = 0; a < ne; ++a)
        for (long x = 0; x < nf; ++x) {
            Vec rx = g.mackey.res.apply(unit_vec(nf, x));
            Vec lhs = g.mackey.tran.apply(g.ring_e.multiply(unit_vec(ne, a), rx));
            Vec rhs = g.ring_fix.multiply(g.mackey.tran.apply(unit_vec(ne, a)),
                                          unit_vec(nf, x));
            if (!g.mackey.level_fix.same_element(lhs, rhs))
                rep.push_back({"frobenius", "tran(a res(x)) != tran(a) x at " +
                                                std::to_string(a) + "," + std::to_string(x)});
            lhs = g.mackey.tran.apply(g.ring_e.multiply(rx, unit_vec(ne, a)));
            rhs = g.ring_fix.multiply(unit_vec(nf, x),
                                      g.mackey.tran.apply(unit_vec(ne, a)));
            if (!g.mackey.level_fix.same_element(lhs, rhs))
                rep.push_back({"frobenius", "tran(res(x) a) != x tran(a) at " +
                                                std::to_string(a) + "," + std::to_string(x)});
        }
    return rep;
}

Vec HermitianMackey::act(const Vec& a, const Vec& x) const {
    const FgAbGroup& fix = mackey.level_fix;
    const long ne = mackey.level_e.gens(), nf = fix.gens();
    if (static_cast<long>(a.size()) != ne) throw std::invalid_argument("act: bad a");
    Vec xr = fix.reduce(x);
    Vec out = zero_vec(nf);
    for (long j = 0; j < nf; ++j) {
        if (xr[j] == 0) continue;
        // closed form of the extension rule:
        // a.x = sum_i a_i (g_i.x) + sum_i C(a_i,2) tran(g_i res(x) w(g_i))
        //       + sum_{i<k} a_i a_k tran(g_i res(x) w(g_k))
        Vec resx = mackey.res.apply(unit_vec(nf, j));
        Vec v = zero_vec(nf);
        for (long i = 0; i < ne; ++i) {
            if (a[i] == 0) continue;
            v = v + a[i] * action[i][j];
            for (long k = i; k < ne; ++k) {
                if (a[k] == 0) continue;
                Int coef = (k == i) ? binom2(a[i]) : a[i] * a[k];
                Vec mid = ring_e.multiply(
                    ring_e.multiply(unit_vec(ne, i), resx),
                    mackey.w.apply(unit_vec(ne, k)));
                v = v + coef * mackey.tran.apply(mid);
            }
        }
        out = out + xr[j] * v;
    }
    return fix.reduce(out);
}

Report validate_hermitian(const HermitianMackey& h) {
    Report rep = validate_mackey(h.mackey);
    if (!(h.ring_e.carrier == h.mackey.level_e)) {
        rep.push_back({"shape", "ring carrier does not match level_e"});
        return rep;
    }
    if (!h.ring_e.has_involution() || !h.ring_e.w->same_map(h.mackey.w)) {
        rep.push_back({"shape", "ring anti-involution missing or != Mackey w"});
        return rep;
    }
    for (auto& v : validate_ring(h.ring_e)) rep.push_back({"ring_e " + v.law, v.witness});

    const long ne = h.mackey.level_e.gens(), nf = h.mackey.level_fix.gens();
    if (static_cast<long>(h.action.size()) != ne) {
        rep.push_back({"shape", "action table rows"});
        return rep;
    }
    for (long i = 0; i < ne; ++i) {
        if (static_cast<long>(h.action[i].size()) != nf) {
            rep.push_back({"shape", "action table row " + std::to_string(i)});
            return rep;
        }
        for (long j = 0; j < nf; ++j)
            if (static_cast<long>(h.action[i][j].size()) != nf) {
                rep.push_back({"shape", "action entry size"});
                return rep;
            }
    }
    if (!rep.empty()) return rep;

    const FgAbGroup& fix = h.mackey.level_fix;

    // action well-defined in x: the order of a fixed-level generator kills
    // its action values
    for (long j = 0; j < fix.torsion_count(); ++j) {
        Int o = fix.gen_order(j);
        for (long i = 0; i < ne; ++i)
            if (!is_zero(fix.reduce(o * h.action[i][j])))
                rep.push_back({"action well-defined",
                               "order of x" + std::to_string(j) + " times g" +
                                   std::to_string(i) + ".x" + std::to_string(j)});
    }
    // action well-defined in a: relations of level_e act by zero
    for (long i = 0; i < h.mackey.level_e.torsion_count(); ++i) {
        Int d = h.mackey.level_e.gen_order(i);
        for (long j = 0; j < nf; ++j) {
            Vec v = h.act(d * unit_vec(ne, i), unit_vec(nf, j));
            if (!is_zero(v))
                rep.push_back({"action well-defined",
                               "(d" + std::to_string(i) + " g" + std::to_string(i) +
                                   ").x" + std::to_string(j) + " != 0"});
        }
    }

    // unit action and multiplicativity
    for (long j = 0; j < nf; ++j) {
        Vec v = h.act(h.ring_e.unit, unit_vec(nf, j));
        if (!fix.same_element(v, fix.reduce(unit_vec(nf, j))))
            rep.push_back({"unit action", "1.x" + std::to_string(j)});
    }
    for (long i = 0; i < ne; ++i)
        for (long k = 0; k < ne; ++k)
            for (long j = 0; j < nf; ++j) {
                Vec lhs = h.act(h.ring_e.mul[i][k], unit_vec(nf, j));
                Vec rhs = h.act(unit_vec(ne, i), h.act(unit_vec(ne, k), unit_vec(nf, j)));
                if (!fix.same_element(lhs, rhs))
                    rep.push_back({"monoid action",
                                   "(g" + std::to_string(i) + " g" + std::to_string(k) +
                                       ").x" + std::to_string(j)});
            }

    // res(a.x) = a res(x) w(a)
    for (long i = 0; i < ne; ++i)
        for (long j = 0; j < nf; ++j) {
            Vec lhs = h.mackey.res.apply(h.action[i][j]);
            Vec rx = h.mackey.res.apply(unit_vec(nf, j));
            Vec rhs = h.ring_e.multiply(
                h.ring_e.multiply(unit_vec(ne, i), rx),
                h.mackey.w.apply(unit_vec(ne, i)));
            if (!h.mackey.level_e.same_element(lhs, rhs))
                rep.push_back({"hermitian res",
                               "res(g" + std::to_string(i) + ".x" + std::to_string(j) +
                                   ") != a res(x) w(a)"});
        }

    // tran(a b w(a)) = a.tran(b)
    for (long i = 0; i < ne; ++i)
        for (long k = 0; k < ne; ++k) {
            Vec abwa = h.ring_e.multiply(
                h.ring_e.multiply(unit_vec(ne, i), unit_vec(ne, k)),
                h.mackey.w.apply(unit_vec(ne, i)));
            Vec lhs = h.mackey.tran.apply(abwa);
            Vec rhs = h.act(unit_vec(ne, i), h.mackey.tran.apply(unit_vec(ne, k)));
            if (!fix.same_element(lhs, rhs))
                rep.push_back({"hermitian tran",
                               "tran(g" + std::to_string(i) + " g" + std::to_string(k) +
                                   " w(g" + std::to_string(i) + "))"});
        }

    if (h.unit_fix) {
        Vec r = h.mackey.res.apply(*h.unit_fix);
        if (!h.mackey.level_e.same_element(r, h.mackey.level_e.reduce(h.ring_e.unit)))
            rep.push_back({"unit_fix", "res(unit_fix) != 1"});
    }
    return rep;
}

HermitianMackey hermitian_from_ring(const PresRing& r) {
    if (!r.has_involution()) throw std::invalid_argument("ring has no anti-involution");
    const long n = r.gens();
    Subgroup inv = kernel(*r.w - GroupHom::id(r.carrier));

    HermitianMackey h;
    h.ring_e = r;
    h.mackey.level_e = r.carrier;
    h.mackey.level_fix = inv.group;
    h.mackey.res = inv.incl;
    h.mackey.w = *r.w;

    auto corestrict = [&](const Vec& v) {
        auto c = inv.corestrict(v);
        if (!c) throw std::logic_error("element not fixed by the involution");
        return *c;
    };

    std::vector<Vec> tran_cols;
    for (long i = 0; i < n; ++i) {
        Vec y = r.carrier.reduce(unit_vec(n, i) + r.w->apply(unit_vec(n, i)));
        tran_cols.push_back(corestrict(y));
    }
    h.mackey.tran = hom_from_cols(r.carrier, inv.group, tran_cols);

    const long nf = inv.group.gens();
    h.action.assign(n, std::vector<Vec>(nf));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < nf; ++j) {
            Vec x = inv.incl.apply(unit_vec(nf, j));
            Vec axwa = r.multiply(r.multiply(unit_vec(n, i), x),
                                  r.w->apply(unit_vec(n, i)));
            h.action[i][j] = corestrict(axwa);
        }
    h.unit_fix = corestrict(r.carrier.reduce(r.unit));
    return h;
}

BurnsideData burnside() {
    BurnsideData b;
    FgAbGroup z = FgAbGroup::free(1);
    FgAbGroup z2 = FgAbGroup::free(2);  // basis {1, t}

    MackeyZ2& m = b.green.mackey;
    m.level_e = z;
    m.level_fix = z2;
    m.res = GroupHom(z2, z, IntMat{{1, 2}});
    m.tran = GroupHom(z, z2, IntMat{{0}, {1}});
    m.w = GroupHom::id(z);

    b.green.ring_e.carrier = z;
    b.green.ring_e.mul = {{Vec{1}}};
    b.green.ring_e.unit = Vec{1};
    b.green.ring_e.w = GroupHom::id(z);

    PresRing& rf = b.green.ring_fix;
    rf.carrier = z2;
    rf.mul.assign(2, std::vector<Vec>(2, zero_vec(2)));
    rf.mul[0][0] = Vec{1, 0};
    rf.mul[0][1] = Vec{0, 1};
    rf.mul[1][0] = Vec{0, 1};
    rf.mul[1][1] = Vec{0, 2};  // t^2 = 2t
    rf.unit = Vec{1, 0};

    b.hermitian.mackey = m;
    b.hermitian.ring_e = b.green.ring_e;
    b.hermitian.action = {{Vec{1, 0}, Vec{0, 1}}};  // 1 acts as the identity
    b.hermitian.unit_fix = Vec{1, 0};
    return b;
}

}  // namespace eqalg
