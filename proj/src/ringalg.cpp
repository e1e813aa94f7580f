#include "eqalg/ringalg.hpp"

#include <sstream>
#include <stdexcept>

namespace eqalg {

namespace {

std::string fmt_vec(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string report_str(const Report& r) {
    std::ostringstream os;
    for (const auto& v : r) os << v.law << ": " << v.witness << "\n";
    return os.str();
}

Vec PresRing::multiply(const Vec& x, const Vec& y) const {
    const long n = gens();
    Vec xr = carrier.reduce(x), yr = carrier.reduce(y);
    Vec out = zero_vec(n);
    for (long i = 0; i < n; ++i) {
        if (xr[i] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (yr[j] == 0) continue;
            const Int c = xr[i] * yr[j];
            for (long k = 0; k < n; ++k) out[k] += c * mul[i][j][k];
        }
    }
    return carrier.reduce(out);
}

Vec PresRing::apply_w(const Vec& x) const {
    if (w) return w->apply(x);
    return carrier.reduce(x);
}

bool PresRing::is_commutative() const {
    for (long i = 0; i < gens(); ++i)
        for (long j = i + 1; j < gens(); ++j)
            if (!carrier.same_element(mul[i][j], mul[j][i])) return false;
    return true;
}

Report validate_ring(const PresRing& r) {
    Report rep;
    const long n = r.gens();
    if (static_cast<long>(r.mul.size()) != n ||
        static_cast<long>(r.unit.size()) != n) {
        rep.push_back({"shape", "product table or unit has wrong size"});
        return rep;
    }
    for (long i = 0; i < n; ++i) {
        if (static_cast<long>(r.mul[i].size()) != n) {
            rep.push_back({"shape", "product table row " + std::to_string(i)});
            return rep;
        }
        for (long j = 0; j < n; ++j)
            if (static_cast<long>(r.mul[i][j].size()) != n) {
                rep.push_back({"shape", "product entry (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")"});
                return rep;
            }
    }

    // Multiplication must respect the torsion relations of the carrier.
    for (long i = 0; i < r.carrier.torsion_count(); ++i) {
        const Int d = r.carrier.gen_order(i);
        for (long j = 0; j < n; ++j) {
            if (!is_zero(r.carrier.reduce(d * r.mul[i][j])))
                rep.push_back({"well-defined",
                               "d" + std::to_string(i) + " * (g" + std::to_string(i) +
                                   " g" + std::to_string(j) + ") != 0"});
            if (!is_zero(r.carrier.reduce(d * r.mul[j][i])))
                rep.push_back({"well-defined",
                               "d" + std::to_string(i) + " * (g" + std::to_string(j) +
                                   " g" + std::to_string(i) + ") != 0"});
        }
    }

    for (long i = 0; i < n; ++i) {
        const Vec gi = unit_vec(n, i);
        if (!r.carrier.same_element(r.multiply(r.unit, gi), r.carrier.reduce(gi)))
            rep.push_back({"left unit", "1 * g" + std::to_string(i)});
        if (!r.carrier.same_element(r.multiply(gi, r.unit), r.carrier.reduce(gi)))
            rep.push_back({"right unit", "g" + std::to_string(i) + " * 1"});
    }

    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                const Vec gi = unit_vec(n, i), gj = unit_vec(n, j), gk = unit_vec(n, k);
                const Vec lhs = r.multiply(r.multiply(gi, gj), gk);
                const Vec rhs = r.multiply(gi, r.multiply(gj, gk));
                if (!r.carrier.same_element(lhs, rhs))
                    rep.push_back({"associativity",
                                   "(g" + std::to_string(i) + " g" + std::to_string(j) +
                                       ") g" + std::to_string(k) + " = " + fmt_vec(lhs) +
                                       " vs " + fmt_vec(rhs)});
            }

    if (r.w) {
        const GroupHom& w = *r.w;
        if (!(w.src == r.carrier) || !(w.dst == r.carrier) || !w.well_defined()) {
            rep.push_back({"involution", "not a well-defined endomorphism"});
            return rep;
        }
        if (!w.compose(w).same_map(GroupHom::id(r.carrier)))
            rep.push_back({"involution", "w o w != id"});
        if (!r.carrier.same_element(w.apply(r.unit), r.carrier.reduce(r.unit)))
            rep.push_back({"involution", "w(1) != 1"});
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const Vec lhs = w.apply(r.mul[i][j]);
                const Vec rhs = r.multiply(w.apply(unit_vec(n, j)), w.apply(unit_vec(n, i)));
                if (!r.carrier.same_element(lhs, rhs))
                    rep.push_back({"anti-involution",
                                   "w(g" + std::to_string(i) + " g" + std::to_string(j) +
                                       ") != w(g" + std::to_string(j) + ") w(g" +
                                       std::to_string(i) + ")"});
            }
    }
    return rep;
}

bool FinMonoid::is_group() const {
    for (long i = 0; i < size(); ++i) {
        bool ok = false;
        for (long j = 0; j < size(); ++j)
            if (table[i][j] == identity && table[j][i] == identity) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

Report validate_monoid(const FinMonoid& m) {
    Report rep;
    const long n = m.size();
    if (static_cast<long>(m.table.size()) != n ||
        static_cast<long>(m.iota.size()) != n || m.identity < 0 || m.identity >= n) {
        rep.push_back({"shape", "table/iota/identity sizes"});
        return rep;
    }
    for (long i = 0; i < n; ++i) {
        if (static_cast<long>(m.table[i].size()) != n) {
            rep.push_back({"shape", "table row " + std::to_string(i)});
            return rep;
        }
        for (long j = 0; j < n; ++j)
            if (m.table[i][j] < 0 || m.table[i][j] >= n) {
                rep.push_back({"shape", "table entry out of range"});
                return rep;
            }
        if (m.iota[i] < 0 || m.iota[i] >= n) {
            rep.push_back({"shape", "iota entry out of range"});
            return rep;
        }
    }
    for (long i = 0; i < n; ++i) {
        if (m.mul(m.identity, i) != i) rep.push_back({"identity", "e * " + m.elements[i]});
        if (m.mul(i, m.identity) != i) rep.push_back({"identity", m.elements[i] + " * e"});
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k)
                if (m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k)))
                    rep.push_back({"associativity",
                                   m.elements[i] + " " + m.elements[j] + " " + m.elements[k]});
    for (long i = 0; i < n; ++i)
        if (m.iota[m.iota[i]] != i)
            rep.push_back({"involution", "iota(iota(" + m.elements[i] + "))"});
    if (m.iota[m.identity] != m.identity) rep.push_back({"involution", "iota(e) != e"});
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (m.iota[m.mul(i, j)] != m.mul(m.iota[j], m.iota[i]))
                rep.push_back({"anti-involution",
                               "iota(" + m.elements[i] + " " + m.elements[j] + ")"});
    return rep;
}

FinMonoid monoid_product(const FinMonoid& a, const FinMonoid& b) {
    FinMonoid p;
    const long nb = b.size();
    auto idx = [nb](long i, long j) { return i * nb + j; };
    for (long i = 0; i < a.size(); ++i)
        for (long j = 0; j < nb; ++j)
            p.elements.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
    p.table.assign(p.elements.size(), std::vector<long>(p.elements.size(), 0));
    p.iota.assign(p.elements.size(), 0);
    for (long i = 0; i < a.size(); ++i)
        for (long j = 0; j < nb; ++j) {
            p.iota[idx(i, j)] = idx(a.iota[i], b.iota[j]);
            for (long k = 0; k < a.size(); ++k)
                for (long l = 0; l < nb; ++l)
                    p.table[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
        }
    p.identity = idx(a.identity, b.identity);
    return p;
}

CommutatorQuotient commutator_quotient(const PresRing& r) {
    const long n = r.gens();
    std::vector<Vec> rels;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            rels.push_back(r.mul[i][j] - r.mul[j][i]);
    Presentation p = quotient(r.carrier, from_cols(n, rels));

    CommutatorQuotient cq;
    cq.group = p.group;
    cq.proj = GroupHom(r.carrier, p.group, p.to_canon);
    cq.section = p.from_canon;
    if (r.w) {
        // An anti-automorphism sends each commutator ab - ba to another one,
        // so it descends to the quotient.
        IntMat wm = p.to_canon * r.w->m * p.from_canon;
        GroupHom wq(p.group, p.group, wm);
        if (!wq.well_defined())
            throw std::logic_error("involution does not descend to commutator quotient");
        cq.involution = wq;
    }
    return cq;
}

FlipSquare flip_square(const PresRing& s) {
    const long n = s.gens();
    FlipSquare fs;
    fs.tens = tensor(s.carrier, s.carrier);
    const FgAbGroup& tg = fs.tens.group;
    const long m = tg.gens();

    PresRing ring;
    ring.carrier = tg;
    ring.mul.assign(m, std::vector<Vec>(m, zero_vec(m)));
    // Product of canonical generators: lift to pair coordinates, multiply
    // elementary tensors componentwise, project back.
    std::vector<Vec> lifts(m);
    for (long c = 0; c < m; ++c) lifts[c] = fs.tens.pres.lift(unit_vec(m, c));
    for (long c1 = 0; c1 < m; ++c1)
        for (long c2 = 0; c2 < m; ++c2) {
            Vec acc = zero_vec(m);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    const Int& u = lifts[c1][fs.tens.pair_index(i, j)];
                    if (u == 0) continue;
                    for (long k = 0; k < n; ++k)
                        for (long l = 0; l < n; ++l) {
                            const Int& v = lifts[c2][fs.tens.pair_index(k, l)];
                            if (v == 0) continue;
                            Vec prod = fs.tens.tensor(s.mul[i][k], s.mul[j][l]);
                            Vec t = (u * v) * prod;
                            acc = acc + t;
                        }
                }
            ring.mul[c1][c2] = tg.reduce(acc);
        }
    ring.unit = fs.tens.tensor(s.unit, s.unit);

    // tau(a (x) b) = b (x) a, a ring automorphism of the tensor square.
    IntMat fm(m, m);
    for (long c = 0; c < m; ++c) {
        Vec acc = zero_vec(n * n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const Int& u = lifts[c][fs.tens.pair_index(i, j)];
                if (u == 0) continue;
                acc[fs.tens.pair_index(j, i)] += u;
            }
        fm.set_col(c, fs.tens.pres.project(acc));
    }
    fs.flip = GroupHom(tg, tg, fm);
    if (!fs.flip.well_defined())
        throw std::logic_error("tensor-square flip is not well defined");
    // The flip is only an anti-involution (PresRing's convention for w) when
    // the base ring is commutative.
    if (s.is_commutative()) ring.w = fs.flip;
    fs.ring = ring;
    fs.ic = invariants_and_coinvariants(tg, fs.flip);
    return fs;
}

PresRing monoid_ring(const PresRing& r, const FinMonoid& m) {
    const long nm = m.size();
    std::vector<FgAbGroup> parts(nm, r.carrier);
    DirectSum ds = direct_sum(parts);
    const FgAbGroup& g = ds.group;
    const long ng = g.gens();

    PresRing out;
    out.carrier = g;
    out.mul.assign(ng, std::vector<Vec>(ng, zero_vec(ng)));
    // Decompose each canonical generator into its monoid components once.
    std::vector<std::vector<Vec>> comp(ng, std::vector<Vec>(nm));
    for (long c = 0; c < ng; ++c)
        for (long e = 0; e < nm; ++e)
            comp[c][e] = ds.proj[e].apply(unit_vec(ng, c));
    for (long c1 = 0; c1 < ng; ++c1)
        for (long c2 = 0; c2 < ng; ++c2) {
            Vec acc = zero_vec(ng);
            for (long e = 0; e < nm; ++e) {
                if (is_zero(comp[c1][e])) continue;
                for (long f = 0; f < nm; ++f) {
                    if (is_zero(comp[c2][f])) continue;
                    Vec p = r.multiply(comp[c1][e], comp[c2][f]);
                    acc = acc + ds.incl[m.mul(e, f)].apply(p);
                }
            }
            out.mul[c1][c2] = g.reduce(acc);
        }
    out.unit = ds.incl[m.identity].apply(r.unit);

    // w(a * e) = w(a) * iota(e)
    IntMat wm(ng, ng);
    for (long c = 0; c < ng; ++c) {
        Vec acc = zero_vec(ng);
        for (long e = 0; e < nm; ++e)
            acc = acc + ds.incl[m.iota[e]].apply(r.apply_w(comp[c][e]));
        wm.set_col(c, g.reduce(acc));
    }
    out.w = GroupHom(g, g, wm);
    if (!out.w->well_defined())
        throw std::logic_error("monoid ring involution is not well defined");
    return out;
}

}  // namespace eqalg
