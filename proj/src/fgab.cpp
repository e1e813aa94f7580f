#include "eqalg/fgab.hpp"
#include "eqalg/smith.hpp"

#include <sstream>

namespace eqalg {

FgAbGroup::FgAbGroup(std::vector<Int> torsion, long free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
    if (free_rank_ < 0) throw std::invalid_argument("negative free rank");
    for (size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw std::invalid_argument("invariant factor < 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    if (n == 0) return free(1);
    if (n == 1 || n == -1) return trivial();
    return FgAbGroup({abs(n)}, 0);
}

Int FgAbGroup::order() const {
    if (free_rank_ > 0) return 0;
    Int o = 1;
    for (const auto& d : torsion_) o *= d;
    return o;
}

Vec FgAbGroup::reduce(const Vec& v) const {
    if (static_cast<long>(v.size()) != gens()) throw std::invalid_argument("coordinate length mismatch");
    Vec r = v;
    for (long i = 0; i < torsion_count(); ++i) {
        mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), torsion_[i].get_mpz_t());
    }
    return r;
}

bool FgAbGroup::same_element(const Vec& a, const Vec& b) const {
    return reduce(a) == reduce(b);
}

std::vector<Vec> FgAbGroup::elements() const {
    if (!is_finite()) throw std::logic_error("cannot enumerate an infinite group");
    std::vector<Vec> out;
    Vec cur(gens(), Int(0));
    for (;;) {
        out.push_back(cur);
        long i = 0;
        for (; i < torsion_count(); ++i) {
            cur[i] += 1;
            if (cur[i] < torsion_[i]) break;
            cur[i] = 0;
        }
        if (i == torsion_count()) break;
    }
    return out;
}

std::string FgAbGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion_) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank_ == 1) os << (first ? "Z" : " + Z");
    else if (free_rank_ > 1) os << (first ? "" : " + ") << "Z^" << free_rank_;
    return os.str();
}

GroupHom GroupHom::mul_by(const FgAbGroup& g, const Int& n) {
    IntMat m(g.gens(), g.gens());
    for (long i = 0; i < g.gens(); ++i) m.at(i, i) = n;
    return {g, g, m};
}

bool GroupHom::well_defined() const {
    if (m.rows() != dst.gens() || m.cols() != src.gens()) return false;
    for (long i = 0; i < src.torsion_count(); ++i) {
        Vec v = src.gen_order(i) * m.col(i);
        if (!is_zero(dst.reduce(v))) return false;
    }
    return true;
}

bool GroupHom::is_zero_map() const {
    for (long j = 0; j < m.cols(); ++j)
        if (!is_zero(dst.reduce(m.col(j)))) return false;
    return true;
}

bool GroupHom::same_map(const GroupHom& o) const {
    if (!(src == o.src) || !(dst == o.dst)) return false;
    for (long j = 0; j < m.cols(); ++j)
        if (!dst.same_element(m.col(j), o.m.col(j))) return false;
    return true;
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
    IntMat prod = m * inner.m;
    for (long j = 0; j < prod.cols(); ++j) prod.set_col(j, dst.reduce(prod.col(j)));
    return {inner.src, dst, prod};
}

GroupHom GroupHom::operator+(const GroupHom& o) const { return {src, dst, m + o.m}; }
GroupHom GroupHom::operator-(const GroupHom& o) const { return {src, dst, m - o.m}; }

Presentation canonicalize(long generator_count, const IntMat& relations) {
    if (relations.cols() > 0 && relations.rows() != generator_count)
        throw std::invalid_argument("relation vectors must have one entry per generator");
    if (relations.cols() == 0) {
        Presentation p;
        p.group = FgAbGroup::free(generator_count);
        p.to_canon = IntMat::identity(generator_count);
        p.from_canon = IntMat::identity(generator_count);
        return p;
    }
    SmithResult s = smith(relations);
    std::vector<long> torsion_idx, free_idx;
    std::vector<Int> torsion;
    for (long j = 0; j < generator_count; ++j) {
        Int d = s.diag(j);
        if (d == 1) continue;
        if (d == 0) free_idx.push_back(j);
        else {
            torsion_idx.push_back(j);
            torsion.push_back(d);
        }
    }
    std::vector<long> kept = torsion_idx;
    kept.insert(kept.end(), free_idx.begin(), free_idx.end());

    Presentation p;
    p.group = FgAbGroup(torsion, static_cast<long>(free_idx.size()));
    p.to_canon = IntMat(static_cast<long>(kept.size()), generator_count);
    p.from_canon = IntMat(generator_count, static_cast<long>(kept.size()));
    for (long k = 0; k < static_cast<long>(kept.size()); ++k) {
        for (long c = 0; c < generator_count; ++c) p.to_canon.at(k, c) = s.u.at(kept[k], c);
        for (long r = 0; r < generator_count; ++r) p.from_canon.at(r, k) = s.uinv.at(r, kept[k]);
    }
    return p;
}

namespace {

IntMat torsion_cols(const FgAbGroup& g) {
    IntMat t(g.gens(), g.torsion_count());
    for (long i = 0; i < g.torsion_count(); ++i) t.at(i, i) = g.gen_order(i);
    return t;
}

}  // namespace

Presentation quotient(const FgAbGroup& g, const IntMat& extra_relations) {
    return canonicalize(g.gens(), torsion_cols(g).hcat(extra_relations));
}

std::optional<Vec> Subgroup::corestrict(const Vec& ambient_elt) const {
    IntMat sys = gens_in_ambient.hcat(torsion_cols(incl.dst));
    Vec sol;
    if (!solve_exact(sys, ambient_elt, sol)) return std::nullopt;
    Vec z(sol.begin(), sol.begin() + gens_in_ambient.cols());
    return pres.project(z);
}

Subgroup kernel(const GroupHom& h) {
    if (!h.well_defined()) throw std::invalid_argument("kernel of an ill-defined homomorphism");
    IntMat sys = h.m.hcat(torsion_cols(h.dst));
    IntMat lat = kernel_lattice(sys);
    long s = h.src.gens();
    IntMat x(s, lat.cols());
    for (long i = 0; i < s; ++i)
        for (long j = 0; j < lat.cols(); ++j) x.at(i, j) = lat.at(i, j);

    IntMat relsys = x.hcat(torsion_cols(h.src));
    IntMat rel_lat = kernel_lattice(relsys);
    IntMat rels(x.cols(), rel_lat.cols());
    for (long i = 0; i < x.cols(); ++i)
        for (long j = 0; j < rel_lat.cols(); ++j) rels.at(i, j) = rel_lat.at(i, j);

    Subgroup k;
    k.pres = canonicalize(x.cols(), rels);
    k.group = k.pres.group;
    k.gens_in_ambient = x;
    IntMat incl = x * k.pres.from_canon;
    for (long j = 0; j < incl.cols(); ++j) incl.set_col(j, h.src.reduce(incl.col(j)));
    k.incl = GroupHom(k.group, h.src, incl);
    return k;
}

Cokernel cokernel(const GroupHom& h) {
    if (!h.well_defined()) throw std::invalid_argument("cokernel of an ill-defined homomorphism");
    Presentation p = canonicalize(h.dst.gens(), torsion_cols(h.dst).hcat(h.m));
    Cokernel c;
    c.group = p.group;
    c.proj = GroupHom(h.dst, p.group, p.to_canon);
    c.section = p.from_canon;
    return c;
}

std::optional<Vec> solve_in_group(const GroupHom& h, const Vec& b) {
    IntMat sys = h.m.hcat(torsion_cols(h.dst));
    Vec sol;
    if (!solve_exact(sys, b, sol)) return std::nullopt;
    Vec x(sol.begin(), sol.begin() + h.src.gens());
    return h.src.reduce(x);
}

Vec TensorProduct::tensor_pair_coords(const Vec& x, const Vec& y) const {
    Vec out(na * nb, Int(0));
    for (long i = 0; i < na; ++i) {
        if (x[i] == 0) continue;
        for (long j = 0; j < nb; ++j)
            if (y[j] != 0) out[pair_index(i, j)] += x[i] * y[j];
    }
    return out;
}

Vec TensorProduct::tensor(const Vec& x, const Vec& y) const {
    return pres.project(tensor_pair_coords(x, y));
}

TensorProduct tensor(const FgAbGroup& a, const FgAbGroup& b) {
    TensorProduct t;
    t.na = a.gens();
    t.nb = b.gens();
    std::vector<Vec> rels;
    for (long i = 0; i < t.na; ++i)
        for (long j = 0; j < t.nb; ++j) {
            long idx = i * t.nb + j;
            if (a.gen_order(i) != 0) {
                Vec r = zero_vec(t.na * t.nb);
                r[idx] = a.gen_order(i);
                rels.push_back(r);
            }
            if (b.gen_order(j) != 0) {
                Vec r = zero_vec(t.na * t.nb);
                r[idx] = b.gen_order(j);
                rels.push_back(r);
            }
        }
    t.pres = canonicalize(t.na * t.nb, from_cols(t.na * t.nb, rels));
    t.group = t.pres.group;
    return t;
}

FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b) {
    // Tor1 via the two-term free resolution of a: the torsion relations give
    // multiplication maps on b whose kernels assemble the answer.
    std::vector<FgAbGroup> parts;
    for (long i = 0; i < a.torsion_count(); ++i)
        parts.push_back(kernel(GroupHom::mul_by(b, a.gen_order(i))).group);
    return direct_sum(parts).group;
}

InvariantsCoinvariants invariants_and_coinvariants(const FgAbGroup& a, const GroupHom& t) {
    if (!t.well_defined() || !(t.src == a) || !(t.dst == a))
        throw std::invalid_argument("involution must be a well-defined endomorphism");
    if (!t.compose(t).same_map(GroupHom::id(a)))
        throw std::invalid_argument("map is not an involution");
    GroupHom diff = t - GroupHom::id(a);
    InvariantsCoinvariants r;
    r.invariants = kernel(diff);
    r.coinvariants = cokernel(diff);
    IntMat norm(r.invariants.group.gens(), r.coinvariants.group.gens());
    for (long j = 0; j < r.coinvariants.group.gens(); ++j) {
        Vec lift = r.coinvariants.section.col(j);
        Vec n = lift + t.apply(lift);
        auto co = r.invariants.corestrict(a.reduce(n));
        if (!co) throw std::logic_error("additive norm image not in invariants");
        norm.set_col(j, *co);
    }
    r.norm = GroupHom(r.coinvariants.group, r.invariants.group, norm);
    return r;
}

DirectSum direct_sum(const std::vector<FgAbGroup>& parts) {
    long total = 0;
    for (const auto& g : parts) total += g.gens();
    std::vector<Vec> rels;
    long off = 0;
    for (const auto& g : parts) {
        for (long i = 0; i < g.torsion_count(); ++i) {
            Vec r = zero_vec(total);
            r[off + i] = g.gen_order(i);
            rels.push_back(r);
        }
        off += g.gens();
    }
    Presentation p = canonicalize(total, from_cols(total, rels));
    DirectSum d;
    d.group = p.group;
    off = 0;
    for (const auto& g : parts) {
        IntMat in(p.group.gens(), g.gens());
        IntMat pr(g.gens(), p.group.gens());
        for (long i = 0; i < g.gens(); ++i) {
            for (long r = 0; r < p.group.gens(); ++r) in.at(r, i) = p.to_canon.at(r, off + i);
            for (long c = 0; c < p.group.gens(); ++c) pr.at(i, c) = p.from_canon.at(off + i, c);
        }
        d.incl.emplace_back(g, p.group, in);
        d.proj.emplace_back(p.group, g, pr);
        off += g.gens();
    }
    return d;
}

}  // namespace eqalg
