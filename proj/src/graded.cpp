#include "eqalg/graded.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace eqalg {

namespace {

// Dimension over F_2 of an elementary abelian 2-group; throws otherwise.
long f2_dim(const FgAbGroup& g) {
    if (g.free_rank() != 0) throw std::runtime_error("f2_dim: group not 2-torsion");
    for (const Int& d : g.torsion())
        if (d != 2) throw std::runtime_error("f2_dim: group not elementary abelian");
    return g.torsion_count();
}

FgAbGroup sum_groups(const std::vector<FgAbGroup>& parts) {
    return direct_sum(parts).group;
}

}  // namespace

GradedAbGroup graded_f2_poly(long gen_degree, long n_max) {
    GradedAbGroup g;
    g.degrees.assign(n_max + 1, FgAbGroup::trivial());
    for (long n = 0; n <= n_max; n += gen_degree) g.degrees[n] = FgAbGroup::cyclic(2);
    return g;
}

FgAbGroup tor1_by_resolution(const FgAbGroup& a, const FgAbGroup& b) {
    // 0 -> Z^k --diag(d)--> Z^k -> torsion(A) -> 0; Tor_1 = ker(d on B)
    std::vector<FgAbGroup> parts;
    for (const Int& d : a.torsion()) parts.push_back(kernel(GroupHom::mul_by(b, d)).group);
    return sum_groups(parts);
}

GradedTor graded_tor(const GradedAbGroup& a, const GradedAbGroup& b, long n_max) {
    if (a.max_degree() < n_max || b.max_degree() < n_max)
        throw std::invalid_argument("graded_tor: window too small for requested bound");
    GradedTor out;
    out.tor0.degrees.assign(n_max + 1, FgAbGroup::trivial());
    out.tor1.degrees.assign(n_max + 1, FgAbGroup::trivial());
    for (long n = 0; n <= n_max; ++n) {
        std::vector<FgAbGroup> t0, t1, t1_alt;
        for (long p = 0; p <= n; ++p) {
            t0.push_back(tensor(a.at(p), b.at(n - p)).group);
            t1.push_back(tor1(a.at(p), b.at(n - p)));
            t1_alt.push_back(tor1_by_resolution(a.at(p), b.at(n - p)));
        }
        out.tor0.degrees[n] = sum_groups(t0);
        out.tor1.degrees[n] = sum_groups(t1);
        if (!(out.tor1.degrees[n] == sum_groups(t1_alt)))
            throw std::runtime_error("graded_tor: resolutions disagree in degree " +
                                     std::to_string(n));
    }
    return out;
}

DimReport phi_thr_z_dims(long n_max) {
    GradedAbGroup a = graded_f2_poly(2, n_max);
    GradedTor t = graded_tor(a, a, n_max);
    DimReport rep;
    for (long n = 0; n <= n_max; ++n) {
        long d = f2_dim(t.tor0.at(n));
        if (n >= 1) d += f2_dim(t.tor1.at(n - 1));  // homological shift
        rep.assembled.push_back(d);
    }
    // monomials b1^i b2^j e^eps with |b| = 2, |e| = 1, eps <= 1
    for (long n = 0; n <= n_max; ++n) {
        long count = 0;
        for (long eps = 0; eps <= 1; ++eps) {
            long rest = n - eps;
            if (rest >= 0 && rest % 2 == 0) count += rest / 2 + 1;
        }
        rep.monomial.push_back(count);
    }
    rep.equal = rep.assembled == rep.monomial;
    return rep;
}

F2DimReport phi_thr_f2_dims(long n_max) {
    GradedAbGroup a = graded_f2_poly(1, n_max);
    // Kunneth over the field: the degreewise tensor is the whole answer and
    // the field-level derived terms vanish, so only tor0 is assembled.
    GradedTor t = graded_tor(a, a, n_max);
    F2DimReport rep;
    rep.equal = true;
    for (long n = 0; n <= n_max; ++n) {
        long assembled = f2_dim(t.tor0.at(n));
        // monomials w1^i w2^j with i + j = n
        long monomial = n + 1;
        rep.equal = rep.equal && assembled == monomial;
        rep.dims.push_back(assembled);
        rep.odd_p_dims.push_back(0);
    }
    return rep;
}

MonomialRing slice_ring(long p) {
    MonomialRing r;
    r.characteristic = p;
    if (p == 2) {
        r.gens = {{"a", -1, -1, false, false},
                  {"u", 0, -1, false, false},
                  {"x~", 2, 1, false, false}};
    } else {
        r.gens = {{"u", 0, 2, true, false}, {"x~", 2, 1, false, false}};
    }
    return r;
}

std::vector<long> weight_slice(const MonomialRing& r, long k, long n_max) {
    const long g = static_cast<long>(r.gens.size());
    // unboundedness: a nonzero admissible direction of bidegree (0,0)
    {
        const long probe = 6;
        std::vector<long> v(g, 0);
        std::function<bool(long)> search = [&](long i) -> bool {
            if (i == g) {
                bool nonzero = false;
                long n = 0, kk = 0;
                for (long s = 0; s < g; ++s) {
                    nonzero = nonzero || v[s] != 0;
                    n += v[s] * r.gens[s].n;
                    kk += v[s] * r.gens[s].k;
                }
                return nonzero && n == 0 && kk == 0;
            }
            long lo = r.gens[i].invertible ? -probe : 0;
            long hi = r.gens[i].square_zero ? 0 : probe;
            for (long e = lo; e <= hi; ++e) {
                v[i] = e;
                if (search(i + 1)) return true;
            }
            v[i] = 0;
            return false;
        };
        if (search(0))
            throw std::domain_error("weight_slice: unbounded slice");
    }

    const long bound = 3 * n_max + 3 * (k < 0 ? -k : k) + 20;
    std::vector<long> dims(n_max + 1, 0);
    std::vector<long> e(g, 0);
    std::function<void(long, long, long)> walk = [&](long i, long n, long kk) {
        if (i == g) {
            if (kk == k && n >= 0 && n <= n_max) ++dims[n];
            return;
        }
        long lo = r.gens[i].invertible ? -bound : 0;
        long hi = r.gens[i].square_zero ? 1 : bound;
        for (long ex = lo; ex <= hi; ++ex)
            walk(i + 1, n + ex * r.gens[i].n, kk + ex * r.gens[i].k);
    };
    walk(0, 0, 0);
    return dims;
}

FgAbGroup thh_z(long n) {
    if (n < 0) throw std::invalid_argument("thh_z: negative degree");
    if (n == 0) return FgAbGroup::free(1);
    if (n % 2 == 1) return FgAbGroup::cyclic((n + 1) / 2);
    return FgAbGroup::trivial();
}

FgAbGroup thh_z_local(long n, long p) {
    if (p < 2) throw std::invalid_argument("thh_z_local: bad prime");
    if (n == 0) return FgAbGroup::free(1);
    if (n < 0 || n % 2 == 0) return FgAbGroup::trivial();
    long k = (n + 1) / 2;
    Int pp = 1;
    while (k % p == 0) {
        pp *= p;
        k /= p;
    }
    return FgAbGroup::cyclic(pp);
}

}  // namespace eqalg
