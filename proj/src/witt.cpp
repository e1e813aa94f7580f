#include "eqalg/witt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqalg {

namespace {
Int binom2(const Int& n) { return n * (n - 1) / 2; }
}

WittArith::WittArith(PresRing s) : s_(std::move(s)), fsq_(flip_square(s_)) {}

WittElem WittArith::reduce(WittElem x) const {
    x.a = s_.carrier.reduce(x.a);
    x.c = coinv().reduce(x.c);
    return x;
}

WittElem WittArith::zero() const {
    return {zero_vec(s_.gens()), zero_vec(coinv().gens())};
}

WittElem WittArith::one() const {
    return reduce({s_.unit, zero_vec(coinv().gens())});
}

WittElem WittArith::norm(const Vec& a) const {
    return reduce({a, zero_vec(coinv().gens())});
}

WittElem WittArith::versch(const Vec& c) const {
    return reduce({zero_vec(s_.gens()), c});
}

Vec WittArith::to_coinv(const Vec& tensor_elt) const {
    return fsq_.ic.coinvariants.proj.apply(tensor_elt);
}

Vec WittArith::lift_coinv(const Vec& c) const {
    return fsq_.ring.carrier.reduce(fsq_.ic.coinvariants.section * c);
}

WittElem WittArith::add(const WittElem& x, const WittElem& y) const {
    Vec cross = to_coinv(fsq_.tens.tensor(x.a, y.a));
    return reduce({x.a + y.a, x.c + y.c - cross});
}

WittElem WittArith::neg(const WittElem& x) const {
    Vec sq = to_coinv(fsq_.tens.tensor(x.a, x.a));
    return reduce({Int(-1) * x.a, Int(-1) * x.c - sq});
}

WittElem WittArith::scale(const Int& n, const WittElem& x) const {
    // n(a,c) = (na, nc - C(n,2) [a (x) a])
    Vec sq = to_coinv(fsq_.tens.tensor(x.a, x.a));
    return reduce({n * x.a, n * x.c - binom2(n) * sq});
}

WittElem WittArith::mul(const WittElem& x, const WittElem& y) const {
    Vec cx = lift_coinv(x.c), cy = lift_coinv(y.c);
    Vec axa = fsq_.tens.tensor(x.a, x.a), aya = fsq_.tens.tensor(y.a, y.a);
    Vec t = fsq_.ring.multiply(axa, cy);
    t = t + fsq_.ring.multiply(cx, aya);
    t = t + fsq_.ring.multiply(cx, cy);
    t = t + fsq_.ring.multiply(cx, fsq_.flip.apply(cy));
    Vec prod_a = s_.multiply(x.a, y.a);
    return reduce({prod_a, to_coinv(t)});
}

bool WittArith::same(const WittElem& x, const WittElem& y) const {
    return s_.carrier.same_element(x.a, y.a) && coinv().same_element(x.c, y.c);
}

bool WittArith::is_zero_elem(const WittElem& x) const {
    return is_zero(s_.carrier.reduce(x.a)) && is_zero(coinv().reduce(x.c));
}

Vec WittArith::ghost1(const WittElem& x) const {
    Vec c = lift_coinv(x.c);
    Vec out = fsq_.tens.tensor(x.a, x.a) + c + fsq_.flip.apply(c);
    return fsq_.ring.carrier.reduce(out);
}

WittElem WittGreen::eval_raw(const Vec& raw) const {
    WittElem acc = arith.zero();
    for (long k = 0; k < n_s; ++k)
        if (raw[k] != 0)
            acc = arith.add(acc, arith.scale(raw[k], arith.norm(unit_vec(n_s, k))));
    Vec v = zero_vec(n_c);
    for (long j = 0; j < n_c; ++j) v[j] = raw[n_s + j];
    return arith.add(acc, arith.versch(v));
}

Vec WittGreen::elem_to_fix(const WittElem& x) const {
    Vec a = arith.base().carrier.reduce(x.a);
    Vec raw = zero_vec(n_s + n_c);
    for (long k = 0; k < n_s; ++k) raw[k] = a[k];
    WittElem base_val = eval_raw(raw);
    Vec missing = arith.coinv().reduce(x.c - base_val.c);
    for (long j = 0; j < n_c; ++j) raw[n_s + j] = missing[j];
    return pres.project(raw);
}

WittElem WittGreen::fix_to_elem(const Vec& v) const {
    return eval_raw(pres.lift(v));
}

namespace {

// Invariant factors of a finite abelian group given by an enumeration and a
// predicate "is n*x zero", independent of any presentation machinery.
std::vector<Int> factors_by_counting(
    const Int& order, const std::function<bool(const Int&, long)>& killed,
    long count) {
    std::vector<Int> primes;
    Int rem = order;
    for (Int p = 2; p * p <= rem; ++p)
        if (rem % p == 0) {
            primes.push_back(p);
            while (rem % p == 0) rem /= p;
        }
    if (rem > 1) primes.push_back(rem);

    // For each prime, the number of cyclic factors with exponent >= j is
    // log_p |ker p^j| - log_p |ker p^{j-1}|.
    std::vector<std::vector<Int>> ppowers;  // per prime, descending p-parts
    for (const Int& p : primes) {
        std::vector<long> logk = {0};
        Int pj = 1;
        while (true) {
            pj *= p;
            long cnt = 0;
            for (long i = 0; i < count; ++i)
                if (killed(pj, i)) ++cnt;
            long lg = 0;
            Int c = cnt;
            while (c > 1) { c /= p; ++lg; }
            logk.push_back(lg);
            if (logk.back() == logk[logk.size() - 2]) break;  // kernel stabilized
        }
        std::vector<long> atleast;  // atleast[j] = #factors with exponent >= j+1
        for (size_t j = 1; j < logk.size(); ++j) atleast.push_back(logk[j] - logk[j - 1]);
        atleast.push_back(0);
        std::vector<Int> parts;
        Int pw = 1;
        for (size_t j = 0; j + 1 < atleast.size(); ++j) {
            pw *= p;
            for (long r = 0; r < atleast[j] - atleast[j + 1]; ++r) parts.push_back(pw);
        }
        std::sort(parts.rbegin(), parts.rend());
        ppowers.push_back(parts);
    }
    size_t chain = 0;
    for (const auto& ps : ppowers) chain = std::max(chain, ps.size());
    std::vector<Int> inv(chain, Int(1));
    for (const auto& ps : ppowers)
        for (size_t i = 0; i < ps.size(); ++i) inv[i] *= ps[i];  // largest first
    std::sort(inv.begin(), inv.end());
    inv.erase(std::remove(inv.begin(), inv.end(), Int(1)), inv.end());
    return inv;
}

}  // namespace

WittGreen witt_green(const PresRing& s, bool finite_decomposition) {
    WittGreen wg{GreenZ2{}, WittArith(s), Presentation{}, 0, 0, std::nullopt};
    const WittArith& ar = wg.arith;
    const FlipSquare& fsq = ar.square();
    const FgAbGroup& c_group = ar.coinv();
    const FgAbGroup& e_group = fsq.ring.carrier;
    wg.n_s = s.gens();
    wg.n_c = c_group.gens();

    // Presentation of the fixed level on norm generators N_k (one per
    // generator of S, k < n_s) and Verschiebung generators V_j (one per
    // generator of the coinvariants): a relation d N(g) + C(d,2) V([g (x) g])
    // for each invariant factor d of S, and o V(u) for each invariant factor
    // o of the coinvariants.
    std::vector<Vec> rels;
    for (long k = 0; k < s.carrier.torsion_count(); ++k) {
        Int d = s.carrier.gen_order(k);
        Vec col = zero_vec(wg.n_s + wg.n_c);
        col[k] = d;
        Vec sq = ar.to_coinv(fsq.tens.gen_tensor(k, k));
        for (long j = 0; j < wg.n_c; ++j) col[wg.n_s + j] = binom2(d) * sq[j];
        rels.push_back(col);
    }
    for (long j = 0; j < c_group.torsion_count(); ++j) {
        Vec col = zero_vec(wg.n_s + wg.n_c);
        col[wg.n_s + j] = c_group.gen_order(j);
        rels.push_back(col);
    }
    wg.pres = canonicalize(wg.n_s + wg.n_c, from_cols(wg.n_s + wg.n_c, rels));

    MackeyZ2& m = wg.green.mackey;
    m.level_e = e_group;
    m.level_fix = wg.pres.group;
    m.w = fsq.flip;

    // res = first ghost map w1, additive on the N/V generators
    const long nf = m.level_fix.gens();
    std::vector<Vec> res_cols;
    for (long c = 0; c < nf; ++c)
        res_cols.push_back(ar.ghost1(wg.fix_to_elem(unit_vec(nf, c))));
    m.res = hom_from_cols(m.level_fix, e_group, res_cols);

    // tran = Verschiebung of the class of a tensor generator
    std::vector<Vec> tran_cols;
    for (long c = 0; c < e_group.gens(); ++c) {
        Vec raw = zero_vec(wg.n_s + wg.n_c);
        Vec cls = ar.to_coinv(unit_vec(e_group.gens(), c));
        for (long j = 0; j < wg.n_c; ++j) raw[wg.n_s + j] = cls[j];
        tran_cols.push_back(wg.pres.project(raw));
    }
    m.tran = hom_from_cols(e_group, m.level_fix, tran_cols);

    wg.green.ring_e = fsq.ring;

    // fixed-level ring structure computed through element arithmetic
    PresRing& rf = wg.green.ring_fix;
    rf.carrier = m.level_fix;
    rf.mul.assign(nf, std::vector<Vec>(nf));
    for (long i = 0; i < nf; ++i) {
        WittElem xi = wg.fix_to_elem(unit_vec(nf, i));
        for (long j = 0; j < nf; ++j) {
            WittElem xj = wg.fix_to_elem(unit_vec(nf, j));
            rf.mul[i][j] = wg.elem_to_fix(ar.mul(xi, xj));
        }
    }
    rf.unit = wg.elem_to_fix(ar.one());

    if (finite_decomposition) {
        if (!s.carrier.is_finite() || !c_group.is_finite())
            throw std::invalid_argument("decomposition requires a finite ring");
        std::vector<WittElem> elems;
        for (const Vec& a : s.carrier.elements())
            for (const Vec& c : c_group.elements()) elems.push_back({a, c});
        Int order = Int(static_cast<long>(elems.size()));
        auto killed = [&](const Int& nn, long idx) {
            return ar.is_zero_elem(ar.scale(nn, elems[idx]));
        };
        wg.decomposition =
            factors_by_counting(order, killed, static_cast<long>(elems.size()));
    }
    return wg;
}

}  // namespace eqalg
