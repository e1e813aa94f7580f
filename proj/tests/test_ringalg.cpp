#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqalg/ringalg.hpp"

#include <array>
#include <map>

using namespace eqalg;

namespace {

Vec vec(std::initializer_list<long> v) {
    Vec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Z as a ring on one free generator.
PresRing ring_z() {
    PresRing r;
    r.carrier = FgAbGroup::free(1);
    r.mul = {{vec({1})}};
    r.unit = vec({1});
    return r;
}

// Gaussian integers on the basis {1, i}, with conjugation.
PresRing ring_gauss() {
    PresRing r;
    r.carrier = FgAbGroup::free(2);
    r.mul = {{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({-1, 0})}};
    r.unit = vec({1, 0});
    IntMat wm = {{1, 0}, {0, -1}};
    r.w = GroupHom(r.carrier, r.carrier, wm);
    return r;
}

// 2x2 integer matrices on the basis {e11, e12, e21, e22}, with transpose.
PresRing ring_mat2() {
    PresRing r;
    r.carrier = FgAbGroup::free(4);
    auto eidx = [](long i, long j) { return 2 * i + j; };
    r.mul.assign(4, std::vector<Vec>(4, zero_vec(4)));
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k)
                for (long l = 0; l < 2; ++l)
                    if (j == k) r.mul[eidx(i, j)][eidx(k, l)][eidx(i, l)] = 1;
    r.unit = vec({1, 0, 0, 1});
    IntMat wm(4, 4);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) wm.at(eidx(j, i), eidx(i, j)) = 1;
    r.w = GroupHom(r.carrier, r.carrier, wm);
    return r;
}

PresRing ring_f(long p) {
    PresRing r;
    r.carrier = FgAbGroup::cyclic(p);
    r.mul = {{vec({1})}};
    r.unit = vec({1});
    return r;
}

FinMonoid cyclic_monoid(long k) {
    FinMonoid m;
    for (long i = 0; i < k; ++i) m.elements.push_back("g" + std::to_string(i));
    m.table.assign(k, std::vector<long>(k, 0));
    m.iota.assign(k, 0);
    for (long i = 0; i < k; ++i) {
        m.iota[i] = (k - i) % k;
        for (long j = 0; j < k; ++j) m.table[i][j] = (i + j) % k;
    }
    m.identity = 0;
    return m;
}

// Symmetric group on three letters, built from actual permutations so the
// table cannot be mistyped.
FinMonoid s3_monoid() {
    using Perm = std::array<long, 3>;
    std::vector<Perm> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                               {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto compose = [](const Perm& a, const Perm& b) {
        return Perm{a[b[0]], a[b[1]], a[b[2]]};
    };
    std::map<Perm, long> idx;
    for (long i = 0; i < 6; ++i) idx[perms[i]] = i;
    FinMonoid m;
    m.elements = {"e", "r", "r2", "s", "sr", "sr2"};
    m.table.assign(6, std::vector<long>(6, 0));
    m.iota.assign(6, 0);
    for (long i = 0; i < 6; ++i) {
        Perm inv;
        for (long t = 0; t < 3; ++t) inv[perms[i][t]] = t;
        m.iota[i] = idx[inv];
        for (long j = 0; j < 6; ++j) m.table[i][j] = idx[compose(perms[i], perms[j])];
    }
    m.identity = 0;
    return m;
}

}  // namespace

TEST_CASE("gaussian integers: valid ring with anti-involution") {
    PresRing r = ring_gauss();
    CHECK(validate_ring(r).empty());
    CHECK(r.is_commutative());

    // product oracle: (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d) {
                    Vec p = r.multiply(vec({a, b}), vec({c, d}));
                    CHECK(p == vec({a * c - b * d, a * d + b * c}));
                }
}

TEST_CASE("broken product table is reported") {
    PresRing r = ring_gauss();
    // i*i = -1 + i is still associative (it presents Z[x]/(x^2-x+1)) but
    // conjugation is no longer an anti-involution for it.
    r.mul[1][1] = vec({-1, 1});
    Report rep = validate_ring(r);
    bool found = false;
    for (const auto& v : rep) found = found || v.law == "anti-involution";
    CHECK(found);

    PresRing u = ring_gauss();
    u.unit = vec({0, 1});  // "unit" i fails the unit laws
    rep = validate_ring(u);
    found = false;
    for (const auto& v : rep)
        found = found || v.law == "left unit" || v.law == "right unit";
    CHECK(found);

    // genuinely non-associative: matrix units with one product redirected
    PresRing m2 = ring_mat2();
    m2.mul[1][2] = vec({0, 0, 0, 1});  // e12*e21 = e22 instead of e11
    rep = validate_ring(m2);
    found = false;
    for (const auto& v : rep) found = found || v.law == "associativity";
    CHECK(found);
}

TEST_CASE("torsion carrier: product must respect generator orders") {
    PresRing r = ring_f(4);
    CHECK(validate_ring(r).empty());
    r.mul[0][0] = vec({1});
    r.carrier = FgAbGroup::cyclic(4);
    // sabotage: pretend g*g has infinite order content 4*g != 0 in Z/8... use
    // a product landing outside: on Z/2 let g*g = g but scale by injecting a
    // non-well-defined table into Z/2 x Z.
    PresRing bad;
    bad.carrier = FgAbGroup({2}, 1);  // Z/2 + Z
    bad.mul.assign(2, std::vector<Vec>(2, zero_vec(2)));
    bad.mul[0][0] = vec({0, 1});  // torsion gen squares to a free element
    bad.mul[0][1] = vec({1, 0});
    bad.mul[1][0] = vec({1, 0});
    bad.mul[1][1] = vec({0, 1});
    bad.unit = vec({0, 1});
    Report rep = validate_ring(bad);
    bool found = false;
    for (const auto& v : rep) found = found || v.law == "well-defined";
    CHECK(found);
}

TEST_CASE("matrix ring: noncommutative, transpose anti-involution, abelianization Z") {
    PresRing r = ring_mat2();
    CHECK(validate_ring(r).empty());
    CHECK(!r.is_commutative());

    CommutatorQuotient cq = commutator_quotient(r);
    CHECK(cq.group == FgAbGroup::free(1));
    // e11 and e22 agree in the quotient; e12 and e21 die.
    CHECK(cq.group.same_element(cq.proj.apply(vec({1, 0, 0, 0})),
                                cq.proj.apply(vec({0, 0, 0, 1}))));
    CHECK(is_zero(cq.proj.apply(vec({0, 1, 0, 0}))));
    CHECK(is_zero(cq.proj.apply(vec({0, 0, 1, 0}))));
    REQUIRE(cq.involution.has_value());
    CHECK(cq.involution->same_map(GroupHom::id(cq.group)));
}

TEST_CASE("monoid validation: s3 and cyclic groups pass, broken tables fail") {
    FinMonoid s3 = s3_monoid();
    CHECK(validate_monoid(s3).empty());
    CHECK(s3.is_group());
    CHECK(validate_monoid(cyclic_monoid(5)).empty());

    FinMonoid bad = cyclic_monoid(3);
    bad.table[1][2] = 1;
    CHECK(!validate_monoid(bad).empty());

    FinMonoid bad_iota = s3_monoid();
    bad_iota.iota[1] = 1;  // r is not its own inverse
    Report rep = validate_monoid(bad_iota);
    CHECK(!rep.empty());
}

TEST_CASE("group ring of s3 over Z: valid, abelianization is Z^3") {
    PresRing zs3 = monoid_ring(ring_z(), s3_monoid());
    CHECK(validate_ring(zs3).empty());
    CHECK(!zs3.is_commutative());

    // rank of the abelianization = number of conjugacy classes
    CommutatorQuotient cq = commutator_quotient(zs3);
    CHECK(cq.group == FgAbGroup::free(3));
    REQUIRE(cq.involution.has_value());
    // inversion fixes every conjugacy class of s3
    CHECK(cq.involution->same_map(GroupHom::id(cq.group)));
}

TEST_CASE("iterated monoid rings match the product monoid ring") {
    FinMonoid m = cyclic_monoid(2), n = cyclic_monoid(3);
    PresRing a = monoid_ring(ring_z(), m);
    PresRing b = monoid_ring(a, n);
    PresRing c = monoid_ring(ring_z(), monoid_product(m, n));
    CHECK(validate_ring(b).empty());
    CHECK(validate_ring(c).empty());
    REQUIRE(b.carrier == c.carrier);

    // generator (f*|M| + e) of b corresponds to generator (e*|N| + f) of c
    const long nm = m.size(), nn = n.size();
    auto phi_idx = [&](long bi) {
        long f = bi / nm, e = bi % nm;
        return e * nn + f;
    };
    IntMat phim(c.gens(), b.gens());
    for (long i = 0; i < b.gens(); ++i) phim.at(phi_idx(i), i) = 1;
    GroupHom phi(b.carrier, c.carrier, phim);
    CHECK(c.carrier.same_element(phi.apply(b.unit), c.unit));
    for (long i = 0; i < b.gens(); ++i)
        for (long j = 0; j < b.gens(); ++j) {
            Vec lhs = phi.apply(b.mul[i][j]);
            Vec rhs = c.multiply(phi.apply(unit_vec(b.gens(), i)),
                                 phi.apply(unit_vec(b.gens(), j)));
            CHECK(c.carrier.same_element(lhs, rhs));
        }
    for (long i = 0; i < b.gens(); ++i)
        CHECK(c.carrier.same_element(phi.apply(b.apply_w(unit_vec(b.gens(), i))),
                                     c.apply_w(phi.apply(unit_vec(b.gens(), i)))));
}

TEST_CASE("tensor-square ring with flip") {
    SUBCASE("prime field: everything collapses to the field itself") {
        FlipSquare fs = flip_square(ring_f(2));
        CHECK(fs.ring.carrier == FgAbGroup::cyclic(2));
        CHECK(validate_ring(fs.ring).empty());
        CHECK(fs.flip.same_map(GroupHom::id(fs.ring.carrier)));
        CHECK(fs.ic.invariants.group == FgAbGroup::cyclic(2));
        CHECK(fs.ic.coinvariants.group == FgAbGroup::cyclic(2));
    }

    SUBCASE("group ring F2[C2]: orbit counting for the flip") {
        PresRing s = monoid_ring(ring_f(2), cyclic_monoid(2));
        FlipSquare fs = flip_square(s);
        CHECK(validate_ring(fs.ring).empty());
        CHECK(fs.ring.carrier == FgAbGroup({2, 2, 2, 2}, 0));
        // basis pairs (i,j): two fixed, one swapped orbit -> 3 orbits
        CHECK(fs.ic.invariants.group == FgAbGroup({2, 2, 2}, 0));
        CHECK(fs.ic.coinvariants.group == FgAbGroup({2, 2, 2}, 0));
        // norm sends the class of a swapped basis vector to the orbit sum
        Vec e01 = fs.tens.gen_tensor(0, 1);
        Vec cls = fs.ic.coinvariants.proj.apply(e01);
        Vec nrm = fs.ic.invariants.incl.apply(fs.ic.norm.apply(cls));
        Vec e10 = fs.tens.gen_tensor(1, 0);
        CHECK(fs.ring.carrier.same_element(nrm, e01 + e10));
    }

    SUBCASE("gaussian integers: flip swaps the tensor factors") {
        FlipSquare fs = flip_square(ring_gauss());
        CHECK(validate_ring(fs.ring).empty());
        Vec lhs = fs.flip.apply(fs.tens.gen_tensor(0, 1));
        Vec rhs = fs.tens.gen_tensor(1, 0);
        CHECK(fs.ring.carrier.same_element(lhs, rhs));
        CHECK(fs.flip.compose(fs.flip).same_map(GroupHom::id(fs.ring.carrier)));
    }

    SUBCASE("noncommutative base: flip is an automorphism, not stored as w") {
        FlipSquare fs = flip_square(ring_mat2());
        CHECK(!fs.ring.has_involution());
        CHECK(validate_ring(fs.ring).empty());
        const long m = fs.ring.gens();
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
                Vec lhs = fs.flip.apply(fs.ring.mul[i][j]);
                Vec rhs = fs.ring.multiply(fs.flip.apply(unit_vec(m, i)),
                                           fs.flip.apply(unit_vec(m, j)));
                CHECK(fs.ring.carrier.same_element(lhs, rhs));
            }
    }
}
