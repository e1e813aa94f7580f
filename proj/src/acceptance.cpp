#include "eqalg/acceptance.hpp"

#include "eqalg/builtin.hpp"
#include "eqalg/graded.hpp"
#include "eqalg/thr.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace eqalg {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& msg) {
        if (!cond) {
            if (!ok) why << "; ";
            why << msg;
            ok = false;
        }
    }
};

Vec vec(std::initializer_list<long> v) {
    Vec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::string factors_str(const std::vector<Int>& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].get_str();
    return s + "]";
}

MackeyZ2 constant_mackey(const FgAbGroup& g) {
    MackeyZ2 m;
    m.level_e = m.level_fix = g;
    m.res = GroupHom::id(g);
    m.tran = GroupHom::mul_by(g, 2);
    m.w = GroupHom::id(g);
    return m;
}

MackeyZ2 dual_constant_mackey(const FgAbGroup& g) {
    MackeyZ2 m;
    m.level_e = m.level_fix = g;
    m.res = GroupHom::mul_by(g, 2);
    m.tran = GroupHom::id(g);
    m.w = GroupHom::id(g);
    return m;
}

MackeyZ2 induced_mackey(const FgAbGroup& g) {
    DirectSum d = direct_sum({g, g});
    MackeyZ2 m;
    m.level_e = d.group;
    m.level_fix = g;
    m.res = d.incl[0].compose(GroupHom::id(g)) + d.incl[1].compose(GroupHom::id(g));
    m.tran = d.proj[0] + d.proj[1];
    m.w = d.incl[0].compose(d.proj[1]) + d.incl[1].compose(d.proj[0]);
    return m;
}

// ---- criteria -------------------------------------------------------------

void c1_witt_decompositions(Check& c) {
    auto factors = [](const std::string& ring) {
        return *witt_green(*builtin_ring(ring), true).decomposition;
    };
    auto f2 = factors("f2");
    c.expect(f2 == std::vector<Int>{4}, "f2 factors " + factors_str(f2));
    auto f3 = factors("f3");
    c.expect(f3 == std::vector<Int>{3, 3}, "f3 factors " + factors_str(f3));
    auto f5 = factors("f5");
    c.expect(f5 == std::vector<Int>{5, 5}, "f5 factors " + factors_str(f5));
}

void c2_ghost_kernel(Check& c) {
    WittArith arz{*builtin_ring("z")};
    for (long m = -10; m <= 10; ++m) {
        WittElem x{vec({2 * m}), vec({-2 * m * m})};
        c.expect(is_zero(arz.ghost1(x)), "i(m) not in the kernel at m=" + std::to_string(m));
    }
    // within the window the kernel is exactly the image of i
    for (long a = -10; a <= 10; ++a)
        for (long cc = -60; cc <= 60; ++cc) {
            bool in_ker = is_zero(arz.ghost1(WittElem{vec({a}), vec({cc})}));
            bool shape = a % 2 == 0 && 2 * cc == -a * a;
            c.expect(in_ker == shape, "kernel window mismatch at a=" + std::to_string(a));
        }
    WittArith ar2{*builtin_ring("f2")};
    c.expect(is_zero(ar2.ghost1(WittElem{vec({0}), vec({1})})), "j(1) not in kernel mod 2");
    c.expect(!is_zero(ar2.ghost1(WittElem{vec({1}), vec({0})})), "(1,0) in kernel mod 2");
    c.expect(!is_zero(ar2.ghost1(WittElem{vec({1}), vec({1})})), "(1,1) in kernel mod 2");
    for (long m = -10; m <= 10; ++m) {
        bool zero = is_zero(ar2.base().carrier.reduce(vec({2 * m}))) &&
                    is_zero(ar2.coinv().reduce(vec({-2 * m * m})));
        c.expect(zero, "induced kernel map nonzero at m=" + std::to_string(m));
    }
}

void c3_verschiebung_sequence(Check& c) {
    for (const char* name : {"f2", "f3", "z4"}) {
        WittArith ar{*builtin_ring(name)};
        for (const Vec& a : ar.base().carrier.elements())
            for (const Vec& cc : ar.coinv().elements()) {
                bool in_ker = is_zero(ar.ghost0(WittElem{a, cc}));
                bool in_im = is_zero(ar.base().carrier.reduce(a));
                c.expect(in_ker == in_im, std::string("image/kernel mismatch over ") + name);
            }
        for (const Vec& cc : ar.coinv().elements())
            if (!is_zero(cc))
                c.expect(!ar.is_zero_elem(ar.versch(cc)),
                         std::string("V not injective over ") + name);
    }
    WittArith arz{*builtin_ring("z")};
    for (long cc = -1000; cc <= 1000; ++cc) {
        WittElem v = arz.versch(vec({cc}));
        c.expect(is_zero(arz.ghost0(v)), "V image escapes ker w0 over Z");
        if (cc != 0) c.expect(!arz.is_zero_elem(v), "V not injective over Z");
    }
}

void c4_prime_fields(Check& c) {
    for (const char* name : {"f2", "f3", "f5"}) {
        Pi0Report rep = thr_pi0(*builtin_base(name));
        c.expect(rep.result.level_e == rep.result.level_fix &&
                     rep.result.level_e.torsion_count() == 1 &&
                     is_bijective(rep.result.res),
                 std::string("wrong shape for ") + name);
    }
}

void c5_integers(Check& c) {
    Pi0Report rep = thr_pi0(*builtin_base("z"));
    c.expect(rep.result.level_fix == FgAbGroup::free(1), "fixed level not free of rank 1");
    c.expect(kernel(rep.result.tran).group.is_trivial(), "transfer not injective");
}

void c6_order_two_group_ring(Check& c) {
    GroupRingPi0 g = thr_group_ring(*builtin_group("c2"), *builtin_base("z"));
    MackeyZ2 t;
    t.level_e = FgAbGroup::free(2);
    t.level_fix = FgAbGroup({2, 2}, 2);
    t.w = GroupHom::id(t.level_e);
    t.tran = GroupHom(t.level_e, t.level_fix, IntMat{{0, 0}, {0, 0}, {2, 0}, {0, 2}});
    t.res = GroupHom(t.level_fix, t.level_e, IntMat{{0, 0, 1, 0}, {0, 0, 0, 1}});
    c.expect(validate_mackey(t).empty(), "reference functor invalid");
    c.expect(mackey_isomorphic(g.result, t), "integral answer not isomorphic to target");

    GroupRingPi0 gb = thr_group_ring(*builtin_group("c2"), *builtin_base("burnside"));
    c.expect(gb.result.level_e == FgAbGroup::free(2) &&
                 gb.result.level_fix == FgAbGroup::free(6),
             "burnside-base answer has wrong shape");
    c.expect(mackey_isomorphic(gb.result, dihedral_pi0(*builtin_group("c2")).mackey),
             "burnside-base answer not the dihedral class functor");
}

void c7_laurent(Check& c) {
    MackeyZ2 m = laurent_thr_pi0(5);
    c.expect(m.level_fix == FgAbGroup::free(6), "window 5 fixed level not Z^6");
    for (long n = 1; n <= 5; ++n) {
        c.expect(m.tran.apply(unit_vec(11, 5 + n)) == unit_vec(6, n - 1) &&
                     m.tran.apply(unit_vec(11, 5 - n)) == unit_vec(6, n - 1),
                 "tran(t^{+-n}) wrong at n=" + std::to_string(n));
    }
    c.expect(m.tran.apply(unit_vec(11, 5)) == Int(2) * unit_vec(6, 5), "tran(1) != 2u");
    MackeyZ2 big = laurent_thr_pi0(8);
    c.expect(big.level_fix == FgAbGroup::free(9), "window 8 fixed level not Z^9");
    for (long k = -5; k <= 5; ++k) {
        Vec tb = big.tran.apply(unit_vec(17, 8 + k));
        Vec ts = m.tran.apply(unit_vec(11, 5 + k));
        Vec embedded = zero_vec(9);
        for (long i = 0; i < 5; ++i) embedded[i] = ts[i];
        embedded[8] = ts[5];
        c.expect(tb == embedded, "window instability in tran at k=" + std::to_string(k));
    }
    for (long i = 0; i < 5; ++i) {
        Vec rb = big.res.apply(unit_vec(9, i));
        Vec rs = m.res.apply(unit_vec(6, i));
        for (long k = -5; k <= 5; ++k)
            c.expect(rb[8 + k] == rs[5 + k], "window instability in res");
    }
}

void c8_group_ring_oracle(Check& c) {
    HermitianMackey base = *builtin_base("z");
    for (const std::string& name : builtin_group_names_order_le8()) {
        try {
            GroupRingPi0 g = thr_group_ring(*builtin_group(name), base);
            c.expect(g.integral_base, name + ": base not recognized as integral");
            c.expect(validate_mackey(g.result).empty(), name + ": invalid output");
        } catch (const std::exception& e) {
            c.expect(false, name + ": " + e.what());
        }
    }
}

void c9_box_algebra(Check& c, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::function<MackeyZ2(long)>> makers = {
        [](long n) { return constant_mackey(FgAbGroup::cyclic(n)); },
        [](long n) { return dual_constant_mackey(FgAbGroup::cyclic(n)); },
        [](long n) { return induced_mackey(FgAbGroup::cyclic(n)); },
    };
    std::vector<MackeyZ2> pool;
    while (pool.size() < 10) {
        long kind = static_cast<long>(rng() % makers.size());
        long n = 2 + static_cast<long>(rng() % 3);  // cyclic of order 2..4
        MackeyZ2 m = makers[kind](n);
        if (rng() % 2) {
            long kind2 = static_cast<long>(rng() % makers.size());
            long n2 = 2 + static_cast<long>(rng() % 2);
            MackeyZ2 m2 = makers[kind2](n2);
            if (m.level_e.order() * m2.level_e.order() <= 16 &&
                m.level_fix.order() * m2.level_fix.order() <= 16)
                m = mackey_direct_sum({m, m2});
        }
        pool.push_back(m);
    }
    MackeyZ2 b = burnside().green.mackey;
    for (size_t i = 0; i < pool.size(); ++i) {
        c.expect(mackey_isomorphic(box(b, pool[i]).mackey, pool[i]),
                 "left unit fails on functor " + std::to_string(i));
        c.expect(mackey_isomorphic(box(pool[i], b).mackey, pool[i]),
                 "right unit fails on functor " + std::to_string(i));
        const MackeyZ2& other = pool[(i + 1) % pool.size()];
        c.expect(mackey_isomorphic(box(pool[i], other).mackey, box(other, pool[i]).mackey),
                 "symmetry fails on pair " + std::to_string(i));
    }
}

void c10_phi_z(Check& c) {
    DimReport rep = phi_thr_z_dims(20);
    c.expect(rep.equal, "assembled dimensions differ from monomial count");
    for (long n = 0; n <= 20; ++n)
        c.expect(rep.assembled[n] == n / 2 + 1, "dimension wrong at n=" + std::to_string(n));
}

void c11_phi_f2(Check& c) {
    F2DimReport rep = phi_thr_f2_dims(20);
    c.expect(rep.equal, "tensor dimensions differ from monomial count");
    for (long n = 0; n <= 20; ++n) {
        c.expect(rep.dims[n] == n + 1, "mod-2 dimension wrong at n=" + std::to_string(n));
        c.expect(rep.odd_p_dims[n] == 0, "odd-p dimension nonzero");
    }
}

void c12_weight_slices(Check& c) {
    std::vector<long> odd = weight_slice(slice_ring(3), 0, 20);
    for (long n = 0; n <= 20; ++n)
        c.expect(odd[n] == (n % 4 == 0 ? 1 : 0), "odd-p slice wrong at n=" + std::to_string(n));
    std::vector<long> two = weight_slice(slice_ring(2), 0, 20);
    for (long n = 0; n <= 20; ++n)
        c.expect(two[n] == n / 2 + 1, "p=2 slice wrong at n=" + std::to_string(n));
}

void c13_thh_z(Check& c) {
    for (long k = 1; k <= 50; ++k) {
        Int prod = 1;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
            FgAbGroup loc = thh_z_local(2 * k - 1, p);
            prod *= loc.is_trivial() ? Int(1) : loc.torsion()[0];
        }
        FgAbGroup full = thh_z(2 * k - 1);
        Int expected = k == 1 ? Int(1) : full.torsion()[0];
        c.expect(prod == expected, "CRT mismatch at k=" + std::to_string(k));
    }
    for (long p : {3L, 5L})
        for (long k = 1; k <= 50; ++k) {
            long kk = k;
            Int pp = 1;
            while (kk % p == 0) {
                pp *= p;
                kk /= p;
            }
            FgAbGroup loc = thh_z_local(2 * k - 1, p);
            FgAbGroup want = FgAbGroup::cyclic(pp);
            c.expect(loc == want, "p-local value wrong at k=" + std::to_string(k) +
                                      ", p=" + std::to_string(p));
        }
}

void c14_mutations(Check& c) {
    BurnsideData base = burnside();
    auto caught = [](const Report& rep, const char* law) {
        for (const auto& v : rep)
            if (v.law.find(law) != std::string::npos) return true;
        return false;
    };
    {
        GreenZ2 g = base.green;
        g.mackey.w.m.at(0, 0) = 2;
        c.expect(caught(validate_mackey(g.mackey), "involution"), "w*w=id mutation missed");
    }
    {
        GreenZ2 g = base.green;
        g.mackey.w.m.at(0, 0) = -1;
        c.expect(caught(validate_mackey(g.mackey), "equivariance"), "w res mutation missed");
    }
    {
        // a functor with nontrivial involution, transfer bent off the fold
        MackeyZ2 m = induced_mackey(FgAbGroup::free(1));
        m.tran.m.at(0, 1) = -1;
        c.expect(caught(validate_mackey(m), "equivariance"), "tran w mutation missed");
    }
    {
        GreenZ2 g = base.green;
        g.mackey.tran.m.at(1, 0) = 2;
        c.expect(caught(validate_mackey(g.mackey), "double coset"),
                 "res tran mutation missed");
    }
    {
        GreenZ2 g = base.green;
        g.ring_fix.mul[1][1] = vec({0, 3});
        c.expect(caught(validate_green(g), "frobenius"), "frobenius mutation missed");
    }
    {
        HermitianMackey h = base.hermitian;
        h.action[0][1] = vec({0, 2});
        c.expect(caught(validate_hermitian(h), "hermitian res"),
                 "hermitian res mutation missed");
    }
    {
        HermitianMackey h = base.hermitian;
        h.action[0][0] = vec({1, 1});
        Report rep = validate_hermitian(h);
        c.expect(caught(rep, "hermitian tran") || caught(rep, "unit action"),
                 "hermitian tran mutation missed");
    }
}

}  // namespace

unsigned long acceptance_seed_from_env() {
    if (const char* s = std::getenv("EQALG_SEED")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 20260826UL;
}

std::vector<AcceptanceResult> run_acceptance(unsigned long seed) {
    struct Crit {
        int id;
        std::string name;
        std::function<void(Check&)> fn;
    };
    std::vector<Crit> crits = {
        {1, "Witt invariant factors for the small fields", c1_witt_decompositions},
        {2, "first ghost kernel generators and the mod-2 comparison", c2_ghost_kernel},
        {3, "Verschiebung image equals ker w0 with V injective", c3_verschiebung_sequence},
        {4, "prime-field fixed presentation: both levels the field", c4_prime_fields},
        {5, "integral fixed presentation: free with injective transfer", c5_integers},
        {6, "order-two group ring over Z and over the Burnside base", c6_order_two_group_ring},
        {7, "truncated infinite-cyclic group ring and window stability", c7_laurent},
        {8, "group rings of all groups of order at most 8: paths agree", c8_group_ring_oracle},
        {9, "box product: unit and symmetry on randomized functors",
         [seed](Check& c) { c9_box_algebra(c, seed); }},
        {10, "integral geometric fixed point dimensions up to 20", c10_phi_z},
        {11, "mod-2 geometric fixed point dimensions up to 20", c11_phi_f2},
        {12, "weight-zero slice dimensions for p=2 and odd p", c12_weight_slices},
        {13, "integral homotopy table with p-local CRT consistency", c13_thh_z},
        {14, "single-entry axiom mutations are caught by the validators", c14_mutations},
    };
    std::vector<AcceptanceResult> out;
    for (const Crit& crit : crits) {
        AcceptanceResult r;
        r.id = crit.id;
        r.name = crit.name;
        Check c;
        try {
            crit.fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        r.passed = c.ok;
        r.detail = c.why.str();
        out.push_back(r);
    }
    return out;
}

}  // namespace eqalg
