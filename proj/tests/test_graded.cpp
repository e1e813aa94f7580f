#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqalg/graded.hpp"

using namespace eqalg;

TEST_CASE("degreewise derived tensor with two-resolution agreement") {
    SUBCASE("polynomial algebra mod two on a degree-two generator") {
        GradedAbGroup a = graded_f2_poly(2, 20);
        GradedTor t = graded_tor(a, a, 20);
        for (long m = 0; m <= 10; ++m) {
            CHECK(t.tor0.at(2 * m) == FgAbGroup(std::vector<Int>(m + 1, Int(2)), 0));
            CHECK(t.tor1.at(2 * m) == FgAbGroup(std::vector<Int>(m + 1, Int(2)), 0));
            if (2 * m + 1 <= 20) {
                CHECK(t.tor0.at(2 * m + 1).is_trivial());
                CHECK(t.tor1.at(2 * m + 1).is_trivial());
            }
        }
    }
    SUBCASE("free inputs have no derived part") {
        GradedAbGroup z;
        z.degrees = {FgAbGroup::free(1)};
        GradedTor t = graded_tor(z, z, 0);
        CHECK(t.tor0.at(0) == FgAbGroup::free(1));
        CHECK(t.tor1.at(0).is_trivial());
    }
    SUBCASE("coprime torsion cancels") {
        CHECK(tensor(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)).group.is_trivial());
        CHECK(tor1(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)).is_trivial());
        CHECK(tor1_by_resolution(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)).is_trivial());
    }
    SUBCASE("resolution oracle on mixed groups") {
        FgAbGroup a({2, 12}, 1), b({4, 8}, 0);
        CHECK(tor1(a, b) == tor1_by_resolution(a, b));
        CHECK(tor1(b, a) == tor1_by_resolution(b, a));
    }
}

TEST_CASE("integral geometric fixed point dimensions") {
    DimReport rep = phi_thr_z_dims(20);
    CHECK(rep.equal);
    for (long n = 0; n <= 20; ++n) CHECK(rep.assembled[n] == n / 2 + 1);
    CHECK(rep.assembled[0] == 1);
    CHECK(rep.assembled[5] == 3);
}

TEST_CASE("mod-two geometric fixed point dimensions") {
    F2DimReport rep = phi_thr_f2_dims(20);
    CHECK(rep.equal);
    for (long n = 0; n <= 20; ++n) {
        CHECK(rep.dims[n] == n + 1);
        CHECK(rep.odd_p_dims[n] == 0);
    }
}

TEST_CASE("weight-zero slices of the bigraded coefficients") {
    SUBCASE("odd primes: dimension one exactly in degrees divisible by four") {
        std::vector<long> dims = weight_slice(slice_ring(3), 0, 20);
        for (long n = 0; n <= 20; ++n) CHECK(dims[n] == (n % 4 == 0 ? 1 : 0));
        // four-periodicity on the weight-zero line
        for (long n = 0; n + 4 <= 20; ++n) CHECK(dims[n] == dims[n + 4]);
    }
    SUBCASE("p = 2: same count as the integral answer") {
        std::vector<long> dims = weight_slice(slice_ring(2), 0, 20);
        for (long n = 0; n <= 20; ++n) CHECK(dims[n] == n / 2 + 1);
    }
    SUBCASE("stated spot values") {
        CHECK(weight_slice(slice_ring(3), 0, 4)[4] == 1);  // u^{-1} x~^2
        CHECK(weight_slice(slice_ring(3), 0, 4)[2] == 0);
        CHECK(weight_slice(slice_ring(2), 0, 4)[2] == 2);
    }
    SUBCASE("an invertible bidegree-zero generator is rejected") {
        MonomialRing r;
        r.gens = {{"t", 0, 0, true, false}};
        CHECK_THROWS_AS(weight_slice(r, 0, 5), std::domain_error);
    }
}

TEST_CASE("homotopy table for the integral ordinary theory") {
    CHECK(thh_z(0) == FgAbGroup::free(1));
    CHECK(thh_z(3) == FgAbGroup::cyclic(2));
    CHECK(thh_z(2) .is_trivial());
    CHECK(thh_z_local(9, 3).is_trivial());    // k = 5 has no 3-part
    CHECK(thh_z_local(11, 3) == FgAbGroup::cyclic(3));  // k = 6
    // CRT consistency for k <= 50 against the full table
    for (long k = 1; k <= 50; ++k) {
        FgAbGroup full = thh_z(2 * k - 1);
        Int prod = 1;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
            FgAbGroup loc = thh_z_local(2 * k - 1, p);
            prod *= loc.is_trivial() ? Int(1) : loc.torsion()[0];
        }
        CHECK(prod == (k == 1 ? Int(1) : full.torsion()[0]));
    }
}
