#include "eqalg/builtin.hpp"

#include <algorithm>
#include <array>

namespace eqalg {

namespace {

PresRing ring_z() {
    PresRing r;
    r.carrier = FgAbGroup::free(1);
    r.mul = {{Vec{1}}};
    r.unit = Vec{1};
    r.w = GroupHom::id(r.carrier);
    return r;
}

PresRing ring_zn(long n) {
    PresRing r;
    r.carrier = FgAbGroup::cyclic(n);
    r.mul = {{Vec{1}}};
    r.unit = Vec{1};
    r.w = GroupHom::id(r.carrier);
    return r;
}

PresRing ring_gauss() {
    PresRing r;
    r.carrier = FgAbGroup::free(2);
    r.mul = {{Vec{1, 0}, Vec{0, 1}}, {Vec{0, 1}, Vec{-1, 0}}};
    r.unit = Vec{1, 0};
    r.w = GroupHom(r.carrier, r.carrier, IntMat{{1, 0}, {0, -1}});
    return r;
}

FinMonoid cyclic_group(long k) {
    FinMonoid m;
    for (long i = 0; i < k; ++i) m.elements.push_back("g" + std::to_string(i));
    m.table.assign(k, std::vector<long>(k));
    m.iota.assign(k, 0);
    for (long i = 0; i < k; ++i) {
        m.iota[i] = (k - i) % k;
        for (long j = 0; j < k; ++j) m.table[i][j] = (i + j) % k;
    }
    m.identity = 0;
    return m;
}

FinMonoid s3_group() {
    // permutations of {0,1,2} as arrays, inversion involution
    std::vector<std::array<long, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                              {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    auto find = [&](const std::array<long, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<long>(i);
        return -1L;
    };
    FinMonoid m;
    m.elements = names;
    long n = 6;
    m.table.assign(n, std::vector<long>(n));
    m.iota.assign(n, 0);
    for (long i = 0; i < n; ++i) {
        std::array<long, 3> inv{};
        for (long s = 0; s < 3; ++s) inv[perms[i][s]] = s;
        m.iota[i] = find(inv);
        for (long j = 0; j < n; ++j) {
            std::array<long, 3> c{};
            for (long s = 0; s < 3; ++s) c[s] = perms[i][perms[j][s]];
            m.table[i][j] = find(c);
        }
    }
    m.identity = 0;
    return m;
}

FinMonoid d4_group() {
    // r^i s^j with s r = r^{-1} s, indexed i + 4j
    FinMonoid m;
    auto idx = [](long i, long j) { return ((i % 4) + 4) % 4 + 4 * j; };
    for (long j = 0; j < 2; ++j)
        for (long i = 0; i < 4; ++i)
            m.elements.push_back("r" + std::to_string(i) + (j ? "s" : ""));
    m.table.assign(8, std::vector<long>(8));
    m.iota.assign(8, 0);
    for (long j1 = 0; j1 < 2; ++j1)
        for (long i1 = 0; i1 < 4; ++i1) {
            long a = idx(i1, j1);
            m.iota[a] = j1 ? a : idx(-i1, 0);
            for (long j2 = 0; j2 < 2; ++j2)
                for (long i2 = 0; i2 < 4; ++i2)
                    m.table[a][idx(i2, j2)] = idx(i1 + (j1 ? -i2 : i2), (j1 + j2) % 2);
        }
    m.identity = 0;
    return m;
}

FinMonoid q8_group() {
    // units +-1, +-i, +-j, +-k; index = axis + 4*(sign < 0)
    FinMonoid m;
    const char* ax = "1ijk";
    for (long s = 0; s < 2; ++s)
        for (long a = 0; a < 4; ++a)
            m.elements.push_back(std::string(s ? "-" : "") + ax[a]);
    auto mul1 = [](long a, long b, long& axis) {  // returns sign
        if (a == 0) { axis = b; return 1L; }
        if (b == 0) { axis = a; return 1L; }
        if (a == b) { axis = 0; return -1L; }
        axis = 6 - a - b;  // the remaining axis among {1,2,3}
        bool pos = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
        return pos ? 1L : -1L;
    };
    m.table.assign(8, std::vector<long>(8));
    m.iota.assign(8, 0);
    for (long sa = 0; sa < 2; ++sa)
        for (long a = 0; a < 4; ++a) {
            long ia = a + 4 * sa;
            m.iota[ia] = a == 0 ? ia : a + 4 * (1 - sa);  // inverse of +-i is -+i
            for (long sb = 0; sb < 2; ++sb)
                for (long b = 0; b < 4; ++b) {
                    long axis;
                    long sign = mul1(a, b, axis) * (sa ? -1 : 1) * (sb ? -1 : 1);
                    m.table[ia][b + 4 * sb] = axis + 4 * (sign < 0);
                }
        }
    m.identity = 0;
    return m;
}

}  // namespace

std::optional<PresRing> builtin_ring(const std::string& name) {
    if (name == "z" || name == "Z") return ring_z();
    if (name == "f2" || name == "F2") return ring_zn(2);
    if (name == "f3" || name == "F3") return ring_zn(3);
    if (name == "f5" || name == "F5") return ring_zn(5);
    if (name == "z4" || name == "Z4") return ring_zn(4);
    if (name == "zi" || name == "Zi") return ring_gauss();
    if (name == "zc2" || name == "ZC2") return monoid_ring(ring_z(), cyclic_group(2));
    return std::nullopt;
}

std::optional<FinMonoid> builtin_group(const std::string& name) {
    if (name == "trivial") return cyclic_group(1);
    if (name.size() == 2 && name[0] == 'c' && name[1] >= '2' && name[1] <= '8')
        return cyclic_group(name[1] - '0');
    if (name == "c2xc2") return monoid_product(cyclic_group(2), cyclic_group(2));
    if (name == "c4xc2") return monoid_product(cyclic_group(4), cyclic_group(2));
    if (name == "c2xc2xc2")
        return monoid_product(cyclic_group(2),
                              monoid_product(cyclic_group(2), cyclic_group(2)));
    if (name == "s3") return s3_group();
    if (name == "d4") return d4_group();
    if (name == "q8") return q8_group();
    return std::nullopt;
}

std::optional<HermitianMackey> builtin_base(const std::string& name) {
    if (name == "burnside") return burnside().hermitian;
    if (auto r = builtin_ring(name)) return hermitian_from_ring(*r);
    return std::nullopt;
}

std::vector<std::string> builtin_group_names_order_le8() {
    return {"c2", "c3", "c4", "c2xc2", "c5",  "s3", "c6",
            "c7", "c8", "c4xc2", "c2xc2xc2", "d4", "q8"};
}

}  // namespace eqalg
