#ifndef EQALG_GRADED_HPP
#define EQALG_GRADED_HPP

#include "eqalg/fgab.hpp"

#include <string>
#include <vector>

namespace eqalg {

// Non-negatively graded abelian group on a finite window [0, N].
struct GradedAbGroup {
    std::vector<FgAbGroup> degrees;  // index = degree

    long max_degree() const { return static_cast<long>(degrees.size()) - 1; }
    const FgAbGroup& at(long n) const { return degrees.at(n); }
};

// Polynomial algebra over the field with two elements on one generator of
// the given degree, truncated to [0, N].
GradedAbGroup graded_f2_poly(long gen_degree, long n_max);

struct GradedTor {
    GradedAbGroup tor0, tor1;
};

// Degreewise derived tensor over the integers. Each degree is computed twice,
// from two independent free resolutions (the built-in pairing and an explicit
// two-term resolution by invariant factors), and the results are checked to
// agree.
GradedTor graded_tor(const GradedAbGroup& a, const GradedAbGroup& b, long n_max);

// Second-path Tor_1: resolve the first argument by 0 -> Z^k -> Z^k -> A -> 0
// using its invariant factors (for cyclic summands Z/d this is the resolution
// with a degree-one exterior generator mapping to d) and take kernels.
FgAbGroup tor1_by_resolution(const FgAbGroup& a, const FgAbGroup& b);

struct DimReport {
    std::vector<long> assembled;   // Tor_0 + shifted Tor_1 dimensions
    std::vector<long> monomial;    // closed-form monomial count
    bool equal = false;
};

// Dimensions of the derived-smash answer for the integral input: assembles
// graded Tor of the one-generator degree-2 polynomial algebra with itself
// and compares with the monomial count of a trivariate presentation with two
// degree-2 generators and one square-zero degree-1 generator.
DimReport phi_thr_z_dims(long n_max);

struct F2DimReport {
    std::vector<long> dims;        // mod-2 answer: n + 1 in degree n
    std::vector<long> odd_p_dims;  // all zero
    bool equal = false;            // Tor assembly vs monomial count
};

F2DimReport phi_thr_f2_dims(long n_max);

// Bigraded monomial counting.
struct MonoGen {
    std::string name;
    long n = 0, k = 0;          // bidegree
    bool invertible = false;    // admits negative exponents
    bool square_zero = false;   // exponent at most one
};

struct MonomialRing {
    long characteristic = 2;
    std::vector<MonoGen> gens;
};

// The coefficient generators used for the weight slices: for odd p an
// invertible generator in bidegree (0,2) and a polynomial generator in
// (2,1); for p = 2 generators in (-1,-1), (0,-1) and (2,1).
MonomialRing slice_ring(long p);

// Dimension of the (n, k) bigraded piece for n in [0, n_max]. Throws
// std::domain_error if the slice is unbounded.
std::vector<long> weight_slice(const MonomialRing& r, long k, long n_max);

// Homotopy of the ordinary theory for the integers: Z in degree 0, cyclic of
// order k in degree 2k-1, trivial otherwise; p-local variant replaces the
// order by the p-part.
FgAbGroup thh_z(long n);
FgAbGroup thh_z_local(long n, long p);

}  // namespace eqalg

#endif
