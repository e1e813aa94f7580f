#ifndef EQALG_BUILTIN_HPP
#define EQALG_BUILTIN_HPP

#include "eqalg/mackey.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqalg {

// Named rings with anti-involution: z, f2, f3, f5, z4, zi (Gaussian integers
// with conjugation), zc2 (integral group ring of the order-two group).
std::optional<PresRing> builtin_ring(const std::string& name);

// Named finite groups with the inversion anti-involution: trivial, c2..c8,
// c2xc2, c4xc2, c2xc2xc2, s3, d4, q8.
std::optional<FinMonoid> builtin_group(const std::string& name);

// Named Hermitian coefficient bases: z, f2, f3, f5, burnside.
std::optional<HermitianMackey> builtin_base(const std::string& name);

// All builtin group names of order at most 8, smallest first.
std::vector<std::string> builtin_group_names_order_le8();

}  // namespace eqalg

#endif
