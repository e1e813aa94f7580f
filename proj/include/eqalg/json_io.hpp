#ifndef EQALG_JSON_IO_HPP
#define EQALG_JSON_IO_HPP

#include "eqalg/mackey.hpp"

#include <json.hpp>

#include <stdexcept>

namespace eqalg {

using Json = nlohmann::ordered_json;

// Malformed input (bad JSON shape, out-of-range or non-integer numbers).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Mackey input file with its optional ring/Hermitian enrichments.
struct MackeyInput {
    MackeyZ2 mackey;
    std::optional<PresRing> ring_e, ring_fix;
    std::optional<std::vector<std::vector<Vec>>> action;
    std::optional<Vec> unit_fix;

    bool is_green() const { return ring_e && ring_fix; }
    bool is_hermitian() const { return ring_e && action; }
    HermitianMackey hermitian() const;  // requires is_hermitian()
};

FgAbGroup group_from_json(const Json& j);
Json group_to_json(const FgAbGroup& g);

IntMat matrix_from_json(const Json& j, long rows, long cols);
Json matrix_to_json(const IntMat& m);

PresRing ring_from_json(const Json& j);
Json ring_to_json(const PresRing& r);

FinMonoid monoid_from_json(const Json& j);
Json monoid_to_json(const FinMonoid& m);

MackeyInput mackey_from_json(const Json& j);
Json mackey_to_json(const MackeyZ2& m);

Json load_json_file(const std::string& path);  // throws ParseError

}  // namespace eqalg

#endif
