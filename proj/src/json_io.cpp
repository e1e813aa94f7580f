#include "eqalg/json_io.hpp"

#include <fstream>

namespace eqalg {

namespace {

Int int_from_json(const Json& j, const char* where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {  // arbitrary-precision escape hatch
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError(std::string(where) + ": expected an exact integer");
}

Vec vec_from_json(const Json& j, long len, const char* where) {
    if (!j.is_array() || static_cast<long>(j.size()) != len)
        throw ParseError(std::string(where) + ": expected an array of length " +
                         std::to_string(len));
    Vec v;
    for (const Json& x : j) v.push_back(int_from_json(x, where));
    return v;
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Int& x : v) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(x.get_str());
    }
    return a;
}

long index_from_json(const Json& j, long size, const char* where) {
    Int v = int_from_json(j, where);
    if (v < 0 || v >= size)
        throw ParseError(std::string(where) + ": index out of range");
    return v.get_si();
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json parse error: ") + e.what());
    }
}

FgAbGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("group: expected an object");
    if (j.contains("generators")) {
        long n = index_from_json(j.at("generators"), 1 << 20, "group.generators");
        const Json& rels = j.value("relations", Json::array());
        if (!rels.is_array()) throw ParseError("group.relations: expected an array");
        std::vector<Vec> cols;
        for (const Json& r : rels) cols.push_back(vec_from_json(r, n, "group.relations"));
        return canonicalize(n, from_cols(n, cols)).group;
    }
    std::vector<Int> torsion;
    if (j.contains("torsion"))
        for (const Json& d : j.at("torsion")) torsion.push_back(int_from_json(d, "group.torsion"));
    long free_rank = 0;
    if (j.contains("free_rank"))
        free_rank = index_from_json(j.at("free_rank"), 1 << 20, "group.free_rank");
    try {
        return FgAbGroup(torsion, free_rank);
    } catch (const std::exception& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

Json group_to_json(const FgAbGroup& g) {
    Json j;
    j["torsion"] = vec_to_json(g.torsion());
    j["free_rank"] = g.free_rank();
    return j;
}

IntMat matrix_from_json(const Json& j, long rows, long cols) {
    const Json* rowsj = &j;
    if (j.is_object() && j.contains("matrix")) rowsj = &j.at("matrix");
    if (!rowsj->is_array() || static_cast<long>(rowsj->size()) != rows)
        throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
    IntMat m(rows, cols);
    for (long r = 0; r < rows; ++r) {
        Vec row = vec_from_json((*rowsj)[r], cols, "matrix row");
        for (long c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

Json matrix_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (long r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.row(r)));
    return rows;
}

PresRing ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("mul") || !j.contains("unit"))
        throw ParseError("ring: expected group, mul and unit fields");
    PresRing r;
    r.carrier = group_from_json(j.at("group"));
    const long n = r.gens();
    const Json& mul = j.at("mul");
    if (!mul.is_array() || static_cast<long>(mul.size()) != n)
        throw ParseError("ring.mul: expected an n x n table of coefficient vectors");
    r.mul.assign(n, std::vector<Vec>(n));
    for (long i = 0; i < n; ++i) {
        if (!mul[i].is_array() || static_cast<long>(mul[i].size()) != n)
            throw ParseError("ring.mul: ragged table");
        for (long k = 0; k < n; ++k) r.mul[i][k] = vec_from_json(mul[i][k], n, "ring.mul");
    }
    r.unit = vec_from_json(j.at("unit"), n, "ring.unit");
    if (j.contains("involution"))
        r.w = GroupHom(r.carrier, r.carrier, matrix_from_json(j.at("involution"), n, n));
    return r;
}

Json ring_to_json(const PresRing& r) {
    Json j;
    j["group"] = group_to_json(r.carrier);
    Json mul = Json::array();
    for (const auto& row : r.mul) {
        Json jr = Json::array();
        for (const Vec& v : row) jr.push_back(vec_to_json(v));
        mul.push_back(jr);
    }
    j["mul"] = mul;
    j["unit"] = vec_to_json(r.unit);
    if (r.w) j["involution"] = matrix_to_json(r.w->m);
    return j;
}

FinMonoid monoid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
        throw ParseError("monoid: expected elements and table fields");
    FinMonoid m;
    for (const Json& e : j.at("elements")) {
        if (!e.is_string()) throw ParseError("monoid.elements: expected strings");
        m.elements.push_back(e.get<std::string>());
    }
    const long n = m.size();
    const Json& t = j.at("table");
    if (!t.is_array() || static_cast<long>(t.size()) != n)
        throw ParseError("monoid.table: expected an n x n table");
    m.table.assign(n, std::vector<long>(n));
    for (long i = 0; i < n; ++i) {
        if (!t[i].is_array() || static_cast<long>(t[i].size()) != n)
            throw ParseError("monoid.table: ragged table");
        for (long k = 0; k < n; ++k)
            m.table[i][k] = index_from_json(t[i][k], n, "monoid.table");
    }
    m.iota.assign(n, 0);
    if (j.contains("anti_involution")) {
        const Json& io = j.at("anti_involution");
        if (!io.is_array() || static_cast<long>(io.size()) != n)
            throw ParseError("monoid.anti_involution: expected a permutation array");
        for (long i = 0; i < n; ++i)
            m.iota[i] = index_from_json(io[i], n, "monoid.anti_involution");
    } else {
        for (long i = 0; i < n; ++i) m.iota[i] = i;
    }
    m.identity = j.contains("identity")
                     ? index_from_json(j.at("identity"), n, "monoid.identity")
                     : 0;
    return m;
}

Json monoid_to_json(const FinMonoid& m) {
    Json j;
    j["elements"] = m.elements;
    j["table"] = m.table;
    j["anti_involution"] = m.iota;
    j["identity"] = m.identity;
    return j;
}

HermitianMackey MackeyInput::hermitian() const {
    if (!is_hermitian())
        throw ParseError("input is not Hermitian (needs ring_e and action)");
    HermitianMackey h;
    h.mackey = mackey;
    h.ring_e = *ring_e;
    h.action = *action;
    h.unit_fix = unit_fix;
    return h;
}

MackeyInput mackey_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("level_e") || !j.contains("level_fix"))
        throw ParseError("mackey: expected level_e and level_fix fields");
    MackeyInput in;
    MackeyZ2& m = in.mackey;
    m.level_e = group_from_json(j.at("level_e"));
    m.level_fix = group_from_json(j.at("level_fix"));
    const long ne = m.level_e.gens(), nf = m.level_fix.gens();
    if (!j.contains("res") || !j.contains("tran") || !j.contains("w"))
        throw ParseError("mackey: expected res, tran and w matrices");
    m.res = GroupHom(m.level_fix, m.level_e, matrix_from_json(j.at("res"), ne, nf));
    m.tran = GroupHom(m.level_e, m.level_fix, matrix_from_json(j.at("tran"), nf, ne));
    m.w = GroupHom(m.level_e, m.level_e, matrix_from_json(j.at("w"), ne, ne));
    if (j.contains("ring_e")) {
        in.ring_e = ring_from_json(j.at("ring_e"));
        if (!(in.ring_e->carrier == m.level_e))
            throw ParseError("mackey.ring_e: carrier differs from level_e");
    }
    if (j.contains("ring_fix")) {
        in.ring_fix = ring_from_json(j.at("ring_fix"));
        if (!(in.ring_fix->carrier == m.level_fix))
            throw ParseError("mackey.ring_fix: carrier differs from level_fix");
    }
    if (j.contains("action")) {
        const Json& a = j.at("action");
        if (!a.is_array() || static_cast<long>(a.size()) != ne)
            throw ParseError("mackey.action: expected one row per level_e generator");
        std::vector<std::vector<Vec>> act(ne, std::vector<Vec>(nf));
        for (long i = 0; i < ne; ++i) {
            if (!a[i].is_array() || static_cast<long>(a[i].size()) != nf)
                throw ParseError("mackey.action: ragged table");
            for (long k = 0; k < nf; ++k)
                act[i][k] = vec_from_json(a[i][k], nf, "mackey.action");
        }
        in.action = act;
    }
    if (j.contains("unit_fix"))
        in.unit_fix = vec_from_json(j.at("unit_fix"), nf, "mackey.unit_fix");
    return in;
}

Json mackey_to_json(const MackeyZ2& m) {
    Json j;
    j["level_e"] = group_to_json(m.level_e);
    j["level_fix"] = group_to_json(m.level_fix);
    j["res"] = matrix_to_json(m.res.m);
    j["tran"] = matrix_to_json(m.tran.m);
    j["w"] = matrix_to_json(m.w.m);
    return j;
}

}  // namespace eqalg
