#include "eqalg/acceptance.hpp"
#include "eqalg/builtin.hpp"
#include "eqalg/graded.hpp"
#include "eqalg/json_io.hpp"
#include "eqalg/thr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace eqalg;

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_INVALID = 3;
constexpr int EXIT_UNSUPPORTED = 4;

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string group_str(const FgAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::string s;
    if (g.free_rank() > 0) {
        s = "Z";
        if (g.free_rank() > 1) s += "^" + std::to_string(g.free_rank());
    }
    for (const Int& d : g.torsion()) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

std::string matrix_str(const IntMat& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<size_t> width(m.cols(), 0);
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) {
            cells[r].push_back(m.at(r, c).get_str());
            width[c] = std::max(width[c], cells[r].back().size());
        }
    std::string s;
    for (long r = 0; r < m.rows(); ++r) {
        s += indent + "[";
        for (long c = 0; c < m.cols(); ++c) {
            s += " " + std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
        }
        s += " ]\n";
    }
    if (m.rows() == 0) s += indent + "[]\n";
    return s;
}

std::string mackey_str(const MackeyZ2& m) {
    std::ostringstream s;
    s << "level_e:   " << group_str(m.level_e) << "\n";
    s << "level_fix: " << group_str(m.level_fix) << "\n";
    s << "res:\n" << matrix_str(m.res.m, "  ");
    s << "tran:\n" << matrix_str(m.tran.m, "  ");
    s << "w:\n" << matrix_str(m.w.m, "  ");
    return s.str();
}

Json factors_json(const std::vector<Int>& f) {
    Json a = Json::array();
    for (const Int& d : f) a.push_back(d.fits_slong_p() ? Json(d.get_si()) : Json(d.get_str()));
    return a;
}

std::string factors_str(const std::vector<Int>& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].get_str();
    return s + "]";
}

Json violations_json(const Report& rep) {
    Json a = Json::array();
    for (const auto& v : rep) a.push_back({{"law", v.law}, {"witness", v.witness}});
    return a;
}

struct Output {
    std::string path;
    std::string format = "text";

    void add_options(CLI::App* cmd) {
        cmd->add_option("--out", path, "Write the report to a file instead of stdout");
        cmd->add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"text", "json"}));
    }

    void emit(const Json& j, const std::string& text) const {
        std::string body = format == "json" ? j.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(path);
            if (!f) throw Unsupported("cannot open output file: " + path);
            f << body;
        }
    }
};

Json load_input(const std::string& path) {
    if (path.empty()) throw Unsupported("--input is required here");
    return load_json_file(path);
}

// ---- validate --------------------------------------------------------------

int cmd_validate(const std::string& input, const Output& out) {
    Json j;
    {
        std::ifstream probe(input);
        if (probe.good()) {
            j = load_input(input);
        } else if (auto r = builtin_ring(lower(input))) {
            j = ring_to_json(*r);
        } else if (auto g = builtin_group(lower(input))) {
            j = monoid_to_json(*g);
        } else {
            throw ParseError("no such file or builtin input: " + input);
        }
    }

    std::string kind;
    Report rep;
    Json extra = Json::object();
    if (j.is_object() && j.contains("level_e")) {
        MackeyInput in = mackey_from_json(j);
        kind = "mackey";
        rep = validate_mackey(in.mackey);
        if (in.is_green()) {
            kind = "green";
            GreenZ2 g{in.mackey, *in.ring_e, *in.ring_fix};
            for (auto& v : validate_green(g)) rep.push_back(v);
        }
        if (in.is_hermitian()) {
            kind = "hermitian";
            for (auto& v : validate_hermitian(in.hermitian())) rep.push_back(v);
        }
        extra["level_e"] = group_str(in.mackey.level_e);
        extra["level_fix"] = group_str(in.mackey.level_fix);
    } else if (j.is_object() && j.contains("table")) {
        FinMonoid m = monoid_from_json(j);
        kind = "monoid";
        rep = validate_monoid(m);
        extra["elements"] = static_cast<long>(m.elements.size());
        extra["is_group"] = m.is_group();
    } else if (j.is_object() && j.contains("mul")) {
        PresRing r = ring_from_json(j);
        kind = "ring";
        rep = validate_ring(r);
        extra["carrier"] = group_str(r.carrier);
        extra["has_involution"] = r.w.has_value();
    } else {
        FgAbGroup g = group_from_json(j);
        kind = "group";
        extra["canonical"] = group_str(g);
    }

    Json report = {{"kind", kind},
                   {"valid", rep.empty()},
                   {"violations", violations_json(rep)}};
    for (auto& [k, v] : extra.items()) report[k] = v;

    std::ostringstream text;
    text << "kind: " << kind << "\n";
    for (auto& [k, v] : extra.items())
        text << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (rep.empty()) {
        text << "valid: yes\n";
    } else {
        text << "valid: no\n";
        for (const auto& v : rep) text << "  " << v.law << ": " << v.witness << "\n";
    }
    out.emit(report, text.str());
    return rep.empty() ? 0 : EXIT_INVALID;
}

// ---- witt ------------------------------------------------------------------

PresRing resolve_ring(const std::string& base, const std::string& input) {
    if (!base.empty()) {
        if (auto r = builtin_ring(lower(base))) return *r;
        throw Unsupported("unknown builtin ring: " + base);
    }
    PresRing r = ring_from_json(load_input(input));
    Report rep = validate_ring(r);
    if (!rep.empty()) throw Invalid("input ring invalid: " + report_str(rep));
    return r;
}

int cmd_witt(const std::string& base, const std::string& input, bool decompose,
             const Output& out) {
    PresRing s = resolve_ring(base, input);
    if (decompose && !s.carrier.is_finite())
        throw Unsupported("--decompose requires a finite coefficient ring");
    WittGreen w = witt_green(s, decompose);

    Json report = {{"mackey", mackey_to_json(w.green.mackey)},
                   {"norm_generators", w.n_s},
                   {"verschiebung_generators", w.n_c}};
    std::ostringstream text;
    text << mackey_str(w.green.mackey);
    text << "norm generators: " << w.n_s
         << ", verschiebung generators: " << w.n_c << "\n";
    if (decompose) {
        report["invariant_factors"] = factors_json(*w.decomposition);
        text << "invariant factors: " << factors_str(*w.decomposition) << "\n";
    }
    out.emit(report, text.str());
    return 0;
}

// ---- box -------------------------------------------------------------------

int cmd_box(const std::string& input, const Output& out) {
    Json j = load_input(input);
    Json jl, jr;
    if (j.is_array() && j.size() == 2) {
        jl = j[0];
        jr = j[1];
    } else if (j.is_object() && j.contains("left") && j.contains("right")) {
        jl = j["left"];
        jr = j["right"];
    } else {
        throw ParseError("box input must be {\"left\": ..., \"right\": ...}");
    }
    MackeyZ2 l = mackey_from_json(jl).mackey;
    MackeyZ2 r = mackey_from_json(jr).mackey;
    for (const MackeyZ2* m : {&l, &r}) {
        Report rep = validate_mackey(*m);
        if (!rep.empty()) throw Invalid("input invalid: " + report_str(rep));
    }
    MackeyZ2 b = box(l, r).mackey;
    out.emit(mackey_to_json(b), mackey_str(b));
    return 0;
}

// ---- thr-pi0 / group-ring / laurent -----------------------------------------

HermitianMackey resolve_base(const std::string& base, const std::string& input) {
    if (!base.empty()) {
        if (auto h = builtin_base(lower(base))) return *h;
        // fall through: treat as a file path
        std::ifstream probe(base);
        if (!probe.good()) throw Unsupported("unknown builtin base: " + base);
        MackeyInput in = mackey_from_json(load_json_file(base));
        if (!in.is_hermitian())
            throw Unsupported("base file lacks the ring/action data");
        return in.hermitian();
    }
    MackeyInput in = mackey_from_json(load_input(input));
    if (!in.is_hermitian())
        throw Unsupported("input lacks the ring/action data");
    return in.hermitian();
}

int cmd_thr_pi0(const std::string& base, const std::string& input, const Output& out) {
    HermitianMackey h = resolve_base(base, input);
    Report rep = validate_hermitian(h);
    if (!rep.empty()) throw Invalid("input invalid: " + report_str(rep));
    Pi0Report p = thr_pi0(h);

    Json report = {{"mackey", mackey_to_json(p.result)},
                   {"relations", p.presentation_trace}};
    std::ostringstream text;
    text << mackey_str(p.result);
    text << "relations imposed: " << p.presentation_trace.size() << "\n";
    out.emit(report, text.str());
    return 0;
}

int cmd_group_ring(const std::string& group, const std::string& input,
                   const std::string& base, const Output& out) {
    FinMonoid mon;
    if (!group.empty()) {
        auto g = builtin_group(lower(group));
        if (!g) throw Unsupported("unknown builtin group: " + group);
        mon = *g;
    } else {
        mon = monoid_from_json(load_input(input));
        Report rep = validate_monoid(mon);
        if (!rep.empty()) throw Invalid("input invalid: " + report_str(rep));
    }
    HermitianMackey h = resolve_base(base.empty() ? "z" : base, "");
    GroupRingPi0 g = thr_group_ring(mon, h);

    Json report = {{"mackey", mackey_to_json(g.result)},
                   {"class_names", g.classes.class_names},
                   {"fix_names", g.classes.fix_names},
                   {"integral_closed_form", g.integral_base}};
    std::ostringstream text;
    text << mackey_str(g.result);
    text << "conjugation classes:";
    for (const auto& n : g.classes.class_names) text << " " << n;
    text << "\nfixed-level basis names:";
    for (const auto& n : g.classes.fix_names) text << " " << n;
    text << "\nclosed-form integral presentation: "
         << (g.integral_base ? "yes" : "no") << "\n";
    out.emit(report, text.str());
    return 0;
}

int cmd_laurent(long window, const Output& out) {
    if (window < 1) throw Unsupported("--window must be at least 1");
    MackeyZ2 m = laurent_thr_pi0(window);
    std::vector<std::string> e_names, fix_names;
    for (long k = -window; k <= window; ++k)
        e_names.push_back("t^" + std::to_string(k));
    for (long n = 1; n <= window; ++n)
        fix_names.push_back("t^" + std::to_string(n));
    fix_names.push_back("u");

    Json report = {{"mackey", mackey_to_json(m)},
                   {"e_basis", e_names},
                   {"fix_basis", fix_names}};
    std::ostringstream text;
    text << mackey_str(m);
    text << "underlying basis:";
    for (const auto& n : e_names) text << " " << n;
    text << "\nfixed basis:";
    for (const auto& n : fix_names) text << " " << n;
    text << "\n";
    out.emit(report, text.str());
    return 0;
}

// ---- graded ------------------------------------------------------------------

int cmd_graded(const std::string& target, long max_degree, long prime, long weight,
               const Output& out) {
    if (max_degree < 0) throw Unsupported("--max-degree must be non-negative");
    Json report;
    std::ostringstream text;
    if (target == "phi-z") {
        DimReport r = phi_thr_z_dims(max_degree);
        report = {{"target", target}, {"dims", r.assembled},
                  {"monomial_count", r.monomial}, {"paths_agree", r.equal}};
        text << "degree  dim\n";
        for (long n = 0; n <= max_degree; ++n)
            text << n << "\t" << r.assembled[n] << "\n";
        text << "independent counts agree: " << (r.equal ? "yes" : "no") << "\n";
        if (!r.equal) {
            out.emit(report, text.str());
            return EXIT_INVALID;
        }
    } else if (target == "phi-f2") {
        F2DimReport r = phi_thr_f2_dims(max_degree);
        report = {{"target", target}, {"dims", r.dims},
                  {"odd_prime_dims", r.odd_p_dims}, {"paths_agree", r.equal}};
        text << "degree  dim  odd-p dim\n";
        for (long n = 0; n <= max_degree; ++n)
            text << n << "\t" << r.dims[n] << "\t" << r.odd_p_dims[n] << "\n";
        text << "independent counts agree: " << (r.equal ? "yes" : "no") << "\n";
        if (!r.equal) {
            out.emit(report, text.str());
            return EXIT_INVALID;
        }
    } else if (target == "slice") {
        if (prime < 2) throw Unsupported("--prime (>= 2) is required for slices");
        std::vector<long> dims;
        try {
            dims = weight_slice(slice_ring(prime), weight, max_degree);
        } catch (const std::domain_error& e) {
            throw Unsupported(e.what());
        }
        report = {{"target", target}, {"prime", prime}, {"weight", weight},
                  {"dims", dims}};
        text << "degree  dim (p=" << prime << ", weight " << weight << ")\n";
        for (long n = 0; n <= max_degree; ++n) text << n << "\t" << dims[n] << "\n";
    } else if (target == "thh-z") {
        Json groups = Json::array();
        text << "degree  group\n";
        for (long n = 0; n <= max_degree; ++n) {
            FgAbGroup g = prime >= 2 ? thh_z_local(n, prime) : thh_z(n);
            groups.push_back(group_to_json(g));
            text << n << "\t" << group_str(g) << "\n";
        }
        report = {{"target", target}, {"groups", groups}};
        if (prime >= 2) report["prime"] = prime;
    } else {
        throw Unsupported("unknown graded target: " + target);
    }
    out.emit(report, text.str());
    return 0;
}

// ---- selftest ----------------------------------------------------------------

int cmd_selftest(const Output& out) {
    auto results = run_acceptance(acceptance_seed_from_env());
    Json arr = Json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"name", r.name},
                       {"passed", r.passed}, {"detail", r.detail}});
        if (r.passed) {
            text << "PASS criterion " << r.id << ": " << r.name << "\n";
        } else {
            text << "FAIL criterion " << r.id << ": " << r.name << " — "
                 << r.detail << "\n";
            all_ok = false;
        }
    }
    out.emit({{"results", arr}, {"all_passed", all_ok}}, text.str());
    return all_ok ? 0 : EXIT_INVALID;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic calculator for two-level equivariant algebra"};
    app.require_subcommand(1);

    struct {
        std::string input, base, group, target;
        long window = 0, max_degree = 20, prime = 0, weight = 0;
        bool decompose = false;
        Output out_v, out_w, out_b, out_t, out_g, out_l, out_d, out_s;
    } a;

    auto* validate = app.add_subcommand("validate", "Validate a JSON input file");
    validate->add_option("--input", a.input, "Input file or builtin name")->required();
    a.out_v.add_options(validate);

    auto* witt = app.add_subcommand("witt", "Length-two twisted Witt vectors of a ring");
    witt->add_option("--base", a.base, "Builtin ring name");
    witt->add_option("--input", a.input, "Ring file");
    witt->add_flag("--decompose", a.decompose, "Report invariant factors of the fixed level");
    a.out_w.add_options(witt);

    auto* boxc = app.add_subcommand("box", "Box product of two Mackey functors");
    boxc->add_option("--input", a.input, "File holding left and right inputs")->required();
    a.out_b.add_options(boxc);

    auto* thr = app.add_subcommand("thr-pi0", "Two-level invariant of a Hermitian input");
    thr->add_option("--base", a.base, "Builtin base name");
    thr->add_option("--input", a.input, "Hermitian Mackey file");
    a.out_t.add_options(thr);

    auto* grp = app.add_subcommand("group-ring", "Two-level invariant of a group ring");
    grp->add_option("--group", a.group, "Builtin group name");
    grp->add_option("--input", a.input, "Monoid file");
    grp->add_option("--base", a.base, "Coefficient base (builtin name or file)");
    a.out_g.add_options(grp);

    auto* lau = app.add_subcommand("laurent", "Truncated infinite-cyclic group ring");
    lau->add_option("--window", a.window, "Truncation window")->required();
    a.out_l.add_options(lau);

    auto* gra = app.add_subcommand("graded", "Graded dimension and homotopy tables");
    gra->add_option("--target", a.target, "phi-z | phi-f2 | slice | thh-z")->required();
    gra->add_option("--max-degree", a.max_degree, "Top degree of the table");
    gra->add_option("--prime", a.prime, "Prime for slice / local computations");
    gra->add_option("--weight", a.weight, "Slice weight");
    a.out_d.add_options(gra);

    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    a.out_s.add_options(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_UNSUPPORTED;
    }

    try {
        if (validate->parsed()) return cmd_validate(a.input, a.out_v);
        if (witt->parsed()) return cmd_witt(a.base, a.input, a.decompose, a.out_w);
        if (boxc->parsed()) return cmd_box(a.input, a.out_b);
        if (thr->parsed()) return cmd_thr_pi0(a.base, a.input, a.out_t);
        if (grp->parsed()) return cmd_group_ring(a.group, a.input, a.base, a.out_g);
        if (lau->parsed()) return cmd_laurent(a.window, a.out_l);
        if (gra->parsed())
            return cmd_graded(a.target, a.max_degree, a.prime, a.weight, a.out_d);
        if (self->parsed()) return cmd_selftest(a.out_s);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return EXIT_UNSUPPORTED;
    } catch (const Invalid& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::exception& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return EXIT_INVALID;
    }
    return EXIT_UNSUPPORTED;
}
