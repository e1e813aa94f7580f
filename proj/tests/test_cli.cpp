#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqalg/json_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using namespace eqalg;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EQALG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "cli_input_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("witt decomposition of the two-element field") {
    RunResult r = run_cli("witt --base f2 --decompose");
    CHECK(r.status == 0);
    CHECK(r.out.find("invariant factors: [4]") != std::string::npos);

    RunResult j = run_cli("witt --base f3 --decompose --format json");
    CHECK(j.status == 0);
    Json rep = Json::parse(j.out);
    CHECK(rep["invariant_factors"] == Json::array({3, 3}));
}

TEST_CASE("order-two group ring over the integers") {
    RunResult r = run_cli("group-ring --group c2 --base z --format json");
    CHECK(r.status == 0);
    Json rep = Json::parse(r.out);
    MackeyInput in = mackey_from_json(rep["mackey"]);
    CHECK(in.mackey.level_e == FgAbGroup::free(2));
    CHECK(in.mackey.level_fix == FgAbGroup({2, 2}, 2));
    CHECK(rep["integral_closed_form"] == true);
    CHECK(rep["class_names"].size() == 2);
    CHECK(rep["fix_names"].size() == 6);
    CHECK(validate_mackey(in.mackey).empty());
}

TEST_CASE("graded tables") {
    RunResult r = run_cli("graded --target phi-z --max-degree 0 --format json");
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out)["dims"] == Json::array({1}));

    RunResult f2 = run_cli("graded --target phi-f2 --max-degree 5 --format json");
    CHECK(f2.status == 0);
    CHECK(Json::parse(f2.out)["dims"] == Json::array({1, 2, 3, 4, 5, 6}));

    RunResult sl = run_cli("graded --target slice --prime 3 --max-degree 8 --format json");
    CHECK(sl.status == 0);
    CHECK(Json::parse(sl.out)["dims"] == Json::array({1, 0, 0, 0, 1, 0, 0, 0, 1}));

    RunResult th = run_cli("graded --target thh-z --max-degree 5 --format json");
    CHECK(th.status == 0);
    Json groups = Json::parse(th.out)["groups"];
    CHECK(group_from_json(groups[3]) == FgAbGroup::cyclic(2));
    CHECK(group_from_json(groups[5]) == FgAbGroup::cyclic(3));
}

TEST_CASE("thr-pi0 builtin bases and laurent window") {
    RunResult r = run_cli("thr-pi0 --base f3 --format json");
    CHECK(r.status == 0);
    MackeyInput in = mackey_from_json(Json::parse(r.out)["mackey"]);
    CHECK(in.mackey.level_e == FgAbGroup::cyclic(3));
    CHECK(in.mackey.level_fix == FgAbGroup::cyclic(3));

    RunResult l = run_cli("laurent --window 5 --format json");
    CHECK(l.status == 0);
    Json rep = Json::parse(l.out);
    MackeyInput m = mackey_from_json(rep["mackey"]);
    CHECK(m.mackey.level_fix == FgAbGroup::free(6));
    CHECK(rep["fix_basis"].back() == "u");
}

TEST_CASE("validate detects input kinds and reports violations") {
    std::string grp = temp_file("group.json", R"({"generators":2,"relations":[[2,0]]})");
    RunResult g = run_cli("validate --input " + grp);
    CHECK(g.status == 0);
    CHECK(g.out.find("kind: group") != std::string::npos);
    CHECK(g.out.find("Z + Z/2") != std::string::npos);

    std::string bad = temp_file(
        "badmackey.json",
        R"({"level_e":{"free_rank":1,"torsion":[]},"level_fix":{"free_rank":1,"torsion":[]},)"
        R"("res":[[1]],"tran":[[3]],"w":[[1]]})");
    RunResult b = run_cli("validate --input " + bad);
    CHECK(b.status == 3);
    CHECK(b.out.find("double coset") != std::string::npos);

    RunResult builtin = run_cli("validate --input s3");
    CHECK(builtin.status == 0);
    CHECK(builtin.out.find("kind: monoid") != std::string::npos);
}

TEST_CASE("box subcommand multiplies against the unit") {
    // Burnside functor as an explicit file, boxed with itself.
    std::string burn = R"({"level_e":{"free_rank":1,"torsion":[]},)"
                       R"("level_fix":{"free_rank":2,"torsion":[]},)"
                       R"("res":[[1,2]],"tran":[[0],[1]],"w":[[1]]})";
    std::string pair = temp_file("boxpair.json", "{\"left\":" + burn + ",\"right\":" + burn + "}");
    RunResult r = run_cli("box --input " + pair + " --format json");
    CHECK(r.status == 0);
    MackeyInput m = mackey_from_json(Json::parse(r.out));
    CHECK(m.mackey.level_e == FgAbGroup::free(1));
    CHECK(m.mackey.level_fix == FgAbGroup::free(2));
    CHECK(validate_mackey(m.mackey).empty());
}

TEST_CASE("exit codes for parse, validation, and unsupported errors") {
    std::string broken = temp_file("broken.json", "{\"level_e\": ");
    CHECK(run_cli("validate --input " + broken).status == 2);
    CHECK(run_cli("validate --input no_such_file_or_name").status == 2);
    CHECK(run_cli("witt --base nosuchring").status == 4);
    CHECK(run_cli("witt --base z --decompose").status == 4);
    CHECK(run_cli("graded --target nosuchtarget").status == 4);
    CHECK(run_cli("graded --target slice --max-degree 4").status == 4);
    CHECK(run_cli("laurent --window 0").status == 4);
    CHECK(run_cli("nosuchsubcommand").status == 4);
}

TEST_CASE("json reports are deterministic") {
    for (const char* args :
         {"witt --base z4 --decompose --format json",
          "group-ring --group c2xc2 --base burnside --format json",
          "graded --target phi-z --max-degree 12 --format json"}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
