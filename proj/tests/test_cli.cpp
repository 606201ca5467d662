#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SCC_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string data = SCC_DATA_DIR;

}  // namespace

TEST_CASE("usage errors") {
    CHECK(run("catalog --type V").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("polygon --n 7").code == 2);
    CHECK(run("flm-bound --lambda 0.5 --k 1").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("catalog per type") {
    Run r = run("--json catalog --type III");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["entries"] == 16);
}

TEST_CASE("full catalog") {
    Run r = run("--json catalog");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["entries"] == 36);
    CHECK(r.code == 0);
}

TEST_CASE("shipped golden catalog is reproduced") {
    Run r = run("catalog --golden " + data + "/catalog.json");
    CHECK(r.out.find("identical") != std::string::npos);
}

TEST_CASE("check") {
    CHECK(run("check " + data + "/certificates/wscca_torus.json").code == 0);
    CHECK(run("check " + data + "/certificates/good_pair_II_1.json").code == 0);
    CHECK(run("check " + data + "/certificates/type_IV_turn_IV_2.json").code == 0);
    CHECK(run("check " + data + "/certificates/boundary_wsccb_III_11.json").code == 0);
    CHECK(run("check " + data + "/certificates/wscca_three_crossings.json").code == 1);

    std::ifstream in(data + "/certificates/wscca_torus.json");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    const std::string path = "scc_cli_truncated.json";
    std::ofstream(path) << text.substr(0, text.size() / 2);
    Run t = run("check " + path);
    CHECK(t.code == 2);
    CHECK(t.out.find("error") != std::string::npos);
    std::remove(path.c_str());
    CHECK(run("check /nonexistent.json").code == 2);
}

TEST_CASE("check a triple of a system") {
    Run r = run("check " + data + "/examples_type_I_1.json --triple gamma,delta,epsilon");
    CHECK(r.code == 0);
    const std::string path = "scc_cli_triple.dot";
    CHECK(run("check " + data + "/certificates/wscca_torus.json --dot " + path).code == 0);
    std::ifstream in(path);
    std::string dot((std::istreambuf_iterator<char>(in)), {});
    CHECK(dot.find("graph curves") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("polygon") {
    Run r = run("--json polygon --n 10 --k 1");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j.contains("certificate"));
    CHECK(run("polygon --n 8 --k 1").code == 0);
    CHECK(run("polygon --n 10 --k 3 --pairing 0-1,2-3,4-5,6-7,8-9").code == 2);
}

TEST_CASE("symplectic") {
    Run m = run("symplectic --g 2 --matrix M");
    CHECK(m.code == 0);
    CHECK(m.out.find("order: 4") != std::string::npos);
    Run w = run("symplectic --g 1 --word \"1,0 0,1^-1\"");
    CHECK(w.code == 0);
    CHECK(w.out.find("symplectic: yes") != std::string::npos);
    CHECK(run("symplectic --g 2 --word 1,0,0").code == 2);
}

TEST_CASE("thurston") {
    Run r = run("thurston --N 1 --word Ab");
    CHECK(r.code == 0);
    CHECK(r.out.find("2.618033988") != std::string::npos);
    CHECK(run("thurston --N @" + data + "/chain_g3.json --k-table 1,10,100 --blowup 1").code == 0);
    CHECK(run("thurston --N \"1 0; 0 1\" --word A").code == 2);
}

TEST_CASE("arithmetic subcommands") {
    Run f = run("flm-bound --lambda 1.414 --k 3 --mod2");
    CHECK(f.code == 0);
    CHECK(f.out.find("parity refined: 4") != std::string::npos);
    CHECK(run("power-subgroup --L 720 --n 7").code == 0);
    CHECK(run("power-subgroup --L 720 --n 360").code == 1);
    CHECK(run("power-subgroup --L 7 --n 1").code == 2);
}
