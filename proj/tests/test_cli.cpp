#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "support/run_cli.hpp"

using nlohmann::json;
using testsupport::run_cli;

namespace {

std::string cli() { return PWQH_CLI_PATH; }

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    out << data;
}

const char* kSystemI = R"({
  "upper": {"P": [[0, 2, -1.0]], "Q": [[1, 0, 1.0]]},
  "lower": {"P": [[0, 2, 1.0]], "Q": [[1, 0, 1.0]]}
})";

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("xi-max prints the table entry") {
    const auto res = run_cli(cli(), "xi-max --n 3");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["n"] == 3);
    CHECK(j["xi_max"] == 4);
}

TEST_CASE("analyze a Form I system file") {
    write_file("sys_i.json", kSystemI);
    const auto res = run_cli(cli(), "analyze sys_i.json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["canonical_form"]["variant"] == "I");
    CHECK(j["center"]["is_center"] == true);
    CHECK(j["weight_vectors"]["upper"]["s1"] == 3);
    CHECK(j["weight_vectors"]["upper"]["s2"] == 2);
    CHECK(j["portrait"]["case_id"] == 4);
    CHECK(j["switching"]["crossing"]["kind"] == "axis-minus-points");
    std::remove("sys_i.json");
}

TEST_CASE("analyze missing file exits 2 with error JSON on stderr") {
    const auto res = run_cli(cli(), "analyze missing.json");
    CHECK(res.exit_code == 2);
    const json err = json::parse(res.err);
    CHECK(err.contains("error"));
    CHECK(err["error"]["kind"] == "io");
}

TEST_CASE("center report for the reference parameters") {
    const auto res = run_cli(cli(), "center --params -1,1,1");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["report"]["is_center"] == true);
    CHECK(j["beta0"].get<double>() == doctest::Approx(6.4203913064778543).epsilon(1e-10));
    REQUIRE(j["periods"].size() == 5);
    for (const auto& row : j["periods"]) CHECK(row["rel_err"].get<double>() < 1e-8);
}

TEST_CASE("center handles the no-center regime without error") {
    const auto res = run_cli(cli(), "center --params 1,1,1");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["report"]["is_center"] == false);
    CHECK_FALSE(j.contains("periods"));
}

TEST_CASE("domain errors exit 1") {
    // realization outside the center family
    const auto res = run_cli(cli(), "realize --n 1 --params 1,1,1 --roots 1");
    CHECK(res.exit_code == 1);
    const json err = json::parse(res.err);
    CHECK(err["error"]["kind"] == "NotACenter");
}

TEST_CASE("realize then melnikov round trip reproduces the roots") {
    const auto realize = run_cli(cli(), "realize --n 2 --params -1,1,1 --roots 1,8,27 --out pert.json");
    REQUIRE(realize.exit_code == 0);
    const auto mel = run_cli(cli(), "melnikov pert.json --params -1,1,1");
    REQUIRE(mel.exit_code == 0);
    const json j = json::parse(mel.out);
    CHECK(j["variations"] == 3);
    CHECK(j["xi_max"] == 3);
    CHECK(j["exponents"] == json::array({0, 2, 4, 6}));
    REQUIRE(j["roots"].size() == 3);
    const double targets[] = {1.0, 8.0, 27.0};
    for (int i = 0; i < 3; ++i)
        CHECK(j["roots"][i]["h"].get<double>() ==
              doctest::Approx(targets[i]).epsilon(1e-9));
    std::remove("pert.json");
}

TEST_CASE("simulate emits CSV with events") {
    const auto res = run_cli(cli(), "simulate --form I --params -1,1,1 --x0 1,0 --tmax 7");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.rfind("t,x,y,event\n", 0) == 0);
    CHECK(res.out.find("crossing") != std::string::npos);
}

TEST_CASE("portrait writes SVG") {
    const auto res = run_cli(cli(), "portrait --form III --params 1,-1,-1,3 --grid 6 --radius 4");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("<svg") != std::string::npos);
    CHECK(res.out.find("\"case_id\":25") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli(cli(), "xi-max --n 3 --bogus 1").exit_code == 2);
    CHECK(run_cli(cli(), "").exit_code == 2);         // a subcommand is required
    CHECK(run_cli(cli(), "frobnicate").exit_code == 2);
    CHECK(run_cli(cli(), "center --params not,numbers").exit_code == 2);
}

TEST_CASE("cycle scan is independent of the thread cap") {
    const auto realize = run_cli(cli(), "realize --n 1 --params -1,1,1 --roots 2 --out pert_thr.json");
    REQUIRE(realize.exit_code == 0);
    const std::string cmd = "cycles pert_thr.json --params -1,1,1 --eps 1e-3 --h-range 0.5,8 --grid 8";
    const auto serial = run_cli("PWQH_THREADS=1 " + cli(), cmd);
    const auto parallel = run_cli("PWQH_THREADS=4 " + cli(), cmd);
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
    const json j = json::parse(serial.out);
    REQUIRE(j["zeros"].size() == 1);
    CHECK(j["zeros"][0].get<double>() == doctest::Approx(2.0).epsilon(0.1));
    std::remove("pert_thr.json");
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string cmds[] = {
        "xi-max --n 4",
        "center --params -1,1,1",
        "realize --n 2 --params -1,1,1 --roots 1,8",
        "simulate --form I --params -1,1,1 --x0 1,0 --tmax 3",
        "portrait --form I --params -1,1,1 --grid 5 --radius 3",
    };
    for (const auto& cmd : cmds) {
        const auto a = run_cli(cli(), cmd);
        const auto b = run_cli(cli(), cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_SUITE_END();
