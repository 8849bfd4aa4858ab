#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Run the tool with the given arguments, capturing stdout (stderr dropped).
CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(LEXISHIFT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

json run_json(const std::string& args) {
    CliResult r = run_cli("--json " + args);
    REQUIRE(r.status == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("cli entropy on the golden pair") {
    json j = run_json("entropy --alpha \"(110)\" --beta \"(001)\"");
    CHECK(j["alpha"] == "(110)");
    CHECK(std::abs(j["kappa"].get<double>() - 0.61803398875) < 1e-10);
    CHECK(std::abs(j["h_bits"].get<double>() - 0.694241913631) < 1e-10);
    CHECK(j["dim"] == j["h_bits"]);
}

TEST_CASE("cli entropy accepts hole endpoints") {
    json j = run_json("entropy --a 3/4 --b 1");
    CHECK(j["alpha"] == "11(0)");
    CHECK(j["beta"] == "(0)");
    CHECK(std::abs(j["h_bits"].get<double>() - 0.694241913631) < 1e-10);
}

TEST_CASE("cli classify centred hole with zero entropy") {
    json j = run_json("classify --a 1/3 --b 2/3");
    CHECK(j["tag"] == "ZeroEntropy");
    CHECK(j["hole_kind"] == "Centred");
    CHECK(j["ie"] == "ZeroEntropy");
    CHECK(j["kappa"].is_null());
}

TEST_CASE("cli classify full shift") {
    json j = run_json("classify --alpha \"(1)\" --beta \"(0)\"");
    CHECK(j["tag"] == "FullShift");
    CHECK(j["h_bits"].get<double>() == 1.0);
    CHECK(j["ie"] == "IntrinsicallyErgodic");
}

TEST_CASE("cli classify renewal family member") {
    json j = run_json("classify --alpha \"1(100)\" --beta \"00(01)\"");
    CHECK(j["tag"] == "HofbauerNonIE");
    CHECK(j["ie"] == "NotIntrinsicallyErgodic");
    CHECK(j["ie_provenance"] == "theorem");
    CHECK(j["hofbauer"]["k"] == 0);
    CHECK(j["witnesses"] == json::array({0, 1}));
}

TEST_CASE("cli classify renormalisable pair reports the window") {
    json j = run_json("classify --alpha \"(1110100)\" --beta \"(00111)\"");
    CHECK(j["tag"] == "RenormalisableSFT");
    CHECK(j["assoc"]["omega"] == "011");
    CHECK(j["assoc"]["nu"] == "10");
    CHECK(j["assoc"]["alpha_pattern"] == "(w v^2)^inf");
}

TEST_CASE("cli balanced words") {
    json j = run_json("balanced --r 2/5");
    CHECK(j["xi"] == "01010");
    CHECK(j["zeta"] == "10010");
    CHECK(j["count"] == 5);
    CHECK(j["words"].size() == 5);
}

TEST_CASE("cli substitution apply and decode") {
    json j = run_json("subst --r 1/2 --seq \"(10)\"");
    CHECK(j["image"] == "(1001)");

    json d = run_json("subst --r 1/2 --seq \"01(10)\" --decode");
    CHECK(d["ok"] == true);
    CHECK(d["blocks"] == "0(1)");

    json bad = run_json("subst --r 1/2 --seq \"1(10)\" --decode");
    CHECK(bad["ok"] == false);
}

TEST_CASE("cli expansion round trip") {
    json j = run_json("expand --x 5/6 --n 8");
    CHECK(j["expansion"] == "1(10)");
    CHECK(j["digits"] == "11010101");
    CHECK(j["projected"] == "5/6");
}

TEST_CASE("cli box geometry and disjointness") {
    json j = run_json("boxes --omega 01 --nu 100");
    CHECK(j["diameter_sq"] == "5/256");
    CHECK(j["corners"]["x_lo"] == "(01)");
    CHECK(j["corners"]["y_hi"] == "(100)");

    json d = run_json("boxes --omega 01 --nu 100 --omega2 01 --nu2 10010");
    CHECK(d["disjoint"] == true);

    json m = run_json(
        "boxes --omega 01 --nu 10 --alpha \"1(10)\" --beta \"0(01)\"");
    CHECK(m["contains"] == true);
}

TEST_CASE("cli components of the renormalisable pair") {
    json j = run_json("components --alpha \"(1110100)\" --beta \"(00111)\"");
    CHECK(j["components"].size() == 2);
    CHECK(j["ie"] == "IntrinsicallyErgodic");
    double top = j["components"][0]["entropy_bits"].get<double>();
    double second = j["components"][1]["entropy_bits"].get<double>();
    CHECK(top - second > 0.1);
}

TEST_CASE("cli measure on the full shift") {
    json j = run_json("measure --alpha \"(1)\" --beta \"(0)\"");
    CHECK(j["entropy_bits"].get<double>() == 1.0);
    CHECK(j["stationary"] == json::array({1.0}));
    CHECK(j["edges"].size() == 2);
    CHECK(j["edges"][0]["prob"].get<double>() == 0.5);
}

TEST_CASE("cli mathematical errors exit 1 with a JSON error") {
    CliResult r = run_cli("--json entropy --alpha \"(10)\" --beta \"(011)\"");
    CHECK(r.status == 1);
    json j = json::parse(r.out);
    CHECK(j["error"] == "NotAdmissible");

    CliResult u = run_cli("--json classify --a 3/5 --b 7/10");
    CHECK(u.status == 1);
    CHECK(json::parse(u.out)["error"] == "Unsupported");
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run_cli("entropy --bogus").status == 2);
    CHECK(run_cli("classify").status == 2);
    CHECK(run_cli("entropy --alpha \"(110)\"").status == 2);
    CHECK(run_cli("").status == 2);
}

TEST_CASE("cli scan grid rows") {
    CliResult r = run_cli("scan --denominator 8");
    REQUIRE(r.status == 0);
    CHECK(r.out ==
          "a,b,tag,level,ratios,kappa,h_bits,dim,ie,ie_provenance\n"
          "3/8,5/8,Extremal,0,,,0,0,ZeroEntropy,theorem\n"
          "# summary: rows=1 ie_fraction=0 Extremal=1\n");

    CliResult g = run_cli("scan --denominator 12");
    REQUIRE(g.status == 0);
    CHECK(g.out.find("5/12,7/12,Essential,1,1/2,") != std::string::npos);
    CHECK(g.out.find("# summary: rows=4") != std::string::npos);
}

TEST_CASE("cli scan output is byte-identical across worker counts") {
    CliResult one = run_cli("scan --denominator 24 --jobs 1");
    CliResult four = run_cli("scan --denominator 24 --jobs 4");
    REQUIRE(one.status == 0);
    REQUIRE(four.status == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.find("a,b,tag,") == 0);
}

TEST_CASE("cli scan rejects rectangles that cross the critical point") {
    CliResult r = run_cli("--json scan --denominator 8 --a-lo 1/2 --a-hi 3/4");
    CHECK(r.status == 1);
    CHECK(json::parse(r.out)["error"] == "DomainError");
}
