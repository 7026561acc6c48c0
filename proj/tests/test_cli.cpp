#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/json_io.hpp>
#include <kwb/ring_analysis.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    namespace fs = std::filesystem;
    static int counter = 0;
    ++counter;
    fs::path out = fs::temp_directory_path() / ("kwb_cli_out_" + std::to_string(counter));
    fs::path err = fs::temp_directory_path() / ("kwb_cli_err_" + std::to_string(counter));
    std::string cmd = std::string(KWB_BIN_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return r;
}

}  // namespace

TEST_CASE("graded dimension polynomial") {
    RunResult r = run("betti0 --n 8");
    CHECK(r.code == 0);
    CHECK(r.out == "1+t+2t²+3t³+3t⁴+t⁵\n");
}

TEST_CASE("relation cells as json") {
    RunResult r = run("--format json relations --kappa0 4 --degree 3 --dmax 3");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["s"] == 4);
    CHECK(j["degree"] == 3);
    REQUIRE(j["relations"].size() == 2);
    const auto& cell = j["relations"][0];
    CHECK(cell["r"] == 5);
    CHECK(cell["d"] == 2);
    REQUIRE(cell["terms"].size() == 2);
    CHECK(cell["terms"][0]["partition"] == nlohmann::json::array({3}));
    CHECK(cell["terms"][0]["coeff"] == "-9");
    CHECK(cell["terms"][1]["partition"] == nlohmann::json::array({2, 1}));
    CHECK(cell["terms"][1]["coeff"] == "1");
}

TEST_CASE("relation cells as text") {
    RunResult r = run("relations --kappa0 4 --degree 3 --dmax 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("r=5 d=2: -9*k3 + k1*k2 = 0") != std::string::npos);
}

TEST_CASE("output is byte deterministic across runs") {
    for (const char* args : {"--format json relations --kappa0 4 --degree 3",
                             "betti0 --n 9 --method pairing",
                             "--format json universality --genus 1 --n 2 --dlo 0 --dhi 1"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").code == 2);                                  // missing subcommand
    CHECK(run("betti0 --n 8 --bogus 1").code == 2);            // unknown flag
    CHECK(run("betti0 --n 2").code == 2);                      // below the stable range
    CHECK(run("betti0 --n 8 --method magic").code == 2);       // bad enum value
    CHECK(run("express --kappa0 6 --target 3").code == 2);     // required generator
    CHECK(run("verify --suite nonsense").code == 2);           // unknown suite
    CHECK(run("socle --genus 0 --n 2").code == 2);             // unstable input
}

TEST_CASE("eliminating a generator from the command line") {
    RunResult r = run("express --kappa0 4 --target 3");
    CHECK(r.code == 0);
    CHECK(r.out == "-9*k3 + k1*k2 = 0\n");
}

TEST_CASE("socle value") {
    RunResult r = run("socle --genus 2 --n 0 --kappa 1");
    CHECK(r.code == 0);
    CHECK(r.out == "7/5760\n");
}

TEST_CASE("series families") {
    RunResult r = run("series --family alpha --count 4");
    CHECK(r.code == 0);
    CHECK(r.out == "1 5/2 37/3 353/4\n");

    RunResult b = run("series --family beta --count 4");
    CHECK(b.code == 0);
    CHECK(b.out == "-1 -2 -10 -74\n");
}

TEST_CASE("pairing matrix rendering") {
    RunResult r = run("pairing --family mu --genus 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("1/576") != std::string::npos);

    RunResult j = run("--format json pairing --family mu --genus 2");
    REQUIRE(j.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["rows"] == 1);
    CHECK(parsed["entries"][0][0] == "1/576");
    CHECK(parsed["row_labels"][0] == nlohmann::json::array({1}));
}

TEST_CASE("basis listing") {
    RunResult r = run("basis --n 10 --d 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("k6\n") != std::string::npos);
    CHECK(r.out.find("k1*k5\n") != std::string::npos);
    CHECK(r.out.find("k2*k4\n") != std::string::npos);
    CHECK(r.out.find("k3^2\n") != std::string::npos);
    CHECK(r.out.find("certified") != std::string::npos);
}

TEST_CASE("json serialization conventions") {
    using nlohmann::json;
    using namespace kwb;

    // partitions stay descending
    CHECK(partition_to_json({4, 2, 1}) == json::array({4, 2, 1}));

    // rationals are strings, integers without the denominator
    KappaPoly p;
    p += KappaPoly::monomial({2, 1}, Rational(1, 6));
    p += KappaPoly::monomial({3}, Rational(-2));
    json terms = kappa_poly_to_json(p);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0]["coeff"] == "-2");
    CHECK(terms[1]["coeff"] == "1/6");

    // a missing lower bound serializes as null
    UniversalityReport rep;
    rep.g = 5;
    rep.n = 0;
    rep.s = 8;
    UniversalityRow row;
    row.degree = 6;
    row.predicted = 4;
    row.upper = 4;
    row.has_lower = false;
    row.verdict = "gap";
    rep.rows.push_back(row);
    json out = universality_report_to_json(rep);
    CHECK(out["rows"][0]["lower_bound"].is_null());
    CHECK(out["rows"][0]["verdict"] == "gap");
}
