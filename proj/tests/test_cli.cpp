#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lfi/cli.hpp"
#include "lfi/report_io.hpp"

using namespace lfi;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lfi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
    const auto r = run({"eval", "--op", "riemann-liouville", "--alpha", "0.5", "--t", "1", "--f", "1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-10));
    CHECK(j["command"] == "eval");
    const auto jk = run({"eval", "--op", "jackson", "--q", "0.5", "--t", "1", "--f", "1"});
    REQUIRE(jk.code == 0);
    CHECK(json::parse(jk.out)["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(run({"eval", "--op", "hadamard", "--alpha", "1", "--t", "0.5", "--f", "1"}).code == 3);
    CHECK(run({"eval", "--op", "riemann", "--a", "0", "--b", "1", "--f", "log("}).code == 2);
    CHECK(run({"eval", "--op", "riemann", "--a", "0", "--b", "1", "--f", "log(x - 2)"}).code == 3);
    CHECK(run({"eval", "--op", "nope", "--f", "1"}).code == 2);
    CHECK(run({"eval", "--f", "1"}).code == 2);
}

TEST_CASE("functional descriptors") {
    const auto D = parse_functional("discrete:points=1;2;3,weights=1;2;3");
    CHECK(D.size() == 3);
    CHECK(D.mass() == 6.0);
    CHECK(parse_functional("rl:alpha=0.5,t=1,n=16").kind() == FunctionalKind::RiemannLiouville);
    CHECK_THROWS_AS(parse_functional("riemann:a=0,b=1,zeta=3"), UsageError);
    CHECK_THROWS_AS(parse_functional("riemann:a=0,b"), UsageError);
    CHECK_THROWS_AS(parse_functional("riemann:a=zero,b=1"), UsageError);
}

TEST_CASE("check exit codes") {
    const auto ok = run({"check", "--checker", "chebyshev-two", "--A", "discrete:points=1;2", "--f", "x", "--g",
                         "2*x - 1"});
    REQUIRE(ok.code == 0);
    const auto doc = document_from_json(json::parse(ok.out));
    REQUIRE(doc.reports.size() == 1);
    CHECK(doc.reports[0].slack == doctest::Approx(4.0));
    CHECK(doc.reports[0].lhs == doctest::Approx(28.0));
    CHECK(doc.command == "check");

    const auto holder = run({"check", "--checker", "holder-pair", "--A", "riemann:a=0,b=1", "--f", "x", "--g", "x",
                             "--const", "H1=1", "--const", "H2=1", "--const", "r=1", "--const", "s=1"});
    CHECK(holder.code == 0);

    const auto near = run({"check", "--checker", "near-function", "--A", "riemann:a=0,b=1", "--f", "x", "--phi",
                           "x + 0.1", "--const", "M=0"});
    CHECK(near.code == 4);

    const auto missing = run({"check", "--checker", "chebyshev-two", "--A", "riemann:a=0,b=1", "--f", "x"});
    CHECK(missing.code == 2);
    CHECK(run({"check", "--checker", "nope", "--A", "riemann:a=0,b=1"}).code == 2);

    const auto had = run({"check", "--checker", "hadamard-example", "--alpha", "1", "--beta", "1", "--t",
                          "2.718281828459045", "--f", "x", "--g", "x", "--const", "M1=1", "--const", "M2=1"});
    CHECK(had.code == 0);
}

TEST_CASE("mismatched ordering is a hypothesis failure") {
    const auto r = run({"check", "--checker", "chebyshev-two", "--A", "discrete:points=1;2", "--f", "x", "--g", "x",
                        "--ordering", "asynchronous", "--tol-abs", "1e-12", "--tol-rel", "0"});
    CHECK(r.code == 4);
}

TEST_CASE("suite") {
    const auto a = run({"suite", "--trials", "1", "--seed", "7"});
    REQUIRE(a.code == 0);
    const auto b = run({"suite", "--trials", "1", "--seed", "7", "--threads", "4"});
    CHECK(a.out == b.out);
    const auto d = run({"suite", "--trials", "2", "--kinds", "discrete"});
    REQUIRE(d.code == 0);
    const json j = json::parse(d.out);
    CHECK(j["summary"]["violations"] == 0);
    CHECK(j["reports"][0]["tolerance"]["abs"] == 1e-10);
    CHECK(run({"suite", "--trials", "0"}).code == 2);
    CHECK(run({"suite", "--kinds", "nope"}).code == 2);
    // only violations fail a suite
    const auto bad = run({"suite", "--trials", "2", "--kinds", "riemann", "--corrupt"});
    CHECK(bad.code == 0);
    CHECK(json::parse(bad.out)["summary"]["hypothesis_failures"].get<int>() > 0);
}

TEST_CASE("output files") {
    const std::string json_path = "lfi_cli_test_out.json", csv_path = "lfi_cli_test_out.csv";
    const auto r = run({"suite", "--trials", "1", "--kinds", "discrete", "--checkers", "chebyshev-two", "-o",
                        json_path, "--csv", csv_path});
    REQUIRE(r.code == 0);
    std::ifstream js(json_path), cs(csv_path);
    REQUIRE(js.good());
    REQUIRE(cs.good());
    const json j = json::parse(js);
    CHECK(j["command"] == "suite");
    std::string header;
    std::getline(cs, header);
    CHECK(header == "theorem,kind,trial,lhs,rhs,slack,verdict");
    std::remove(json_path.c_str());
    std::remove(csv_path.c_str());
}

TEST_CASE("help documents the grammar") {
    const auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("factor := atom ('^' factor)?") != std::string::npos);
    CHECK(run({}).code == 2);
}

}
