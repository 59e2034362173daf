#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "g1chow/cli.hpp"
#include "g1chow/polynomial.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "g1chow");
    std::ostringstream out, err;
    int code = g1chow::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("present a Q-space as json") {
    auto r = run({"present", "--n", "2", "--space", "dm", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("generators"));
    CHECK(j.at("generators").size() == 2);
}

TEST_CASE("present the Gorenstein ring as text") {
    auto r = run({"present", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("t{1,2}") != std::string::npos);
}

TEST_CASE("closure classes") {
    auto r = run({"class", "--n", "2", "--ell", "1|2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "24*l^3 + 24*l^2*t{1,2}\n");

    auto j = run({"class", "--n", "3", "--ell", "1|2|3", "--format", "json", "--serial"});
    REQUIRE(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    auto poly = g1chow::IntPolynomial::parse(parsed.at("class").get<std::string>());
    CHECK(poly.to_string() == parsed.at("class").get<std::string>());
    CHECK(g1chow::IntPolynomial::from_json(parsed.at("terms").dump()) == poly);

    CHECK(run({"class", "--n", "4", "--nod", "1 2|3 4"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"class", "--n", "3", "--ell", "1|2"}).code == 2);
    CHECK(run({"class", "--n", "3", "--ell", "1|1 2 3"}).code == 2);
    CHECK(run({"class", "--n", "3"}).code == 2);
    CHECK(run({"present", "--n", "3", "--space", "bogus"}).code == 2);
    CHECK(run({"present", "--n", "3", "--space", "smyth:x"}).code == 2);
    CHECK(run({"restrict", "--n", "3", "--stratum", "1 2|3", "--poly", "l +"}).code == 2);
    CHECK(run({"verify", "nothing"}).code == 2);
    CHECK(run({"hilbert", "--n", "9"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("verification suites") {
    auto counts = run({"verify", "counts"});
    CHECK(counts.code == 0);
    CHECK(counts.out.find("PASS") != std::string::npos);
    CHECK(counts.out.find("FAIL") == std::string::npos);

    auto rel = run({"verify", "relations", "--n", "3", "--format", "json"});
    CHECK(rel.code == 0);
    CHECK(nlohmann::json::parse(rel.out).at("passed").get<bool>());

    CHECK(run({"verify", "appendix", "--n", "2"}).code == 0);
    CHECK(run({"verify", "torsion", "--n", "2"}).code == 0);
    CHECK(run({"verify", "duality", "--n", "3", "--space", "smyth:1"}).code == 0);
}

TEST_CASE("hilbert and restrict") {
    auto h = run({"hilbert", "--n", "2", "--space", "dm", "--format", "json"});
    REQUIRE(h.code == 0);
    auto j = nlohmann::json::parse(h.out);
    CHECK(j.at("ranks") == nlohmann::json::array({1, 2, 1}));
    CHECK(j.at("palindromic").get<bool>());

    auto r = run({"restrict", "--n", "5", "--stratum", "1 2 3|4|5", "--poly", "t{4,5}*l^2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "0\n");
    auto s = run({"restrict", "--n", "3", "--stratum", "1 2|3", "--poly", "l^2 + l*t{1,3}", "--format", "json"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out).at("restriction") == "ls^2");
}

TEST_CASE("fixture directory override") {
    const char* dir = std::getenv("G1CHOW_DATA_DIR");
    if (!dir) return;
    CHECK(run({"verify", "appendix", "--n", "3", "--fixtures", dir}).code == 0);
    CHECK(run({"verify", "appendix", "--n", "1", "--fixtures", "/nonexistent"}).code != 0);
}
