#include "expbasis/cli.hpp"
#include "expbasis/errors.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>

using namespace expbasis;
using Json = nlohmann::json;

namespace {

const std::string kData = EXPBASIS_TEST_DATA;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome runCli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

TEST_CASE("analyze two-cube.json") {
    const auto r = runCli({"analyze", data("two-cube.json"), "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["is_basis"] == true);
    CHECK(j["lambda"].get<double>() == doctest::Approx(0.5857864).epsilon(1e-7));
    CHECK(j["Lambda"].get<double>() == doctest::Approx(3.4142136).epsilon(1e-7));
    CHECK(j["method"] == "exact");
    CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("exit codes") {
    SUBCASE("--strict on a non-basis") {
        const auto r = runCli({"analyze", data("dup-shift.json"), "--strict", "--json"});
        CHECK(r.code == 1);
        const auto j = Json::parse(r.out);
        CHECK(j["is_basis"] == false);
        CHECK(j["condition"].is_null());
        CHECK(runCli({"analyze", data("dup-shift.json")}).code == 0);
    }
    SUBCASE("duplicate cube") {
        const auto r = runCli({"analyze", data("broken.json")});
        CHECK(r.code == 2);
        CHECK(r.err.find("DuplicateCube") != std::string::npos);
    }
    SUBCASE("input errors") {
        CHECK(runCli({"analyze", data("no-such-file.json")}).code == 2);
        CHECK(runCli({"frobnicate"}).code == 2);
        CHECK(runCli({}).code == 2);
        CHECK(runCli({"sample", data("two-cube.json"), "--trials", "5"}).code == 2);
        CHECK(runCli({"sdelta", data("two-cube.json"), "--delta", "1/0"}).code == 2);
        const auto d = runCli({"find-shift", data("degenerate-diagonal.json")});
        CHECK(d.code == 2);
        CHECK(d.err.find("DegenerateDiagonal") != std::string::npos);
    }
    SUBCASE("help") { CHECK(runCli({"--help"}).code == 0); }
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"analyze", data("three-cube-2d.json"), "--json"},
        {"verify", data("three-cube-2d.json"), "--radius", "2", "--trials", "20", "--seed", "11", "--json"},
        {"sample", data("staircase.json"), "--trials", "200", "--seed", "5", "--json"},
        {"bounds", data("two-cube.json"), "--literal", "--json"},
    };
    for (const auto& c : commands) {
        const auto a = runCli(c);
        const auto b = runCli(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    auto timed = std::vector<std::string>{"analyze", data("two-cube.json"), "--json", "--timings"};
    CHECK(Json::parse(runCli(timed).out).contains("timing_ms"));
}

TEST_CASE("bounds reports carry the analyze constants") {
    const auto j = Json::parse(runCli({"bounds", data("staircase.json"), "--delta", "1/3,1/5", "--json"}).out);
    CHECK(j.contains("lambda"));
    CHECK(j.contains("Lambda"));
    CHECK(j["contained"] == true);
    CHECK(j["s"].size() == 3);
    CHECK(j["lower"].get<double>() <= j["lambda"].get<double>());
}

TEST_CASE("other subcommands") {
    SUBCASE("hilbert apply") {
        const auto j = Json::parse(runCli({"hilbert", "apply", "--t", "1", "--seq", data("delta0.json"), "--radius", "3", "--json"}).out);
        REQUIRE(j["entries"].size() == 1);
        CHECK(j["entries"][0]["index"][0] == -1);
        CHECK(j["entries"][0]["re"] == -1.0);
        CHECK(j["tail_bound"] == 0.0);
    }
    SUBCASE("hilbert check") {
        const auto r = runCli({"hilbert", "check", "--t", "0.5", "--s", "0.25", "--seq", data("delta0.json"),
                               "--radius", "100", "--steps", "0.1,0.01", "--json"});
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["all_within_bounds"] == true);
    }
    SUBCASE("normalize") {
        const auto j = Json::parse(runCli({"normalize", "--rects", data("half-intervals.json"), "--json"}).out);
        CHECK(j["volume_factor"] == 4);
        CHECK(j["N"] == 3);
    }
    SUBCASE("find-shift and complement") {
        const auto f = Json::parse(runCli({"find-shift", data("staircase.json"), "--json"}).out);
        CHECK(f["L"] == 3);
        CHECK(f["is_basis"] == true);
        const auto c = Json::parse(runCli({"complement", data("staircase.json"), "--L", "3", "--json"}).out);
        CHECK(c["holds"] == true);
    }
    SUBCASE("sdelta") {
        const auto j = Json::parse(runCli({"sdelta", data("staircase.json"), "--delta", "1/3,1/3", "--json"}).out);
        CHECK(j["is_basis"] == true);
        CHECK(j["orthogonal"] == true);
    }
}

TEST_CASE("config parsing") {
    const auto exact = cli::parseConfigText(R"({"dimension":1,"cubes":[[0],[2]],"shifts":[["1/3"],["0"]]})");
    REQUIRE(exact.shifts);
    CHECK(exact.shifts->kind() == ScalarKind::Exact);
    const auto mixed = cli::parseConfigText(R"({"dimension":1,"cubes":[[0],[2]],"shifts":[["1/3"],[0.5]]})");
    CHECK(mixed.shifts->kind() == ScalarKind::Floating);
    CHECK_FALSE(cli::parseConfigText(R"({"dimension":2,"cubes":[[0,1]]})").shifts);
    auto kindOf = [](const std::string& text) {
        try {
            cli::parseConfigText(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kindOf(R"({"dimension":1,"cubes":[[0]],"shifts":[["x"]]})") == ErrorKind::Parse);
    CHECK(kindOf(R"({"cubes":[[0]]})") == ErrorKind::Parse);
    CHECK(kindOf(R"({"dimension":1,"cubes":[[0.5]]})") == ErrorKind::Parse);
    CHECK(kindOf(R"({"dimension":2,"cubes":[[0]]})") == ErrorKind::DimensionMismatch);
    CHECK(kindOf("{not json") == ErrorKind::Parse);

    const auto v = cli::parseScalarList("1/3, -2, 0.25");
    REQUIRE(v.size() == 3);
    CHECK(v[0].isExact());
    CHECK(v[1].isExact());
    CHECK_FALSE(v[2].isExact());
    CHECK_THROWS_AS(cli::parseScalarList("1/3,,2"), Error);

    const auto seq = cli::parseSequenceText(R"({"dimension":2,"entries":[{"index":[1,-1],"re":2,"im":-1}]})");
    CHECK(seq.at({1, -1}) == Complex(2.0, -1.0));
}
