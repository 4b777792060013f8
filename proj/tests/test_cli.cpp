#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dahaknots/cli_config.hpp"
#include "dahaknots/errors.hpp"

using namespace dahaknots;

namespace {

RatQT ratqt_from_json(const nlohmann::json& j) {
    auto build = [](const nlohmann::json& arr) {
        LaurentQT p;
        for (const auto& t : arr)
            p.add_term(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                       rat_from_string(t[2].get<std::string>()));
        return p;
    };
    return RatQT(build(j["num"]), build(j["den"]));
}

}  // namespace

TEST_CASE("parse_args accepts the documented forms") {
    RunConfig cfg = parse_args(
        {"iterated", "--n", "2", "--pairs", "2,3;2,5", "--convention", "topological"});
    CHECK(cfg.command == Command::Iterated);
    CHECK(cfg.n == 2);
    CHECK(cfg.pairs.pairs ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}});
    CHECK(cfg.pairs.convention == Convention::Topological);

    RunConfig v = parse_args({"verify", "--n", "2", "--pairs", "2,3", "--convention",
                              "newton"});
    CHECK(v.command == Command::Verify);
    CHECK(v.pairs.convention == Convention::Newton);

    RunConfig t = parse_args({"torus", "--n", "2", "--r", "3", "--s", "2", "--family",
                              "sign", "--format", "json"});
    CHECK(t.command == Command::Torus);
    CHECK(t.family == Family::Sign);
    CHECK(t.format == OutputFormat::Json);
}

TEST_CASE("parse_args rejects bad input naming the offender") {
    CHECK_THROWS_WITH_AS(parse_args({"torus", "--n", "2", "--r", "2", "--s", "4"}),
                         doctest::Contains("gcd(2,4)"), usage_error);
    CHECK_THROWS_AS(parse_args({"iterated", "--n", "0", "--pairs", "2,3"}), usage_error);
    CHECK_THROWS_AS(parse_args({"iterated", "--n", "2", "--pairs", "2,x"}), usage_error);
    CHECK_THROWS_AS(parse_args({"iterated", "--n", "2", "--pairs", "4,6"}), usage_error);
    CHECK_THROWS_AS(parse_args({"iterated", "--n", "2"}), usage_error);
    CHECK_THROWS_AS(parse_args({"frobnicate"}), usage_error);
}

TEST_CASE("output is deterministic") {
    RunConfig cfg = parse_args({"iterated", "--n", "2", "--pairs", "2,3", "--format", "json"});
    std::ostringstream a, b;
    CHECK(execute(cfg, a) == 0);
    CHECK(execute(cfg, b) == 0);
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
}

TEST_CASE("emitted JSON round-trips to the same value") {
    RunConfig cfg = parse_args({"torus", "--n", "2", "--r", "2", "--s", "3", "--format",
                                "json"});
    std::ostringstream out;
    REQUIRE(execute(cfg, out) == 0);
    auto j = nlohmann::json::parse(out.str());
    CHECK(ratqt_from_json(j["value"]) == cherednik_torus(2, 2, 3));

    RunConfig mac = parse_args({"macdonald", "--n", "2", "--format", "json"});
    std::ostringstream mout;
    REQUIRE(execute(mac, mout) == 0);
    auto mj = nlohmann::json::parse(mout.str());
    SymPoly rebuilt;
    for (const auto& item : mj["value_m"])
        rebuilt.add(item[0].get<std::int64_t>(), ratqt_from_json(item[1]));
    CHECK(rebuilt == macdonald_poly(2));
}

TEST_CASE("verify command reports and exits per contract") {
    RunConfig good = parse_args({"verify", "--n", "2", "--pairs", "2,3"});
    std::ostringstream out;
    CHECK(execute(good, out) == 0);
    CHECK(out.str().find("match: yes") != std::string::npos);

    RunConfig bad = good;
    bad.corrupt_prefactor = true;
    std::ostringstream bout;
    CHECK(execute(bad, bout) == 1);
    CHECK(bout.str().find("match: no") != std::string::npos);
    CHECK(bout.str().find("lhs - rhs") != std::string::npos);

    RunConfig newton = parse_args({"verify", "--n", "2", "--pairs", "3,2;5,2",
                                   "--convention", "newton", "--format", "json"});
    std::ostringstream nout;
    CHECK(execute(newton, nout) == 0);
    auto nj = nlohmann::json::parse(nout.str());
    CHECK(nj["verify"]["match"].get<bool>());
    CHECK(nj["verify"]["monomial_k"].is_number_integer());
}
