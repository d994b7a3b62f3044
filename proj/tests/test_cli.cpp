#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "singideal/cli.hpp"

using namespace singideal;

namespace {

RunConfig config_for(Command c, std::string group, std::string family) {
    RunConfig config;
    config.command = c;
    config.group_spec = std::move(group);
    config.family_spec = std::move(family);
    return config;
}

std::vector<std::string> strings(const json& j) {
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(x.get<std::string>());
    return out;
}

const std::string s3_transpositions = R"({"conjugacy_class_of":[0,1]})";

}  // namespace

TEST_CASE("analyze examples") {
    const CommandResult z2 =
        run(config_for(Command::analyze, R"({"kind":"cyclic","n":2})", R"({"subgroups":[[0,1]]})"));
    CHECK(z2.exit_code == exit_ok);
    CHECK(z2.report["algebraic_kernel_dim"] == 1);
    CHECK(z2.report["full_kernel_dim"] == 1);
    CHECK(strings(z2.report["witness"]["coeffs"]) == std::vector<std::string>{"1", "-1"});
    CHECK(z2.report["cross_checks"]["q_kernel_dim"] == 1);

    const CommandResult v4 = run(config_for(
        Command::analyze, R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":2}]})",
        R"({"minimal":true})"));
    CHECK(v4.exit_code == exit_ok);
    CHECK(v4.report["algebraic_kernel_dim"] == 0);
    CHECK(v4.report["full_kernel_dim"] == 0);
    CHECK(v4.report["witness"].is_null());
    CHECK(v4.report["weak_containment"] == true);

    const CommandResult s3 = run(config_for(Command::analyze, R"({"kind":"symmetric","n":3})", s3_transpositions));
    CHECK(s3.exit_code == exit_ok);
    CHECK(s3.report["algebraic_kernel_dim"].get<std::size_t>() >= 1);
    std::vector<std::string> sign;
    for (std::size_t i = 0; i < 6; ++i) sign.push_back(std::to_string(oracle::lexicographic_sign(3, i)));
    CHECK(strings(s3.report["witness"]["coeffs"]) == sign);
}

TEST_CASE("report JSON round-trips") {
    for (const auto& [group, family] : std::vector<std::pair<std::string, std::string>>{
             {R"({"kind":"cyclic","n":2})", R"({"subgroups":[[0,1]]})"},
             {R"({"kind":"symmetric","n":3})", s3_transpositions},
             {R"({"kind":"quaternion8"})", R"({"minimal":true})"},
             {R"({"kind":"dihedral","n":4})", R"({"subgroups":[[0]]})"}}) {
        const CommandResult r = run(config_for(Command::analyze, group, family));
        REQUIRE(r.exit_code == exit_ok);
        const IdealReport parsed = report_from_json(json::parse(serialize(r.report)));
        CHECK(to_json(parsed) == [&] {
            json j = r.report;
            for (const char* k : {"group", "family", "auto_closed"}) j.erase(k);
            return j;
        }());
        CHECK(report_from_json(to_json(parsed)) == parsed);
    }
    CHECK_THROWS_AS(report_from_json(json::parse(R"({"algebraic_kernel_dim":1})")), Error);
}

TEST_CASE("ai-atlas examples") {
    RunConfig config;
    config.command = Command::ai_atlas;

    config.max_order = 1;
    const CommandResult one = run(config);
    REQUIRE(one.report["rows"].size() == 1);
    CHECK(one.report["rows"][0]["ai_span"] == true);
    CHECK(one.report["disagreements"] == 0);

    config.max_order = 4;
    const CommandResult four = run(config);
    CHECK(four.report["disagreements"] == 0);
    for (const auto& row : four.report["rows"]) {
        const bool klein = row["factors"] == json::array({2, 2});
        CHECK(row["ai_span"] == !klein);
        CHECK(row["agree"] == true);
    }
    CHECK(four.report["rows"].size() == 5);

    config.max_order = 8;
    const CommandResult eight = run(config);
    CHECK(eight.report["disagreements"] == 0);
    std::vector<std::string> failing;
    for (const auto& row : eight.report["rows"]) {
        if (row["ai_span"] == false) failing.push_back(row["group"].get<std::string>());
    }
    CHECK(failing.size() == 3);  // (Z2)^2, Z4xZ2, (Z2)^3

    config.max_order = 65;
    CHECK(run(config).exit_code == exit_parse_error);
}

TEST_CASE("hls examples") {
    RunConfig z2 = config_for(Command::hls, R"({"kind":"cyclic","n":2})", R"({"subgroups":[[0,1]]})");
    z2.depth = 3;
    const CommandResult a = run(z2);
    CHECK(a.exit_code == exit_ok);
    CHECK(a.report["extremely_dangerous"] == true);
    CHECK(a.report["witness_lifted"] == true);
    CHECK(a.report["verify_singular"] == true);
    CHECK(a.report["units"] == 4);

    const CommandResult b =
        run(config_for(Command::hls, R"({"kind":"symmetric","n":3})", R"({"subgroups":[[0],[0,1]]})"));
    CHECK(b.exit_code == exit_ok);
    CHECK(b.report["extremely_dangerous"] == false);
    CHECK(b.report["auto_closed"] == true);

    RunConfig s3 = config_for(Command::hls, R"({"kind":"symmetric","n":3})", s3_transpositions);
    s3.depth = 2;
    const CommandResult c = run(s3);
    CHECK(c.report["extremely_dangerous"] == true);
    CHECK(c.report["essential_fiber"].size() == 3);
    CHECK(c.report["verify_singular"] == true);
    std::vector<std::string> sign;
    for (std::size_t i = 0; i < 6; ++i) sign.push_back(std::to_string(oracle::lexicographic_sign(3, i)));
    CHECK(strings(c.report["witness"]) == sign);

    s3.depth = 0;
    CHECK(run(s3).exit_code == exit_parse_error);
}

TEST_CASE("normcheck examples") {
    RunConfig z6 = config_for(Command::normcheck, R"({"kind":"cyclic","n":6})", R"({"subgroups":[[0,3]]})");
    const CommandResult a = run(z6);
    CHECK(a.exit_code == exit_ok);
    CHECK(a.report["max_residual"].get<double>() < 1e-8);
    CHECK(a.report["passed"] == true);

    RunConfig s3 = config_for(Command::normcheck, R"({"kind":"symmetric","n":3})", s3_transpositions);
    s3.subsets = "[[0,1,2]]";
    s3.trials = 5;
    const CommandResult all = run(s3);
    CHECK(all.exit_code == exit_ok);
    CHECK(all.report["subsets"].size() == 1);
    CHECK(all.report["max_residual"].get<double>() < 1e-12);

    s3.subsets = "[[0],[5]]";
    const CommandResult bad = run(s3);
    CHECK(bad.exit_code == exit_parse_error);
    CHECK(bad.report["error"] == "unit-not-found");
    s3.subsets = "[[]]";
    CHECK(run(s3).report["error"] == "empty-X");

    s3.subsets = "";
    s3.trials = 0;
    CHECK(run(s3).exit_code == exit_parse_error);
    s3.trials = 1;
    s3.tol = 0.0;
    CHECK(run(s3).exit_code == exit_parse_error);
}

TEST_CASE("normcheck exit code 3 when the residual reaches the tolerance") {
    RunConfig s3 = config_for(Command::normcheck, R"({"kind":"symmetric","n":3})", s3_transpositions);
    s3.trials = 20;
    const CommandResult base = run(s3);
    REQUIRE(base.exit_code == exit_ok);
    const double worst = base.report["max_residual"].get<double>();
    if (worst > 0.0) {
        s3.tol = worst;  // the pass condition is strict
        const CommandResult tight = run(s3);
        CHECK(tight.exit_code == exit_tolerance);
        CHECK(tight.report["passed"] == false);
    } else {
        MESSAGE("residuals are exactly zero; strictness check skipped");
    }
}

TEST_CASE("witness command") {
    const CommandResult z2 =
        run(config_for(Command::witness, R"({"kind":"cyclic","n":2})", R"({"subgroups":[[0,1]]})"));
    CHECK(strings(z2.report["witness"]) == std::vector<std::string>{"1", "-1"});
    const CommandResult none = run(config_for(Command::witness, R"({"kind":"cyclic","n":5})", R"({"subgroups":[[0]]})"));
    CHECK(none.report["witness"].is_null());
}

TEST_CASE("identical configs give byte-identical reports") {
    RunConfig n = config_for(Command::normcheck, R"({"kind":"symmetric","n":3})", s3_transpositions);
    n.trials = 10;
    n.seed = 99;
    CHECK(serialize(run(n).report) == serialize(run(n).report));
    RunConfig a = config_for(Command::analyze, R"({"kind":"dihedral","n":5})", R"({"minimal":true})");
    CHECK(serialize(run(a).report) == serialize(run(a).report));
    RunConfig atlas;
    atlas.command = Command::ai_atlas;
    atlas.max_order = 16;
    CHECK(serialize(run(atlas).report) == serialize(run(atlas).report));
    n.seed = 100;
    CHECK(run(n).report["subsets"] != run(config_for(Command::normcheck, n.group_spec, n.family_spec)).report["subsets"]);
}

TEST_CASE("input errors map to exit code 1") {
    CHECK(run(config_for(Command::analyze, R"({"kind":"bogus"})", R"({"minimal":true})")).exit_code ==
          exit_parse_error);
    CHECK(run(config_for(Command::analyze, "{not json", R"({"minimal":true})")).exit_code == exit_parse_error);
    CHECK(run(config_for(Command::analyze, "/nonexistent/group.json", R"({"minimal":true})")).exit_code ==
          exit_parse_error);
    CHECK(run(config_for(Command::analyze, R"({"kind":"cyclic","n":4})", R"({"subgroups":[[0,1]]})")).exit_code ==
          exit_parse_error);
    RunConfig strict = config_for(Command::analyze, R"({"kind":"symmetric","n":3})", R"({"subgroups":[[0,1]]})");
    strict.auto_close = false;
    const CommandResult r = run(strict);
    CHECK(r.exit_code == exit_parse_error);
    CHECK(r.report["error"] == "not-invariant");
    strict.auto_close = true;
    CHECK(run(strict).exit_code == exit_ok);
}

TEST_CASE("exit-code mapping") {
    CHECK(exit_code_for(ErrorCode::internal_inconsistency) == exit_inconsistency);
    CHECK(exit_code_for(ErrorCode::parse_error) == exit_parse_error);
    CHECK(exit_code_for(ErrorCode::not_invariant) == exit_parse_error);
}

TEST_CASE("specs load from files") {
    const std::string path = "singideal_test_group.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"cayley","table":[[0,1],[1,0]]})";
    }
    const CommandResult r = run(config_for(Command::analyze, path, R"({"subgroups":[[0,1]]})"));
    std::remove(path.c_str());
    CHECK(r.exit_code == exit_ok);
    CHECK(r.report["algebraic_kernel_dim"] == 1);
}
