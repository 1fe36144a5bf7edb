#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharpgpt/descriptors.hpp"
#include "sharpgpt/suite.hpp"

#include <cmath>
#include <string>

using namespace sharpgpt;

TEST_CASE("theory parsing") {
    const auto qutrit = parse_theory(R"({"kind":"complex_hermitian","n":3})");
    CHECK(qutrit.kind == AlgebraKind::complex_hermitian(3));
    CHECK(qutrit.seed == 0);

    const auto classical = parse_theory(R"({"kind":"classical","d":4,"seed":7})");
    CHECK(classical.kind == AlgebraKind::classical(4));
    CHECK(classical.seed == 7);

    CHECK(parse_theory(R"({"kind":"spin_factor","m":5})").kind ==
          AlgebraKind::spin_factor(5));
    CHECK(parse_theory(R"({"kind":"quaternionic_hermitian","n":2})").kind ==
          AlgebraKind::quaternionic_hermitian(2));

    CHECK_THROWS_AS(parse_theory(R"({"kind":"albert"})"), ParseError);
    CHECK_THROWS_AS(parse_theory(R"({"kind":"classical","n":3})"), ParseError);
    CHECK_THROWS_AS(parse_theory(R"({"kind":"classical","d":3,"x":1})"), ParseError);
    CHECK_THROWS_AS(parse_theory(R"({"kind":"classical","d":9})"), ParseError);      // rank cap
    CHECK_THROWS_AS(parse_theory(R"({"kind":"spin_factor","m":16})"), ParseError);   // ambient cap
    CHECK_THROWS_AS(parse_theory(R"({"kind":"classical","d":3,"seed":-1})"), ParseError);
    CHECK_THROWS_AS(parse_theory("not json"), ParseError);
    CHECK_NOTHROW(parse_theory(R"({"kind":"spin_factor","m":15})"));
}

TEST_CASE("experiment parsing and realization") {
    const std::string text = R"({
        "theory": {"kind": "complex_hermitian", "n": 2},
        "blocks": [[1], [2]],
        "state": [0.5, 0.5, 0.7071067811865476, 0.0],
        "effect": [0.5, 0.5, 0.7071067811865476, 0.0]
    })";
    const auto descriptor = parse_experiment(text);
    CHECK(descriptor.order == 2);
    CHECK(descriptor.blocks == std::vector<std::vector<int>>{{0}, {1}});
    CHECK_FALSE(descriptor.seed.has_value());

    const auto exp = experiment_from(descriptor);
    // no seed: the canonical diagonal frame
    CHECK(exp.frame[0].coords(0) == 1.0);
    CHECK(exp.frame[1].coords(1) == 1.0);
    const auto table = slit_values(exp);
    CHECK(sorkin_order(table, 2) == doctest::Approx(0.5).epsilon(1e-12));

    // seeded variant is reproducible and random
    const auto seeded = parse_experiment(
        R"({"theory": {"kind": "complex_hermitian", "n": 2}, "blocks": [[1],[2]], "seed": 5})");
    const auto exp_a = experiment_from(seeded);
    const auto exp_b = experiment_from(seeded);
    CHECK((exp_a.rho.element.coords - exp_b.rho.element.coords).norm() == 0.0);
    CHECK(std::abs(trace_of(exp_a.rho.element) - 1.0) < 1e-12);

    CHECK_THROWS_AS(parse_experiment(R"({"blocks": [[1]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_experiment(
            R"({"theory": {"kind":"classical","d":2}, "blocks": [[1],[1]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_experiment(
            R"({"theory": {"kind":"classical","d":2}, "blocks": [[3]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_experiment(
            R"({"theory": {"kind":"classical","d":2}, "blocks": [[1]], "order": 2})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_experiment(
            R"({"theory": {"kind":"classical","d":2}, "blocks": [[1],[2]], "state": [1.0]})"),
        ParseError);

    // a state outside the cone is rejected during realization
    const auto bad = parse_experiment(
        R"({"theory": {"kind": "complex_hermitian", "n": 2}, "blocks": [[1],[2]],
            "state": [0.0, 0.0, 1.4142135623730951, 0.0]})");
    CHECK_THROWS_AS(experiment_from(bad), std::invalid_argument);
}

TEST_CASE("value table parsing") {
    const auto table = parse_value_table(
        R"({"n": 2, "values": {"1": 0.25, "2": 0.25, "12": 1.0}})");
    CHECK(table.order == 2);
    CHECK(table.value(0b11) == 1.0);
    CHECK(sorkin_order(table, 2) == 0.5);

    CHECK_THROWS_AS(parse_value_table(R"({"n": 2, "values": {"1": 0.25, "12": 1.0}})"),
                    ParseError);  // missing "2"
    CHECK_THROWS_AS(parse_value_table(R"({"n": 2, "values": {"1": 1, "2": 1, "21": 1}})"),
                    ParseError);  // descending digits
    CHECK_THROWS_AS(parse_value_table(R"({"n": 10, "values": {}})"), ParseError);
    CHECK_THROWS_AS(parse_value_table(R"({"n": 2, "values": {"1":1,"2":1,"12":1},"x":0})"),
                    ParseError);
}

TEST_CASE("report emission") {
    CHECK(format_value(0.5) == "0.500000000000");
    CHECK(format_value(-1.0) == "-1.000000000000");
    CHECK(format_value(-1e-16) == "0.000000000000");  // negative zero normalized
    CHECK(format_value(1.0000000000000002) == "1.000000000000");

    // values indexed by mask-1: {1},{2},{12},{3},{13},{23},{123}
    const auto table = make_value_table(3, {0.1, 0.2, 0.4, 0.3, 0.5, 0.6, 0.7});
    const std::string report = emit_report(table, {{3, -1.0}});
    CHECK(report ==
          "subset\tv\n"
          "1\t0.100000000000\n"
          "2\t0.200000000000\n"
          "3\t0.300000000000\n"
          "12\t0.400000000000\n"
          "13\t0.500000000000\n"
          "23\t0.600000000000\n"
          "123\t0.700000000000\n"
          "I_3\t-1.000000000000\n");

    // empty-order request: header only
    CHECK(emit_report(ValueTable{}, {}) == "subset\tv\n");

    // byte-stable across repeated emission
    CHECK(emit_report(table, {{3, -1.0}}) == report);
}

TEST_CASE("canonical frames") {
    for (const auto& kind :
         {AlgebraKind::classical(3), AlgebraKind::real_symmetric(3),
          AlgebraKind::complex_hermitian(2), AlgebraKind::quaternionic_hermitian(2),
          AlgebraKind::spin_factor(3)}) {
        const auto sys = make_system(kind);
        const auto frame = canonical_frame(sys);
        REQUIRE(static_cast<int>(frame.size()) == sys.rank);
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(sys.dim);
        for (const auto& p : frame) {
            CHECK((jordan_product(p, p).coords - p.coords).norm() < 1e-14);
            sum += p.coords;
        }
        CHECK((sum - sys.unit_element.coords).norm() == 0.0);
    }
}

TEST_CASE("verification suite emission") {
    const auto sys = make_system(AlgebraKind::classical(2));
    SuiteConfig config;
    config.elements = 20;
    config.pairs = 40;
    config.frames = 2;
    config.face_samples = 10;
    config.purity_trials = 10;
    config.reversibles = 4;
    config.channel_samples = 20;
    const auto results = run_verification_suite(sys, config);
    CHECK(all_pass(results));
    const auto report = emit_suite_report(results);
    CHECK(report.find("check\tviolation\tthreshold\tstatus") == 0);
    CHECK(report.find("FAIL") == std::string::npos);

    // a sub-machine-precision override must trip at least one check
    config.tol_override = 1e-18;
    const auto strict = run_verification_suite(make_system(AlgebraKind::complex_hermitian(2)),
                                               config);
    CHECK_FALSE(all_pass(strict));
}

TEST_CASE("verification suite at edge ranks") {
    SuiteConfig config;
    config.elements = 20;
    config.pairs = 40;
    config.frames = 2;
    config.face_samples = 10;
    config.purity_trials = 10;
    config.reversibles = 4;
    config.channel_samples = 20;
    config.interference_triples = 10;
    for (const auto& kind :
         {AlgebraKind::classical(1), AlgebraKind::real_symmetric(2),
          AlgebraKind::quaternionic_hermitian(2), AlgebraKind::spin_factor(2)}) {
        const auto results = run_verification_suite(make_system(kind), config);
        CHECK(all_pass(results));
    }
}
