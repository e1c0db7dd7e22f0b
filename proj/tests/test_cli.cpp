#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

#include "lwflat/experiments.hpp"
#include "lwflat/rng.hpp"
#include "lwflat/sequence_io.hpp"
#include "lwflat/sequences.hpp"

using namespace lwflat;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::size_t count_fields(const std::string& line) {
    return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) +
           1;
}

} // namespace

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(1000, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, [&](std::size_t) { FAIL("must not be called"); });
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS_AS(parallel_for(64,
                                 [&](std::size_t i) {
                                     if (i == 13)
                                         throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("sweep config validation") {
    SweepConfig config;
    config.q_list = {};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.q_list = {8, 8};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.q_list = {16, 8};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.q_list = {8, 16};
    config.trials = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.trials = 2;
    config.alphas = {-0.5};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.alphas = {0.0, 2.0};
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("sweep rows are ordered and seeded per work item") {
    SweepConfig config;
    config.family.kind = FamilyKind::random_p;
    config.family.p = 0.25;
    config.family.seed = 77;
    config.q_list = {4, 8};
    config.trials = 2;
    config.emit_timestamp = false;

    const auto rows = run_sweep(config);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].q == 4);
    CHECK(rows[0].trial == 0);
    CHECK(rows[1].q == 4);
    CHECK(rows[1].trial == 1);
    CHECK(rows[2].q == 8);
    CHECK(rows[3].trial == 1);
    for (const auto& row : rows) {
        CHECK(row.seed == derive_seed(77, row.q, row.trial));
        CHECK(row.report.q == row.q);
        CHECK_FALSE(row.criterion_ratio.has_value());
        CHECK(row.report.merit_factor.has_value());
    }
}

TEST_CASE("palindromic sweep rows carry the criterion ratio") {
    SweepConfig config;
    config.family.kind = FamilyKind::palindromic_random;
    config.q_list = {101};
    config.trials = 2;
    const auto rows = run_sweep(config);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        REQUIRE(row.criterion_ratio.has_value());
        // h = 50: (h+1)(2h+1)/(6h^2) = 0.3434, inside [0.30, 0.40].
        CHECK(*row.criterion_ratio == doctest::Approx(0.3434).epsilon(1e-12));
    }
}

TEST_CASE("sweep csv layout for a sign family") {
    SweepConfig config;
    config.family.kind = FamilyKind::random_p;
    config.family.p = 0.3;
    config.family.seed = 12345;
    config.q_list = {8};
    config.trials = 2;
    config.emit_timestamp = false;

    std::ostringstream out;
    write_sweep_csv(out, config, run_sweep(config));
    const auto lines = split_lines(out.str());

    REQUIRE(lines.size() == 7); // 4 header comments + header row + 2 rows
    CHECK(lines[0] == "# family: kind=random_p p=0.3 seed=12345 "
                      "endpoint_convention=0");
    CHECK(lines[1] == "# q_list: 8");
    CHECK(lines[2] == "# trials: 2");
    CHECK(lines[3] == "# alphas: 0 0.5 1 2 4");
    CHECK(lines[4] ==
          "family,q,trial,seed,n_minus,frequency,norm_0.5,norm_1,norm_2,"
          "norm_4,residual_0.5,residual_1,residual_2,residual_4,mahler,"
          "mahler_converged,merit_factor,mz_witness_4,sup_norm,grid_N");
    CHECK(lines[5].substr(0, 11) == "random_p,8,");
    CHECK(count_fields(lines[5]) == count_fields(lines[4]));
    CHECK(count_fields(lines[6]) == count_fields(lines[4]));
}

TEST_CASE("sweep csv drops sign-only columns for binary families") {
    SweepConfig config;
    config.family.kind = FamilyKind::nb_density;
    config.family.density = 0.4;
    config.family.seed = 7;
    config.q_list = {16};
    config.trials = 1;
    config.emit_timestamp = false;

    std::ostringstream out;
    write_sweep_csv(out, config, run_sweep(config));
    const auto lines = split_lines(out.str());
    const std::string& header = lines[4];
    CHECK(header.find("merit_factor") == std::string::npos);
    CHECK(header.find("mz_witness") == std::string::npos);
    CHECK(header.find("criterion_ratio") == std::string::npos);
    CHECK(count_fields(lines[5]) == count_fields(header));
}

TEST_CASE("timestamp header line appears unless suppressed") {
    SweepConfig config;
    config.family.kind = FamilyKind::random_p;
    config.q_list = {4};

    std::ostringstream with;
    write_sweep_csv(with, config, run_sweep(config));
    const auto stamped = split_lines(with.str());
    REQUIRE(stamped.size() >= 5);
    CHECK(stamped[4].substr(0, 13) == "# generated: ");
    CHECK(stamped[4].size() == 13 + 20);
    CHECK(stamped[4].back() == 'Z');

    config.emit_timestamp = false;
    std::ostringstream without;
    write_sweep_csv(without, config, run_sweep(config));
    CHECK(without.str().find("# generated") == std::string::npos);
}

TEST_CASE("utc timestamp shape") {
    const std::string ts = utc_timestamp();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[7] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[13] == ':');
    CHECK(ts[19] == 'Z');
}

TEST_CASE("in-process sweep determinism") {
    SweepConfig config;
    config.family.kind = FamilyKind::random_p;
    config.family.p = 0.3;
    config.family.seed = 12345;
    config.q_list = {8, 32};
    config.trials = 2;
    config.emit_timestamp = false;

    std::ostringstream a, b;
    write_sweep_csv(a, config, run_sweep(config));
    write_sweep_csv(b, config, run_sweep(config));
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
}

TEST_CASE("covariance rows and csv") {
    const auto pair =
        std::get<BinarySequence>(parse_sequences("11").front());

    CovarianceOptions opts;
    opts.oracle = true;
    const CovarianceRow row = covariance_row(pair, opts);
    CHECK(row.q == 2);
    CHECK(row.m == 2);
    CHECK(row.r == doctest::Approx(1.0));
    CHECK(row.C == doctest::Approx(2.0));
    CHECK(row.obstruction == doctest::Approx(0.5));
    REQUIRE(row.min_eigenvalue.has_value());
    CHECK(*row.min_eigenvalue == doctest::Approx(0.5).epsilon(1e-10));
    REQUIRE(row.oracle_deviation.has_value());
    CHECK(*row.oracle_deviation < 1e-12);

    std::ostringstream out;
    write_covariance_csv(out, {"input: demo"}, {row}, false);
    const auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "# input: demo");
    CHECK(lines[1] == "q,m,m/q,r,C,C/m^2,min_eigenvalue,oracle_deviation");
    CHECK(lines[2].substr(0, 18) == "2,2,1,1,2,0.5,0.5,");

    // Skipped diagnostics leave their cells blank.
    CovarianceOptions bare;
    bare.oracle = false;
    bare.eigen = false;
    std::ostringstream blank;
    write_covariance_csv(blank, {}, {covariance_row(pair, bare)}, false);
    const auto bare_lines = split_lines(blank.str());
    REQUIRE(bare_lines.size() == 2);
    CHECK(bare_lines[1] == "2,2,1,1,2,0.5,,");
}

TEST_CASE("check reports gate on non-informational lines only") {
    CheckReport report;
    report.id = "demo";
    report.title = "demo";
    report.lines.push_back(CheckLine{"soft", false, true});
    CHECK(report.passed());
    report.lines.push_back(CheckLine{"hard", true, false});
    CHECK(report.passed());
    report.lines.push_back(CheckLine{"broken", false, false});
    CHECK_FALSE(report.passed());

    std::ostringstream out;
    print_check_report(out, report);
    const std::string text = out.str();
    CHECK(text.find("[INFO] soft") != std::string::npos);
    CHECK(text.find("[PASS] hard") != std::string::npos);
    CHECK(text.find("[FAIL] broken") != std::string::npos);
    CHECK(text.find("result: FAIL (1/2 checks)") != std::string::npos);
}

TEST_CASE("fast canned experiments pass") {
    CHECK(verify_palindromic_criterion().passed());
    CHECK(verify_baselines().passed());
}
