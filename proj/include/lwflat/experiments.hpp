// experiments.hpp — the desk-scale experiment harness: parameterized
// sweeps over (q, trial) grids, CSV emission, and the canned
// verification experiments behind `lwflat verify` and the acceptance
// suite.  Every experiment is deterministic: work items are seeded by
// derive_seed(base, q, trial), results are written in (q, trial) order
// regardless of scheduling, and all numeric text is locale-free.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lwflat/generators.hpp"
#include "lwflat/report.hpp"

namespace lwflat {

class BinarySequence;

// Runs fn(0..n-1) across hardware threads; exceptions propagate.
// Work items must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

struct SweepConfig {
    FamilySpec family;
    std::vector<std::size_t> q_list; // nonempty, strictly ascending
    std::vector<double> alphas = ReportOptions{}.alphas;
    std::size_t trials = 1;
    bool emit_timestamp = true;

    void validate() const; // throws std::invalid_argument
};

struct SweepRow {
    std::size_t q = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    FlatnessReport report;
    // Filled for the palindromic family only (CSV column).
    std::optional<double> criterion_ratio;
};

// Rows in (q, trial) order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Header lines echo the config; data columns depend on the family
// alphabet (merit/witness columns for +-1 families only).
void write_sweep_csv(std::ostream& out, const SweepConfig& config,
                     const std::vector<SweepRow>& rows);

// CLI eigenvalue cutoff: the Jacobi solve is O(dim^3) per sweep, so
// covariance rows above this q leave min_eigenvalue blank.  (The
// acceptance checks need eigenvalues only up to q = 64.)
inline constexpr std::size_t kEigenMaxQ = 256;

struct CovarianceOptions {
    bool oracle = false; // brute-force quadrature check (q <= 64 only)
    bool eigen = true;   // min eigenvalue when q <= kEigenMaxQ
};

struct CovarianceRow {
    std::size_t q = 0;
    std::size_t m = 0;
    double r = 0.0;
    double C = 0.0;
    double obstruction = 0.0;
    std::optional<double> min_eigenvalue;
    std::optional<double> oracle_deviation;
};

CovarianceRow covariance_row(const BinarySequence& b,
                             const CovarianceOptions& opts);

// header_lines are emitted verbatim prefixed by "# ".
void write_covariance_csv(std::ostream& out,
                          const std::vector<std::string>& header_lines,
                          const std::vector<CovarianceRow>& rows,
                          bool emit_timestamp);

// One checked inequality (or an informational measurement).
struct CheckLine {
    std::string text;
    bool pass = false;
    bool informational = false;
};

struct CheckReport {
    std::string id;    // CLI vocabulary: main1, main2, main3, appendix, ...
    std::string title;
    std::vector<std::string> parameters; // echoed into the output header
    std::vector<CheckLine> lines;

    bool passed() const; // informational lines do not gate
};

void print_check_report(std::ostream& out, const CheckReport& report);

// The canned experiments.  Parameters are fixed inside (and echoed);
// each returns every checked inequality with measured values.
CheckReport verify_structural_identities(); // T round trip + identities
CheckReport verify_metric_crossvalidation();// exact vs quadrature, Mahler
CheckReport verify_frequency_interval();    // main1: L^1 residual floor
CheckReport verify_alpha_above_two();       // main2: L^4 growth + witness
CheckReport verify_palindromic_criterion(); // main3: criterion ratio
CheckReport verify_appendix_obstruction();  // appendix: covariance bounds
CheckReport verify_baselines();             // Rudin-Shapiro, Dirichlet decay
CheckReport verify_sweep_determinism();     // byte-identical reruns

// ISO-8601 UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

} // namespace lwflat
