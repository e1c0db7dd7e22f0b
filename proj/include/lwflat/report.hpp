// report.hpp — the full per-polynomial metric report and its JSON
// form.
//
// JSON schema (flat object, stable key order): q, n_minus, frequency,
// norm_<alpha> ascending, residual_<alpha> ascending, mahler,
// mahler_converged, merit_factor, mz_witness_<alpha>, sup_norm,
// grid_N.  Alpha key suffixes are shortest decimal text ("0.5", "1").
// merit_factor and mz witnesses apply to +-1 inputs only and their
// keys are absent for 0/1 inputs; an infinite merit factor (q = 1) is
// the string "inf".

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lwflat {

class SignSequence;
class BinarySequence;

struct ReportOptions {
    // Norm/residual exponents; 0 asks for nothing extra (the Mahler
    // measure is always computed as the alpha = 0 entry).  Values must
    // be >= 0; witnesses appear for each alpha > 2.
    std::vector<double> alphas = {0.0, 0.5, 1.0, 2.0, 4.0};
    // 0 = default_grid_size(q); otherwise a power of two >= 2q.
    // Values below 16q weaken the sup-norm oversampling guarantee.
    std::size_t grid_size = 0;
};

struct FlatnessReport {
    std::size_t q = 0;
    std::size_t n_minus = 0;
    double frequency = 0.0;
    std::vector<std::pair<double, double>> norms;     // alpha > 0
    std::vector<std::pair<double, double>> residuals; // alpha > 0
    double mahler = 0.0;
    bool mahler_converged = false;
    std::optional<double> merit_factor; // +-1 inputs only
    std::vector<std::pair<double, double>> mz_witness; // alpha > 2
    double sup_norm = 0.0;
    std::size_t grid_n = 0;
};

FlatnessReport analyze(const SignSequence& s, const ReportOptions& opts = {});
// Weight m >= 1 required (the 1/sqrt(m) normalization); n_minus counts
// the zero bits, i.e. the -1 entries of the matching sign sequence.
FlatnessReport analyze(const BinarySequence& b, const ReportOptions& opts = {});

nlohmann::ordered_json to_json(const FlatnessReport& r);

// Shortest decimal text for an alpha key suffix.
std::string alpha_key(double alpha);

// Locale-free decimal text with 17 significant digits (the CSV cell
// format); infinities render as "inf"/"-inf".
std::string format_number_17(double v);

} // namespace lwflat
