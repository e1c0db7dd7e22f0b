#include "lwflat/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "lwflat/grid.hpp"
#include "lwflat/metrics.hpp"
#include "lwflat/sequences.hpp"

namespace lwflat {

namespace {

std::vector<double> cleaned_alphas(const ReportOptions& opts) {
    std::vector<double> alphas = opts.alphas;
    for (double a : alphas)
        if (!(a >= 0.0) || !std::isfinite(a))
            throw std::invalid_argument("analyze: alphas must be finite and >= 0");
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

std::size_t resolve_grid_size(std::size_t q, const ReportOptions& opts) {
    if (opts.grid_size == 0) return default_grid_size(q);
    if (!is_power_of_two(opts.grid_size) || opts.grid_size < 2 * q)
        throw std::invalid_argument(
            "analyze: grid_size must be a power of two >= 2q");
    return opts.grid_size;
}

// The metrics shared by both coefficient alphabets.
void fill_common(FlatnessReport& r, const std::vector<double>& coeffs,
                 const std::vector<double>& alphas, std::size_t n_points) {
    const EvaluationGrid grid = evaluate_on_grid(coeffs, n_points);
    for (double a : alphas) {
        if (a == 0.0) continue;
        r.norms.emplace_back(a, lp_norm(grid, a));
        r.residuals.emplace_back(a, flatness_residual(grid, a));
    }
    const MahlerEstimate mahler = mahler_measure(coeffs, n_points);
    r.mahler = mahler.value;
    r.mahler_converged = mahler.converged;
    r.sup_norm = sup_norm_estimate(grid);
    r.grid_n = n_points;
}

} // namespace

FlatnessReport analyze(const SignSequence& s, const ReportOptions& opts) {
    const std::vector<double> alphas = cleaned_alphas(opts);
    FlatnessReport r;
    r.q = s.size();
    r.n_minus = s.minus_count();
    r.frequency = s.minus_frequency();
    fill_common(r, littlewood_coefficients(s), alphas,
                resolve_grid_size(s.size(), opts));
    r.merit_factor = merit_factor(autocorrelation(s));
    for (double a : alphas)
        if (a > 2.0) r.mz_witness.emplace_back(a, mz_divergence_witness(s, a));
    return r;
}

FlatnessReport analyze(const BinarySequence& b, const ReportOptions& opts) {
    if (b.weight() == 0)
        throw std::invalid_argument("analyze: weight-0 binary sequence");
    const std::vector<double> alphas = cleaned_alphas(opts);
    FlatnessReport r;
    r.q = b.size();
    r.n_minus = b.size() - b.weight();
    r.frequency =
        static_cast<double>(r.n_minus) / static_cast<double>(b.size());
    fill_common(r, nb_coefficients(b), alphas,
                resolve_grid_size(b.size(), opts));
    return r;
}

nlohmann::ordered_json to_json(const FlatnessReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n_minus"] = r.n_minus;
    j["frequency"] = r.frequency;
    for (const auto& [a, v] : r.norms) j["norm_" + alpha_key(a)] = v;
    for (const auto& [a, v] : r.residuals) j["residual_" + alpha_key(a)] = v;
    j["mahler"] = r.mahler;
    j["mahler_converged"] = r.mahler_converged;
    if (r.merit_factor) {
        if (std::isinf(*r.merit_factor))
            j["merit_factor"] = "inf";
        else
            j["merit_factor"] = *r.merit_factor;
    }
    for (const auto& [a, v] : r.mz_witness) j["mz_witness_" + alpha_key(a)] = v;
    j["sup_norm"] = r.sup_norm;
    j["grid_N"] = r.grid_n;
    return j;
}

std::string alpha_key(double alpha) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), alpha);
    return std::string(buf, res.ptr);
}

std::string format_number_17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace lwflat
