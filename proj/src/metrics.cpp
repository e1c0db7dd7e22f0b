#include "lwflat/metrics.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "lwflat/cosine.hpp"
#include "lwflat/sequences.hpp"

namespace lwflat {

namespace {

// Kahan-compensated sum; plain accumulation over 2^18 grid points
// loses ~1e-11, which would eat the 1e-12 L^2 quadrature budget.
class CompensatedSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

std::vector<long long> direct_autocorrelation(std::span<const double> v) {
    const std::size_t q = v.size();
    std::vector<long long> c(q, 0);
    for (std::size_t k = 0; k < q; ++k) {
        long long acc = 0;
        for (std::size_t j = 0; j + k < q; ++j)
            acc += static_cast<long long>(v[j]) *
                   static_cast<long long>(v[j + k]);
        c[k] = acc;
    }
    return c;
}

constexpr std::size_t kDirectAutocorrelationMax = 96;

} // namespace

std::vector<long long> integer_autocorrelation(std::span<const double> v) {
    const std::size_t q = v.size();
    if (q == 0) throw std::invalid_argument("integer_autocorrelation: empty");
    if (q <= kDirectAutocorrelationMax) return direct_autocorrelation(v);

    std::size_t n = 1;
    while (n < 2 * q) n <<= 1;
    std::vector<std::complex<double>> buf(n);
    for (std::size_t j = 0; j < q; ++j) buf[j] = v[j];
    radix2_transform(buf);
    for (auto& z : buf) z = std::norm(z);
    radix2_transform(buf);
    // buf[t] now holds n * (circular autocorrelation at lag -t); the
    // zero padding to n >= 2q makes the circular correlation aperiodic.
    std::vector<long long> c(q);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < q; ++k) {
        const double x = buf[k == 0 ? 0 : n - k].real() * scale;
        const double r = std::round(x);
        if (std::abs(x - r) >= 0.25) return direct_autocorrelation(v);
        c[k] = static_cast<long long>(r);
    }
    return c;
}

SignAutocorrelation autocorrelation(const SignSequence& s) {
    std::vector<double> v(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) v[j] = s.sign(j);
    return SignAutocorrelation{s.size(), integer_autocorrelation(v)};
}

double lp_norm(const EvaluationGrid& grid, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("lp_norm: alpha must be > 0");
    CompensatedSum acc;
    if (alpha == 2.0) {
        for (const auto& z : grid.values) acc.add(std::norm(z));
    } else if (alpha == 4.0) {
        for (const auto& z : grid.values) {
            const double w = std::norm(z);
            acc.add(w * w);
        }
    } else {
        for (const auto& z : grid.values)
            acc.add(std::pow(std::abs(z), alpha));
    }
    const double mean = acc.value() / static_cast<double>(grid.size());
    return std::pow(mean, 1.0 / alpha);
}

double flatness_residual(const EvaluationGrid& grid, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("flatness_residual: alpha must be > 0");
    CompensatedSum acc;
    for (const auto& z : grid.values) {
        const double d = std::abs(std::abs(z) - 1.0);
        acc.add(alpha == 2.0 ? d * d
                             : alpha == 1.0 ? d
                                            : std::pow(d, alpha));
    }
    const double mean = acc.value() / static_cast<double>(grid.size());
    return std::pow(mean, 1.0 / alpha);
}

double l4_norm_exact(const SignAutocorrelation& profile) {
    const std::size_t q = profile.q;
    if (q == 0 || profile.c.size() != q)
        throw std::invalid_argument("l4_norm_exact: malformed profile");
    // c_0^2 + 2 sum_{k>=1} c_k^2 <= q^2 + 2 sum (q-k)^2 < q^3: exact in
    // 64-bit integers for q <= 16384 and exact in double below 2^53.
    long long num = profile.c[0] * profile.c[0];
    for (std::size_t k = 1; k < q; ++k)
        num += 2 * profile.c[k] * profile.c[k];
    return static_cast<double>(num) /
           (static_cast<double>(q) * static_cast<double>(q));
}

double merit_factor(const SignAutocorrelation& profile) {
    const double l4 = l4_norm_exact(profile);
    if (l4 == 1.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (l4 - 1.0);
}

double mahler_measure(const EvaluationGrid& grid) {
    if (grid.size() == 0)
        throw std::invalid_argument("mahler_measure: empty grid");
    constexpr double kFloor = 1e-300;
    bool any_nonzero = false;
    CompensatedSum acc;
    for (const auto& z : grid.values) {
        const double a = std::abs(z);
        if (a != 0.0) any_nonzero = true;
        acc.add(std::log(a < kFloor ? kFloor : a));
    }
    if (!any_nonzero)
        throw std::invalid_argument("mahler_measure: all-zero grid");
    return std::exp(acc.value() / static_cast<double>(grid.size()));
}

MahlerEstimate mahler_measure(std::span<const double> coeffs,
                              std::size_t n_points) {
    const double coarse =
        mahler_measure(evaluate_on_midpoint_grid(coeffs, n_points));
    const double fine =
        mahler_measure(evaluate_on_midpoint_grid(coeffs, 2 * n_points));
    const bool converged = std::abs(fine - coarse) < 1e-6 * std::abs(fine);
    return MahlerEstimate{fine, converged};
}

double sup_norm_estimate(const EvaluationGrid& grid) {
    double best = 0.0;
    for (const auto& z : grid.values) best = std::max(best, std::abs(z));
    return best;
}

double mz_divergence_witness(const SignSequence& s, double alpha) {
    if (!(alpha > 2.0))
        throw std::invalid_argument("mz_divergence_witness: alpha must be > 2");
    const double q = static_cast<double>(s.size());
    const double beta = alpha / 2.0;
    const double f = s.minus_frequency();
    const double point_mass = (1.0 - 2.0 * f) * (1.0 - 2.0 * f);
    return std::abs(point_mass - 1.0 / q) *
           std::pow(q, (beta - 1.0) / beta);
}

double littlewood_criterion_ratio(const CosinePolynomial& f) {
    if (f.nominal_degree < 1)
        throw std::invalid_argument(
            "littlewood_criterion_ratio: nominal degree must be >= 1");
    double weighted = 0.0;
    double plain = 0.0;
    for (std::size_t i = 0; i < f.amplitude.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        const double a2 = f.amplitude[i] * f.amplitude[i];
        weighted += m * m * a2;
        plain += a2;
    }
    if (plain == 0.0)
        throw std::invalid_argument(
            "littlewood_criterion_ratio: all harmonics vanish");
    const double n = static_cast<double>(f.nominal_degree);
    return weighted / (n * n * plain);
}

} // namespace lwflat
