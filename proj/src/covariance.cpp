#include "lwflat/covariance.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "lwflat/grid.hpp"
#include "lwflat/jacobi.hpp"
#include "lwflat/metrics.hpp"
#include "lwflat/sequences.hpp"

namespace lwflat {

namespace {

std::vector<long long> lag_list(std::size_t q) {
    std::vector<long long> lags;
    lags.reserve(2 * (q - 1));
    for (long long k = -static_cast<long long>(q - 1); k <= -1; ++k)
        lags.push_back(k);
    for (long long k = 1; k <= static_cast<long long>(q - 1); ++k)
        lags.push_back(k);
    return lags;
}

} // namespace

long long NbAutocorrelation::count(long long k) const {
    const long long abs_k = k < 0 ? -k : k;
    if (abs_k >= static_cast<long long>(q)) return 0;
    return counts[static_cast<std::size_t>(abs_k)];
}

double NbAutocorrelation::value(long long k) const {
    return static_cast<double>(count(k)) / static_cast<double>(m);
}

NbAutocorrelation nb_autocorrelation(const BinarySequence& b) {
    if (b.weight() == 0)
        throw std::invalid_argument("nb_autocorrelation: weight must be >= 1");
    std::vector<double> v(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) v[j] = b.bit(j);
    return NbAutocorrelation{b.size(), b.weight(), integer_autocorrelation(v)};
}

ExactEntrySums exact_entry_sums(const NbAutocorrelation& a) {
    ExactEntrySums sums;
    sums.m = a.m;
    if (a.q < 2) return sums;

    const long long q1 = static_cast<long long>(a.q) - 1;
    const long long mm = static_cast<long long>(a.m);
    // Entry numerator over m^2: count(j - i) * m - count(i) * count(j).
    auto count_at = [&](long long k) { return a.count(k); };
    for (long long i = -q1; i <= q1; ++i) {
        if (i == 0) continue;
        const long long ci = count_at(i);
        for (long long j = -q1; j <= q1; ++j) {
            if (j == 0) continue;
            const long long num = count_at(j - i) * mm - ci * count_at(j);
            sums.r_numerator += num;
            sums.abs_numerator += num < 0 ? -num : num;
        }
    }
    return sums;
}

CovarianceDiagnostics covariance_diagnostics(const BinarySequence& b,
                                             bool want_matrix) {
    CovarianceDiagnostics d;
    d.q = b.size();
    d.m = b.weight();
    d.profile = nb_autocorrelation(b);
    if (d.q < 2) return d;

    d.dim = 2 * (d.q - 1);
    d.lags = lag_list(d.q);

    const ExactEntrySums sums = exact_entry_sums(d.profile);
    const double m2 = static_cast<double>(d.m) * static_cast<double>(d.m);
    d.r = static_cast<double>(sums.r_numerator) / m2;
    d.C = static_cast<double>(sums.abs_numerator) / m2;
    d.obstruction = d.C / m2;

    if (want_matrix && d.q <= kDenseMaxQ) {
        d.matrix.resize(d.dim * d.dim);
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t j = 0; j < d.dim; ++j)
                d.matrix[i * d.dim + j] =
                    d.profile.value(d.lags[j] - d.lags[i]) -
                    d.profile.value(d.lags[i]) * d.profile.value(d.lags[j]);
    }
    return d;
}

double obstruction_ratio(const BinarySequence& b) {
    const NbAutocorrelation a = nb_autocorrelation(b);
    if (b.size() < 2) return 0.0;
    const ExactEntrySums sums = exact_entry_sums(a);
    const double m2 = static_cast<double>(b.weight()) *
                      static_cast<double>(b.weight());
    return static_cast<double>(sums.abs_numerator) / (m2 * m2);
}

double covariance_bruteforce_check(const BinarySequence& b,
                                   std::size_t n_points) {
    const std::size_t q = b.size();
    if (q > 64)
        throw std::invalid_argument(
            "covariance_bruteforce_check: oracle limited to q <= 64");
    if (n_points < 8 * q || !is_power_of_two(n_points))
        throw std::invalid_argument(
            "covariance_bruteforce_check: need power-of-two N >= 8q");

    const CovarianceDiagnostics d = covariance_diagnostics(b, true);
    if (d.dim == 0) return 0.0;

    const auto grid = evaluate_on_grid(nb_coefficients(b), n_points);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_points);

    std::vector<std::complex<double>> brute(d.dim * d.dim, 0.0);
    std::vector<std::complex<double>> u(d.dim);
    for (std::size_t t = 0; t < n_points; ++t) {
        const double w =
            std::norm(grid.values[t]) / static_cast<double>(n_points);
        const double theta = step * static_cast<double>(t);
        for (std::size_t i = 0; i < d.dim; ++i)
            u[i] = std::polar(1.0, theta * static_cast<double>(d.lags[i])) -
                   d.profile.value(d.lags[i]);
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t j = i; j < d.dim; ++j)
                brute[i * d.dim + j] += u[i] * std::conj(u[j]) * w;
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = i; j < d.dim; ++j) {
            const double exact = d.matrix[i * d.dim + j];
            worst = std::max(worst, std::abs(brute[i * d.dim + j] - exact));
        }
    return worst;
}

std::optional<double> min_eigenvalue(const CovarianceDiagnostics& d) {
    if (d.dim == 0) return std::nullopt;
    if (d.matrix.empty())
        throw std::invalid_argument("min_eigenvalue: matrix not materialized");
    return jacobi_eigenvalues(d.matrix, d.dim, 1e-10).front();
}

} // namespace lwflat
