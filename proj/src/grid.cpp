#include "lwflat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lwflat/cosine.hpp"
#include "lwflat/sequences.hpp"

namespace lwflat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_grid_args(std::size_t q, std::size_t n_points) {
    if (!is_power_of_two(n_points))
        throw std::invalid_argument("evaluate_on_grid: N must be a power of two");
    if (n_points < q)
        throw std::invalid_argument("evaluate_on_grid: N must be >= q");
}

EvaluationGrid transform_padded(std::vector<std::complex<double>> buf) {
    radix2_transform(buf);
    return EvaluationGrid{std::move(buf)};
}

} // namespace

double EvaluationGrid::angle(std::size_t t) const {
    return kTwoPi * static_cast<double>(t) / static_cast<double>(size());
}

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::size_t default_grid_size(std::size_t q) {
    std::size_t target = std::max<std::size_t>(4096, 16 * q);
    std::size_t n = 1;
    while (n < target) n <<= 1;
    return n;
}

void radix2_transform(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("radix2_transform: length must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // Twiddles computed directly from the angle; repeated-multiplication
    // recurrences drift too much for 1e-12 residual checks at N = 2^18.
    std::vector<std::complex<double>> roots(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
        roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w = roots[k * stride];
                const std::complex<double> u = a[start + k];
                const std::complex<double> v = a[start + k + len / 2] * w;
                a[start + k] = u + v;
                a[start + k + len / 2] = u - v;
            }
        }
    }
}

EvaluationGrid evaluate_on_grid(std::span<const double> coeffs,
                                std::size_t n_points) {
    check_grid_args(coeffs.size(), n_points);
    std::vector<std::complex<double>> buf(n_points);
    for (std::size_t j = 0; j < coeffs.size(); ++j) buf[j] = coeffs[j];
    return transform_padded(std::move(buf));
}

EvaluationGrid evaluate_on_grid(std::span<const std::complex<double>> coeffs,
                                std::size_t n_points) {
    check_grid_args(coeffs.size(), n_points);
    std::vector<std::complex<double>> buf(n_points);
    std::copy(coeffs.begin(), coeffs.end(), buf.begin());
    return transform_padded(std::move(buf));
}

EvaluationGrid evaluate_on_midpoint_grid(std::span<const double> coeffs,
                                         std::size_t n_points) {
    check_grid_args(coeffs.size(), n_points);
    std::vector<std::complex<double>> buf(n_points);
    const double step = std::numbers::pi / static_cast<double>(n_points);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        buf[j] = std::polar(coeffs[j], step * static_cast<double>(j));
    return transform_padded(std::move(buf));
}

std::vector<double> littlewood_coefficients(const SignSequence& s) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(s.size()));
    std::vector<double> coeffs(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) coeffs[j] = scale * s.sign(j);
    return coeffs;
}

std::vector<double> nb_coefficients(const BinarySequence& b) {
    if (b.weight() == 0)
        throw std::invalid_argument("nb_coefficients: weight must be >= 1");
    const double scale = 1.0 / std::sqrt(static_cast<double>(b.weight()));
    std::vector<double> coeffs(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) coeffs[j] = scale * b.bit(j);
    return coeffs;
}

std::vector<double> q_normalized_coefficients(const BinarySequence& b) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(b.size()));
    std::vector<double> coeffs(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) coeffs[j] = scale * b.bit(j);
    return coeffs;
}

std::vector<std::complex<double>> cosine_embedding(const CosinePolynomial& f) {
    const std::size_t h = f.harmonic_count();
    std::vector<std::complex<double>> coeffs(2 * h + 1);
    coeffs[h] = f.constant;
    for (std::size_t m = 1; m <= h; ++m) {
        const double phi = f.phase.empty() ? 0.0 : f.phase[m - 1];
        const std::complex<double> c = std::polar(0.5 * f.amplitude[m - 1], phi);
        coeffs[h + m] = c;
        coeffs[h - m] = std::conj(c);
    }
    return coeffs;
}

} // namespace lwflat
