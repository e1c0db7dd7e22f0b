// grid.hpp — evaluation of coefficient vectors on roots-of-unity grids.
//
// values[t] = sum_j coeff_j e^{2 pi i j t / N} for t = 0..N-1, computed
// by a zero-padded radix-2 transform in O(N log N).  N must be a power
// of two with N >= q.  The uniform grid integrates |P|^2 exactly once
// N exceeds the degree of |P|^2, so L^2 quadrature is exact (up to
// rounding) for N >= 2q.
//
// The midpoint variant samples at angles 2 pi (t + 1/2) / N.  Those
// nodes avoid every N-th root of unity, which matters for log-type
// integrands (Mahler measure) when the polynomial has zeros at
// low-order roots of unity.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lwflat {

struct EvaluationGrid {
    std::vector<std::complex<double>> values;

    std::size_t size() const { return values.size(); }
    double angle(std::size_t t) const;
};

bool is_power_of_two(std::size_t n);

// Smallest power of two >= max(4096, 16 q): big enough for exact L^2
// quadrature and a 16x-oversampled sup-norm scan.
std::size_t default_grid_size(std::size_t q);

EvaluationGrid evaluate_on_grid(std::span<const double> coeffs,
                                std::size_t n_points);
EvaluationGrid evaluate_on_grid(std::span<const std::complex<double>> coeffs,
                                std::size_t n_points);

// Same transform on the half-shifted grid e^{2 pi i (t + 1/2) / N}.
EvaluationGrid evaluate_on_midpoint_grid(std::span<const double> coeffs,
                                         std::size_t n_points);

// In-place radix-2 transform a[t] <- sum_j a[j] e^{2 pi i j t / N}.
// Length must be a power of two.
void radix2_transform(std::vector<std::complex<double>>& a);

// Normalized coefficient vectors of the standard polynomials.
std::vector<double> littlewood_coefficients(const class SignSequence& s);
// 1/sqrt(m) normalization; rejects weight 0.
std::vector<double> nb_coefficients(const class BinarySequence& b);
// 1/sqrt(q) normalization (the Q_q / R_q polynomials), weight 0 allowed.
std::vector<double> q_normalized_coefficients(const class BinarySequence& b);

// Coefficients of z^h L(z) for a cosine polynomial with h harmonics:
// an ordinary polynomial of degree 2h whose modulus on the circle
// equals |L|.  Entry h+m is (a_m/2) e^{i phi_m}, entry h-m its
// conjugate, entry h the constant.
std::vector<std::complex<double>>
cosine_embedding(const struct CosinePolynomial& f);

} // namespace lwflat
