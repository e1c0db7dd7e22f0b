// metrics.hpp — scalar flatness metrics on the unit circle.
//
// Everything is quadrature over a roots-of-unity grid except the L^4
// norm and merit factor, which come exactly from the integer aperiodic
// autocorrelation via Parseval:
//
//     ||P||_4^4 = q^{-2} sum_{k=-(q-1)}^{q-1} c_k^2,
//     c_k = sum_j eps_j eps_{j+k}.
//
// The Mahler measure exp(mean log |P|) is the alpha -> 0 limit of the
// L^alpha norms; log |P| has integrable singularities at zeros on the
// circle, so the estimator clamps |P| at 1e-300 and the coefficient
// overload reports a convergence flag from one grid doubling.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lwflat/grid.hpp"

namespace lwflat {

class SignSequence;
struct CosinePolynomial;

// Exact aperiodic autocorrelation of a +-1 sequence: c[k] for
// k = 0..q-1, with c[0] = q and |c[k]| <= q - k.
struct SignAutocorrelation {
    std::size_t q = 0;
    std::vector<long long> c;
};

SignAutocorrelation autocorrelation(const SignSequence& s);

// c_k = sum_j v_j v_{j+k} for k = 0..q-1, exact.  Entries must be
// integers of magnitude <= 2^20; large q uses an FFT whose rounding is
// verified entrywise (fallback to the direct sum on failure).
std::vector<long long> integer_autocorrelation(std::span<const double> v);

// (mean_t |value_t|^alpha)^(1/alpha); alpha > 0 required.  Exact to
// 1e-12 for alpha = 2 when the grid has N >= 2q.
double lp_norm(const EvaluationGrid& grid, double alpha);

// (mean_t | |value_t| - 1 |^alpha)^(1/alpha); alpha > 0 required.
double flatness_residual(const EvaluationGrid& grid, double alpha);

// ||P||_4^4 from the exact autocorrelation.
double l4_norm_exact(const SignAutocorrelation& profile);

// F = 1 / (||P||_4^4 - 1); +infinity when ||P||_4^4 = 1 (only q = 1).
double merit_factor(const SignAutocorrelation& profile);

// exp(mean_t log max(|value_t|, 1e-300)).  Rejects an all-zero grid.
double mahler_measure(const EvaluationGrid& grid);

// Mahler estimate from coefficients: evaluated on midpoint grids of
// size n_points and 2*n_points (midpoints avoid zeros at roots of
// unity); value is the doubled-grid estimate, converged means the
// doubling changed it by less than 1e-6 relative.
struct MahlerEstimate {
    double value = 0.0;
    bool converged = false;
};

MahlerEstimate mahler_measure(std::span<const double> coeffs,
                              std::size_t n_points);

// max_t |value_t|: a lower bound for the sup norm, quoted as an
// estimate.  Callers should build the grid with >= 16x oversampling.
double sup_norm_estimate(const EvaluationGrid& grid);

// W = |(1 - 2 n_q/q)^2 - 1/q| * q^{(beta-1)/beta} with beta = alpha/2.
// A lower-bound witness for ||P||_alpha^2 up to an absolute constant:
// divergence of W along a family certifies L^alpha non-flatness.
// Requires alpha > 2.
double mz_divergence_witness(const SignSequence& s, double alpha);

// rho = (sum_{m>=1} m^2 a_m^2) / (n^2 sum_{m>=1} a_m^2) in (0, 1],
// n the nominal degree.  The constant term is excluded.  Littlewood's
// criterion hypothesis holds with K = 1/rho.  Requires at least one
// nonzero harmonic and n >= 1.
double littlewood_criterion_ratio(const CosinePolynomial& f);

} // namespace lwflat
