// identities.hpp — pointwise residuals of the structural identities
// linking the two polynomial classes on the unit circle:
//
//     P_q = 2 sqrt(m/q) T(P_q) - D_q         (the T bridge)
//     P_q = 2 Q_q - D_q                      (Q_q = q^{-1/2} sum eta_j z^j)
//     P_q = D_q - 2 R_q                      (R_q from the complement bits)
//     P_n = z^{n/2} L_n - eps_{n/2} z^{n/2}   (palindromic, here 1/sqrt(q)
//                                              normalized on both sides)
//
// Each function evaluates both sides independently on an N-point grid
// and returns the maximum absolute deviation.  All four identities are
// algebraic, so residuals measure only evaluation rounding.

#pragma once

#include <cstddef>

namespace lwflat {

class SignSequence;

// Smallest power of two >= 16 q, the oversampling used by the
// identity checks.
std::size_t identity_grid_size(std::size_t q);

// max_t |P(z_t) - (2 sqrt(m/q) T(P)(z_t) - D_q(z_t))|.  The all-minus
// case m = 0 degenerates to P = -D_q and is handled exactly.
double t_bridge_residual(const SignSequence& s, std::size_t n_points);

// max_t |P(z_t) - (2 Q_q(z_t) - D_q(z_t))|.
double split_q_residual(const SignSequence& s, std::size_t n_points);

// max_t |P(z_t) - (D_q(z_t) - 2 R_q(z_t))|.
double split_r_residual(const SignSequence& s, std::size_t n_points);

// max_t |P(z_t) - q^{-1/2} z_t^{n/2} (L_n(theta_t) - center)| for a
// palindromic odd-length sequence.
double palindrome_residual(const SignSequence& s, std::size_t n_points);

} // namespace lwflat
