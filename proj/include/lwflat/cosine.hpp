// cosine.hpp — real cosine polynomials and the palindromic decomposition.
//
// A palindromic sign sequence of odd length q = n + 1 (even degree n)
// factors on the circle as
//
//     P_n(z) = z^{n/2} L_n(z) - c z^{n/2},        z = e^{i theta},
//
// where c = eps_{n/2} is the center coefficient and L_n is the real
// cosine polynomial
//
//     L_n(theta) = 2 eps_{n/2} + sum_{j=1}^{n/2} 2 eps_{n/2-j} cos(j theta).
//
// The constant 2 eps_{n/2} comes from the l = 0 term of sigma_l(z) =
// z^l + z^{-l}; it is stored separately from the harmonics so that
// criterion sums over m >= 1 exclude it.

#pragma once

#include <cstddef>
#include <vector>

#include "lwflat/sequences.hpp"

namespace lwflat {

// Real cosine series  constant + sum_{m=1}^{h} amplitude[m-1] *
// cos(m theta + phase[m-1]).  `phase` may be empty, meaning all zero.
// `nominal_degree` is the n of the criterion ratio; h <= n.
struct CosinePolynomial {
    double constant = 0.0;
    std::vector<double> amplitude; // index m-1 holds a_m, m = 1..h
    std::vector<double> phase;     // same indexing; empty == all zero
    std::size_t nominal_degree = 0;

    std::size_t harmonic_count() const { return amplitude.size(); }
    double evaluate(double theta) const;
};

struct PalindromicDecomposition {
    CosinePolynomial cosine; // L_n with nominal_degree = n/2
    int center = 0;          // eps_{n/2}
};

// Splits a palindromic odd-length sign sequence into its cosine part
// and center coefficient.  Rejects non-palindromic input and even
// length.  Length 1 degenerates to L = 2 eps_0 with no harmonics.
PalindromicDecomposition palindromic_decomposition(const SignSequence& s);

} // namespace lwflat
