// covariance.hpp — diagnostics of the measure nu = |Q|^2 dtheta/2pi
// attached to a Newman–Bourgain polynomial Q = m^{-1/2} sum eta_j z^j.
//
// The Fourier coefficients of nu are the normalized autocorrelations
// a_k = (1/m) sum_j eta_j eta_{j+k} (exact rationals: integer counts
// over m).  For the random variables X(k) = z^k - a_k, k != 0, the
// covariance matrix is
//
//     m(i,j) = integral z^{i-j} dnu - a_i a_j = a_{j-i} - a_i a_j,
//
// indexed by k in {-(q-1),...,-1, 1,...,q-1} (dimension 2(q-1)), with
// a_k = 0 for |k| >= q.  The headline scalars are r = sum of entries,
// C = sum of |entries| (satisfying C <= (2q-1)^2 < 4q^2), and the
// flatness obstruction C/m^2: along an a.e.-flat family it must
// diverge, while C <= 4q^2 caps it at 4(q/m)^2.
//
// r and C are accumulated as exact integer numerators over m^2, so the
// bounds above can be checked as integer inequalities.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace lwflat {

class BinarySequence;

struct NbAutocorrelation {
    std::size_t q = 0;
    std::size_t m = 0;
    std::vector<long long> counts; // counts[k] = sum_j eta_j eta_{j+k}

    // Integer numerator of a_k over m; symmetric, 0 for |k| >= q.
    long long count(long long k) const;
    // a_k as a double (exact: counts and m are < 2^53).
    double value(long long k) const;
};

// Requires m >= 1.
NbAutocorrelation nb_autocorrelation(const BinarySequence& b);

// r and C as exact integer numerators over m^2.  Magnitudes stay below
// 8 q^2 m^2 < 2^127 for any q this artifact reaches.
struct ExactEntrySums {
    __int128 r_numerator = 0;
    __int128 abs_numerator = 0;
    std::size_t m = 0;
};

ExactEntrySums exact_entry_sums(const NbAutocorrelation& a);

// Dense matrix materialization cutoff: above this q (dimension
// ~2q), r and C are still computed streaming but M is not stored and
// eigenvalue checks are unavailable.
inline constexpr std::size_t kDenseMaxQ = 2048;

struct CovarianceDiagnostics {
    std::size_t q = 0;
    std::size_t m = 0;
    NbAutocorrelation profile;
    std::size_t dim = 0;          // 2(q-1)
    std::vector<long long> lags;  // index -> k
    std::vector<double> matrix;   // row-major dim x dim; empty if skipped
    double r = 0.0;
    double C = 0.0;
    double obstruction = 0.0; // C / m^2
};

// want_matrix materializes M only when q <= kDenseMaxQ; q = 1 yields
// the empty 0 x 0 matrix with r = C = 0.
CovarianceDiagnostics covariance_diagnostics(const BinarySequence& b,
                                             bool want_matrix = true);

// C / m^2 without materializing anything.
double obstruction_ratio(const BinarySequence& b);

// Recomputes every entry as the N-point quadrature of
// (z^i - a_i) conj(z^j - a_j) |Q(z)|^2 and returns the maximum
// absolute deviation from the exact matrix.  N must be a power of two
// with N >= 8q; q <= 64.  The quadrature is exact for N > 3(q-1), so
// the deviation is pure rounding (< 1e-10).
double covariance_bruteforce_check(const BinarySequence& b,
                                   std::size_t n_points);

// Smallest eigenvalue by cyclic Jacobi (tolerance 1e-10).  Empty
// optional for the 0 x 0 case; requires a materialized matrix.
std::optional<double> min_eigenvalue(const CovarianceDiagnostics& d);

} // namespace lwflat
