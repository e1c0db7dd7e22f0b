// jacobi.hpp — eigenvalues of a dense symmetric matrix by cyclic
// Jacobi rotations.  Adequate for the covariance matrices here
// (dimension a few hundred); no eigenvectors are accumulated.

#pragma once

#include <cstddef>
#include <vector>

namespace lwflat {

// Eigenvalues (ascending) of the n x n symmetric matrix stored
// row-major in `a`.  Sweeps rotate every off-diagonal pair until the
// off-diagonal Frobenius norm drops below tol * ||A||_F, up to
// max_sweeps cyclic sweeps.  a.size() must equal n * n; the input is
// read as its symmetric part (upper triangle mirrored).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol = 1e-10,
                                       int max_sweeps = 50);

} // namespace lwflat
