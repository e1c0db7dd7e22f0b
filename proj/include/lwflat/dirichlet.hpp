// dirichlet.hpp — the normalized Dirichlet term D_q(z) = q^{-1/2} (1 +
// z + ... + z^{q-1}).  D_q has unit L^2 norm, D_q(1) = sqrt(q), and
// D_q -> 0 pointwise away from z = 1 as q grows.  It is the bridge in
// P = 2 sqrt(m/q) T(P) - D_q.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lwflat {

struct DirichletSpec {
    std::size_t q = 0;

    // D_q(e^{i theta}).  Uses the kernel form
    // e^{i(q-1)theta/2} sin(q theta/2) / (sqrt(q) sin(theta/2)),
    // which avoids the cancellation in (1 - z^q)/(1 - z) near z = 1.
    std::complex<double> evaluate_at_angle(double theta) const;

    // The q coefficients, each q^{-1/2}.
    std::vector<double> coefficients() const;
};

// q >= 1 required.
DirichletSpec dirichlet(std::size_t q);

} // namespace lwflat
