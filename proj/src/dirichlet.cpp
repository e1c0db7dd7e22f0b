#include "lwflat/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lwflat {

std::complex<double> DirichletSpec::evaluate_at_angle(double theta) const {
    const double qd = static_cast<double>(q);
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t == 0.0) return {std::sqrt(qd), 0.0};

    const double half = 0.5 * t;
    const double ratio = std::sin(qd * half) / std::sin(half);
    return std::polar(ratio / std::sqrt(qd), (qd - 1.0) * half);
}

std::vector<double> DirichletSpec::coefficients() const {
    return std::vector<double>(q, 1.0 / std::sqrt(static_cast<double>(q)));
}

DirichletSpec dirichlet(std::size_t q) {
    if (q == 0) throw std::invalid_argument("dirichlet: q must be >= 1");
    return DirichletSpec{q};
}

} // namespace lwflat
