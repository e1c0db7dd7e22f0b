#include "lwflat/cosine.hpp"

#include <cmath>
#include <stdexcept>

namespace lwflat {

double CosinePolynomial::evaluate(double theta) const {
    double acc = constant;
    for (std::size_t i = 0; i < amplitude.size(); ++i) {
        const double phi = phase.empty() ? 0.0 : phase[i];
        acc += amplitude[i] * std::cos(static_cast<double>(i + 1) * theta + phi);
    }
    return acc;
}

PalindromicDecomposition palindromic_decomposition(const SignSequence& s) {
    if (s.size() % 2 == 0)
        throw std::invalid_argument(
            "palindromic_decomposition: length must be odd (even degree)");
    if (!is_palindromic(s))
        throw std::invalid_argument(
            "palindromic_decomposition: sequence is not palindromic");

    const std::size_t half = (s.size() - 1) / 2; // n/2
    PalindromicDecomposition d;
    d.center = s.sign(half);
    d.cosine.constant = 2.0 * d.center;
    d.cosine.amplitude.resize(half);
    for (std::size_t j = 1; j <= half; ++j)
        d.cosine.amplitude[j - 1] = 2.0 * s.sign(half - j);
    d.cosine.nominal_degree = half;
    return d;
}

} // namespace lwflat
