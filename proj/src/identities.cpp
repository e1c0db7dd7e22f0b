#include "lwflat/identities.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lwflat/cosine.hpp"
#include "lwflat/grid.hpp"
#include "lwflat/sequences.hpp"

namespace lwflat {

namespace {

double max_abs_difference(const EvaluationGrid& a,
                          const std::vector<std::complex<double>>& b) {
    double worst = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t)
        worst = std::max(worst, std::abs(a.values[t] - b[t]));
    return worst;
}

std::vector<double> dirichlet_coefficients(std::size_t q) {
    return std::vector<double>(q, 1.0 / std::sqrt(static_cast<double>(q)));
}

} // namespace

std::size_t identity_grid_size(std::size_t q) {
    std::size_t n = 1;
    while (n < 16 * q) n <<= 1;
    return n;
}

double t_bridge_residual(const SignSequence& s, std::size_t n_points) {
    const std::size_t q = s.size();
    const auto p = evaluate_on_grid(littlewood_coefficients(s), n_points);
    const auto d = evaluate_on_grid(dirichlet_coefficients(q), n_points);

    const BinarySequence eta = t_map(s);
    std::vector<std::complex<double>> rhs(n_points);
    if (eta.weight() == 0) {
        for (std::size_t t = 0; t < n_points; ++t) rhs[t] = -d.values[t];
    } else {
        const auto tp = evaluate_on_grid(nb_coefficients(eta), n_points);
        const double scale = 2.0 * std::sqrt(static_cast<double>(eta.weight()) /
                                             static_cast<double>(q));
        for (std::size_t t = 0; t < n_points; ++t)
            rhs[t] = scale * tp.values[t] - d.values[t];
    }
    return max_abs_difference(p, rhs);
}

double split_q_residual(const SignSequence& s, std::size_t n_points) {
    const auto p = evaluate_on_grid(littlewood_coefficients(s), n_points);
    const auto d = evaluate_on_grid(dirichlet_coefficients(s.size()), n_points);
    const auto qq =
        evaluate_on_grid(q_normalized_coefficients(to_binary(s)), n_points);
    std::vector<std::complex<double>> rhs(n_points);
    for (std::size_t t = 0; t < n_points; ++t)
        rhs[t] = 2.0 * qq.values[t] - d.values[t];
    return max_abs_difference(p, rhs);
}

double split_r_residual(const SignSequence& s, std::size_t n_points) {
    const auto p = evaluate_on_grid(littlewood_coefficients(s), n_points);
    const auto d = evaluate_on_grid(dirichlet_coefficients(s.size()), n_points);
    const auto rr = evaluate_on_grid(
        q_normalized_coefficients(complement(to_binary(s))), n_points);
    std::vector<std::complex<double>> rhs(n_points);
    for (std::size_t t = 0; t < n_points; ++t)
        rhs[t] = d.values[t] - 2.0 * rr.values[t];
    return max_abs_difference(p, rhs);
}

double palindrome_residual(const SignSequence& s, std::size_t n_points) {
    const std::size_t q = s.size();
    const PalindromicDecomposition dec = palindromic_decomposition(s);
    const double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));

    const auto p = evaluate_on_grid(littlewood_coefficients(s), n_points);

    // q^{-1/2} z^{n/2} L_n: scale the embedding coefficients once.
    std::vector<std::complex<double>> emb = cosine_embedding(dec.cosine);
    for (auto& c : emb) c *= inv_sqrt_q;
    const auto lhs_l = evaluate_on_grid(
        std::span<const std::complex<double>>(emb), n_points);

    const std::size_t half = (q - 1) / 2;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_points);
    const double center_scale = dec.center * inv_sqrt_q;
    std::vector<std::complex<double>> rhs(n_points);
    for (std::size_t t = 0; t < n_points; ++t) {
        const std::complex<double> zc =
            std::polar(center_scale, step * static_cast<double>(t * half % n_points));
        rhs[t] = lhs_l.values[t] - zc;
    }
    return max_abs_difference(p, rhs);
}

} // namespace lwflat
