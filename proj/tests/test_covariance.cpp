#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lwflat/covariance.hpp"
#include "lwflat/jacobi.hpp"
#include "lwflat/rng.hpp"
#include "lwflat/sequence_io.hpp"
#include "lwflat/sequences.hpp"

using namespace lwflat;

namespace {

BinarySequence binary_of(const std::string& text) {
    return std::get<BinarySequence>(parse_sequences(text).front());
}

BinarySequence random_binary(std::size_t q, double density,
                             std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> bits(q, 0);
    bits[0] = 1;
    for (std::size_t j = 1; j < q; ++j)
        bits[j] = rng.next_unit() < density ? 1 : 0;
    return BinarySequence(std::move(bits));
}

} // namespace

TEST_CASE("autocorrelation profile of 11") {
    const auto prof = nb_autocorrelation(binary_of("11"));
    CHECK(prof.q == 2);
    CHECK(prof.m == 2);
    REQUIRE(prof.counts.size() == 2);
    CHECK(prof.counts[0] == 2);
    CHECK(prof.counts[1] == 1);
    CHECK(prof.count(1) == 1);
    CHECK(prof.count(-1) == 1); // symmetric
    CHECK(prof.count(5) == 0);  // zero beyond the support
    CHECK(prof.value(1) == doctest::Approx(0.5));
    CHECK(prof.value(0) == doctest::Approx(1.0));
}

TEST_CASE("all-ones profile is (q - |k|)/q") {
    const auto prof = nb_autocorrelation(binary_of("1111"));
    for (long long k = -3; k <= 3; ++k)
        CHECK(prof.value(k) ==
              doctest::Approx((4.0 - std::abs(k)) / 4.0).epsilon(1e-15));
}

TEST_CASE("empty support is rejected") {
    CHECK_THROWS_AS(nb_autocorrelation(binary_of("000")),
                    std::invalid_argument);
}

TEST_CASE("covariance matrix of 11") {
    const auto d = covariance_diagnostics(binary_of("11"), true);
    CHECK(d.q == 2);
    CHECK(d.m == 2);
    CHECK(d.dim == 2);
    REQUIRE(d.lags.size() == 2);
    CHECK(d.lags[0] == -1);
    CHECK(d.lags[1] == 1);

    // m(i,j) = a_{j-i} - a_i a_j with a_{+-1} = 1/2, a_{+-2} = 0.
    REQUIRE(d.matrix.size() == 4);
    CHECK(d.matrix[0] == doctest::Approx(0.75));
    CHECK(d.matrix[1] == doctest::Approx(-0.25));
    CHECK(d.matrix[2] == doctest::Approx(-0.25));
    CHECK(d.matrix[3] == doctest::Approx(0.75));

    CHECK(d.r == doctest::Approx(1.0));
    CHECK(d.C == doctest::Approx(2.0));
    CHECK(d.obstruction == doctest::Approx(0.5));
    CHECK(obstruction_ratio(binary_of("11")) == doctest::Approx(0.5));

    // Eigenvalues 1/2 and 1, ascending.
    const auto eig = min_eigenvalue(d);
    REQUIRE(eig.has_value());
    CHECK(*eig == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("entry sums agree with a direct double loop") {
    const BinarySequence b = random_binary(10, 0.7, 424242);
    const auto prof = nb_autocorrelation(b);
    const auto sums = exact_entry_sums(prof);

    __int128 r_num = 0, abs_num = 0;
    const long long q = static_cast<long long>(b.size());
    const long long m = static_cast<long long>(b.weight());
    for (long long i = -(q - 1); i <= q - 1; ++i) {
        if (i == 0) continue;
        for (long long j = -(q - 1); j <= q - 1; ++j) {
            if (j == 0) continue;
            const long long num =
                prof.count(j - i) * m - prof.count(i) * prof.count(j);
            r_num += num;
            abs_num += num < 0 ? -num : num;
        }
    }
    CHECK(sums.r_numerator == r_num);
    CHECK(sums.abs_numerator == abs_num);
    CHECK(sums.m == b.weight());

    // The matrix-free sums match the materialized matrix.
    const auto d = covariance_diagnostics(b, true);
    double r_direct = 0.0, c_direct = 0.0;
    for (double entry : d.matrix) {
        r_direct += entry;
        c_direct += std::abs(entry);
    }
    CHECK(d.r == doctest::Approx(r_direct).epsilon(1e-12));
    CHECK(d.C == doctest::Approx(c_direct).epsilon(1e-12));
}

TEST_CASE("profile sum identity and the (2q-1)^2 bound hold exactly") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const BinarySequence b = random_binary(33, 0.4, seed);
        const auto prof = nb_autocorrelation(b);
        long long tail = 0;
        for (std::size_t k = 1; k < prof.counts.size(); ++k)
            tail += prof.counts[k];
        const long long m = static_cast<long long>(b.weight());
        CHECK(2 * tail == m * (m - 1));

        const auto sums = exact_entry_sums(prof);
        const __int128 bound = static_cast<__int128>(65) *
                               static_cast<__int128>(65) *
                               static_cast<__int128>(m) *
                               static_cast<__int128>(m);
        CHECK(sums.abs_numerator <= bound); // C <= (2q-1)^2
    }
}

TEST_CASE("q = 1 degenerates to an empty matrix") {
    const auto d = covariance_diagnostics(binary_of("1"), true);
    CHECK(d.dim == 0);
    CHECK(d.r == 0.0);
    CHECK(d.C == 0.0);
    CHECK(d.obstruction == 0.0);
    CHECK_FALSE(min_eigenvalue(d).has_value());
}

TEST_CASE("brute-force quadrature oracle") {
    // Exact for N > 3(q-1); both orderings of the conjugation give the
    // same deviation because M is real symmetric.
    CHECK(covariance_bruteforce_check(binary_of("11"), 16) < 1e-12);
    CHECK(covariance_bruteforce_check(binary_of("1111"), 32) < 1e-12);

    const BinarySequence b = random_binary(20, 0.6, 99);
    CHECK(covariance_bruteforce_check(b, 256) < 1e-10);

    CHECK_THROWS_AS(covariance_bruteforce_check(binary_of("11"), 12),
                    std::invalid_argument); // not a power of two
}

TEST_CASE("all-ones obstruction obeys the 4/c^2 bound") {
    const auto d = covariance_diagnostics(binary_of("1111111111"), true);
    // m = q: C/m^2 <= 4 q^2/m^2 = 4.
    CHECK(d.obstruction <= 4.0);
    const auto eig = min_eigenvalue(d);
    REQUIRE(eig.has_value());
    CHECK(*eig > 0.0);
}

TEST_CASE("matrix is skipped above the dense cutoff but sums remain") {
    const BinarySequence b = random_binary(kDenseMaxQ + 5, 0.5, 7);
    const auto d = covariance_diagnostics(b, true);
    CHECK(d.dim == 2 * (kDenseMaxQ + 4));
    CHECK(d.matrix.empty());
    CHECK(d.C > 0.0);
    CHECK_THROWS_AS(min_eigenvalue(d), std::logic_error);
}

TEST_CASE("jacobi eigenvalues") {
    // {{2,1},{1,2}} -> {1,3}.
    const auto two = jacobi_eigenvalues({2.0, 1.0, 1.0, 2.0}, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two[1] == doctest::Approx(3.0).epsilon(1e-12));

    // Tridiagonal {{2,-1,0},{-1,2,-1},{0,-1,2}} -> 2 -+ sqrt(2), 2.
    const auto three = jacobi_eigenvalues(
        {2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0}, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(three[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(three[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));

    CHECK(jacobi_eigenvalues({5.0}, 1).front() == doctest::Approx(5.0));
    CHECK(jacobi_eigenvalues({}, 0).empty());
}
