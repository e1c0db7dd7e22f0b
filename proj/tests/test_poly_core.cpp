#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lwflat/cosine.hpp"
#include "lwflat/dirichlet.hpp"
#include "lwflat/metrics.hpp"
#include "lwflat/sequence_io.hpp"
#include "lwflat/sequences.hpp"

using namespace lwflat;

namespace {

SignSequence sign_of(const std::string& text) {
    auto parsed = parse_sequences(text);
    REQUIRE(parsed.size() == 1);
    return std::get<SignSequence>(parsed.front());
}

BinarySequence binary_of(const std::string& text) {
    auto parsed = parse_sequences(text);
    REQUIRE(parsed.size() == 1);
    return std::get<BinarySequence>(parsed.front());
}

} // namespace

TEST_CASE("sign sequence counting") {
    const SignSequence s = sign_of("+-+");
    CHECK(s.size() == 3);
    CHECK(s.minus_count() == 1);
    CHECK(s.minus_frequency() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(minus_one_frequency(s) == s.minus_frequency());
    CHECK(s.sign(0) == 1);
    CHECK(s.sign(1) == -1);

    CHECK(sign_of("+++").minus_count() == 0);
    CHECK(sign_of("---").minus_frequency() == 1.0);
}

TEST_CASE("binary sequence weight and conventions") {
    const BinarySequence b = binary_of("1101001");
    CHECK(b.size() == 7);
    CHECK(b.weight() == 4);
    CHECK(b.bit(2) == 0);
    CHECK(b.satisfies_nb_convention()); // both endpoints 1
    CHECK_FALSE(binary_of("110").satisfies_nb_convention());
    CHECK_FALSE(binary_of("011").satisfies_nb_convention());
}

TEST_CASE("maps between the alphabets") {
    const SignSequence s = sign_of("+-+-");

    // T sends +1 -> 1, -1 -> 0 and is a bijection.
    const BinarySequence t = t_map(s);
    CHECK(t == binary_of("1010"));
    CHECK(t_inverse(t) == s);
    CHECK(t_map(t_inverse(binary_of("0110"))) == binary_of("0110"));

    // to_binary agrees with T; complement swaps the roles of +-1.
    CHECK(to_binary(s) == t);
    CHECK(complement(t) == binary_of("0101"));
    CHECK(complement(complement(t)) == t);

    // S is negation; it flips the -1 count to q - n.
    const SignSequence neg = negated(s);
    CHECK(neg == sign_of("-+-+"));
    CHECK(neg.minus_count() == s.size() - s.minus_count());
    CHECK(negated(neg) == s);
    CHECK(to_binary(neg) == complement(to_binary(s)));
}

TEST_CASE("endpoint convention predicate") {
    CHECK(sign_of("+--+").satisfies_endpoint_convention());
    CHECK_FALSE(sign_of("+---").satisfies_endpoint_convention());
    CHECK(sign_of("+").satisfies_endpoint_convention());
    CHECK_FALSE(sign_of("-").satisfies_endpoint_convention());
}

TEST_CASE("palindrome predicate") {
    CHECK(is_palindromic(sign_of("+-+")));
    CHECK(is_palindromic(sign_of("+")));
    CHECK(is_palindromic(sign_of("-++-")));
    CHECK_FALSE(is_palindromic(sign_of("++-")));
}

TEST_CASE("parser: one sequence per line, comments, whitespace") {
    const std::string text = "# header comment\n"
                             "\n"
                             "+-+ # trailing comment\n"
                             " 1 0 1\t1\n"
                             "--\r\n";
    const auto parsed = parse_sequences(text);
    REQUIRE(parsed.size() == 3);
    CHECK(std::get<SignSequence>(parsed[0]) == sign_of("+-+"));
    CHECK(std::get<BinarySequence>(parsed[1]) == binary_of("1011"));
    CHECK(std::get<SignSequence>(parsed[2]).size() == 2);
}

TEST_CASE("parser: mixed alphabet rejected with line and column") {
    try {
        parse_sequences("+-01");
        FAIL("expected SequenceParseError");
    } catch (const SequenceParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("line 1, column 3") !=
              std::string::npos);
    }

    try {
        parse_sequences("101\n10+\n");
        FAIL("expected SequenceParseError");
    } catch (const SequenceParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }

    CHECK_THROWS_AS(parse_sequences("+x+"), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence_file("/nonexistent/path.seq"),
                    std::runtime_error);
}

TEST_CASE("format_sequence round trip") {
    for (const std::string text : {"+-+", "+", "++++----"}) {
        CHECK(format_sequence(SequenceVariant(sign_of(text))) == text);
    }
    CHECK(format_sequence(SequenceVariant(binary_of("1101001"))) == "1101001");
}

TEST_CASE("Dirichlet kernel values") {
    // D_q(z) = q^{-1/2} sum z^j; at z = 1 this is sqrt(q).
    CHECK(dirichlet(4).evaluate_at_angle(0.0).real() ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(dirichlet(2).evaluate_at_angle(M_PI)) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(dirichlet(3).evaluate_at_angle(2.0 * M_PI / 3.0)) ==
          doctest::Approx(0.0).epsilon(1e-14));

    const auto coeffs = dirichlet(9).coefficients();
    REQUIRE(coeffs.size() == 9);
    for (double c : coeffs) CHECK(c == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("palindromic decomposition: explicit cases") {
    // (+,-,+): P = 1 - z + z^2 (up to 1/sqrt(3));
    // z^{-1} P = 2cos(theta) - 1, so L = 2cos(theta) - 2 with center -1.
    const auto dec = palindromic_decomposition(sign_of("+-+"));
    CHECK(dec.center == -1);
    CHECK(dec.cosine.constant == -2.0);
    REQUIRE(dec.cosine.harmonic_count() == 1);
    CHECK(dec.cosine.amplitude[0] == 2.0);
    CHECK(dec.cosine.nominal_degree == 1);

    const auto plus = palindromic_decomposition(sign_of("+++"));
    CHECK(plus.center == 1);
    CHECK(plus.cosine.constant == 2.0);
    CHECK(plus.cosine.amplitude[0] == 2.0);

    // Length 1 degenerates to the constant 2 eps_0.
    const auto single = palindromic_decomposition(sign_of("-"));
    CHECK(single.center == -1);
    CHECK(single.cosine.constant == -2.0);
    CHECK(single.cosine.harmonic_count() == 0);

    // General harmonics: a_m = 2 eps_{h-m}.
    const SignSequence s = sign_of("+-+++-+");
    const auto general = palindromic_decomposition(s);
    REQUIRE(general.cosine.harmonic_count() == 3);
    CHECK(general.cosine.amplitude[0] == 2.0);  // eps_2 = +1
    CHECK(general.cosine.amplitude[1] == -2.0); // eps_1 = -1
    CHECK(general.cosine.amplitude[2] == 2.0);  // eps_0 = +1

    CHECK_THROWS_AS(palindromic_decomposition(sign_of("++-")),
                    std::invalid_argument);
    CHECK_THROWS_AS(palindromic_decomposition(sign_of("+--+")),
                    std::invalid_argument);
}

TEST_CASE("cosine evaluation matches the series") {
    CosinePolynomial f;
    f.constant = 0.5;
    f.amplitude = {1.0, -2.0};
    f.phase = {0.25, -0.5};
    f.nominal_degree = 2;
    for (double theta : {0.0, 0.3, 1.7, 3.1}) {
        const double direct = 0.5 + 1.0 * std::cos(theta + 0.25) -
                              2.0 * std::cos(2.0 * theta - 0.5);
        CHECK(f.evaluate(theta) == doctest::Approx(direct).epsilon(1e-15));
    }
}

TEST_CASE("criterion ratio closed forms") {
    // Single harmonic at m = n: ratio is exactly 1.
    CosinePolynomial top;
    top.amplitude = {0.0, 0.0, 3.0};
    top.nominal_degree = 3;
    CHECK(littlewood_criterion_ratio(top) == doctest::Approx(1.0));

    // Constant-magnitude harmonics, h = n = 2:
    // (1*4 + 4*4) / (4 * (4+4)) = 20/32.
    CosinePolynomial flat;
    flat.constant = 2.0;
    flat.amplitude = {2.0, 2.0};
    flat.nominal_degree = 2;
    CHECK(littlewood_criterion_ratio(flat) ==
          doctest::Approx(0.625).epsilon(1e-15));

    // Constant magnitude at h = n = 100: (h+1)(2h+1)/(6h^2) = 0.33835.
    // Signs do not matter, only the squared amplitudes.
    CosinePolynomial wide;
    wide.constant = -2.0;
    wide.amplitude.assign(100, 2.0);
    for (std::size_t m = 0; m < 100; m += 3) wide.amplitude[m] = -2.0;
    wide.nominal_degree = 100;
    CHECK(littlewood_criterion_ratio(wide) ==
          doctest::Approx(0.33835).epsilon(1e-15));

    // The ratio needs at least one harmonic and a nonzero amplitude.
    CosinePolynomial zero;
    zero.constant = 2.0;
    zero.amplitude = {0.0};
    zero.nominal_degree = 1;
    CHECK_THROWS_AS(littlewood_criterion_ratio(zero), std::invalid_argument);
    CosinePolynomial empty;
    empty.constant = 2.0;
    CHECK_THROWS_AS(littlewood_criterion_ratio(empty), std::invalid_argument);
}
