// sequences.hpp — coefficient sequences for the two polynomial classes.
//
// A Littlewood polynomial is P(z) = q^{-1/2} * sum_j eps_j z^j with
// eps_j in {-1,+1}; a Newman–Bourgain polynomial is Q(z) = m^{-1/2} *
// sum_j eta_j z^j with eta_j in {0,1} and m = #{eta_j = 1}.  Both are
// L^2-normalized on the unit circle.
//
// The classes are linked coefficient-wise by eps_j = 2*eta_j - 1.  This
// file holds the sequence types and the structural maps between them:
// the T map (sign -> bit), its inverse, the bit complement, the sign
// flip S, palindromy, and the -1 frequency n_q / q.

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace lwflat {

// Finite +-1 coefficient vector eps of length q >= 1.
// Immutable after construction; n_q = #{j : eps_j = -1} is cached.
class SignSequence {
public:
    explicit SignSequence(std::vector<std::int8_t> entries);

    std::size_t size() const { return entries_.size(); }
    int sign(std::size_t j) const { return entries_[j]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }

    // n_q, the number of -1 entries.
    std::size_t minus_count() const { return minus_count_; }
    // n_q / q, exact in double for q < 2^52.
    double minus_frequency() const;

    // First and last coefficient +1 (the convention that makes T one-one).
    bool satisfies_endpoint_convention() const;

    bool operator==(const SignSequence&) const = default;

private:
    std::vector<std::int8_t> entries_;
    std::size_t minus_count_ = 0;
};

// Finite 0/1 coefficient vector eta of length q >= 1 with cached weight
// m = #{eta_j = 1}.  m = 0 is representable; operations that need the
// 1/sqrt(m) normalization reject it.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<std::uint8_t> bits);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t j) const { return bits_[j]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t weight() const { return weight_; }

    // eta_0 = eta_{q-1} = 1, the Newman–Bourgain class convention.
    bool satisfies_nb_convention() const;

    bool operator==(const BinarySequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
    std::size_t weight_ = 0;
};

// Either coefficient alphabet, as produced by parsers and generators.
using SequenceVariant = std::variant<SignSequence, BinarySequence>;

// n_q / q, the frequency of -1 among the coefficients.
double minus_one_frequency(const SignSequence& s);

// eta_j = (eps_j + 1) / 2; the result has weight m = q - n_q.
BinarySequence to_binary(const SignSequence& s);

// Entrywise 1 - eta_j.  weight(b) + weight(complement(b)) = q.
BinarySequence complement(const BinarySequence& b);

// The sign flip S: entrywise -eps_j.  Involution; |P| on the circle is
// unchanged, and the -1 frequency maps to its complement 1 - n_q/q.
SignSequence negated(const SignSequence& s);

// The T map from Littlewood to Newman–Bourgain coefficients.  Total on
// all sign sequences; it is one-one on sequences satisfying the
// endpoint convention.  The associated polynomials obey the bridge
// identity P(z) = 2 sqrt(m/q) * T(P)(z) - D_q(z) on the circle.
BinarySequence t_map(const SignSequence& s);

// Inverse of T: eps_j = 2*eta_j - 1.
SignSequence t_inverse(const BinarySequence& b);

// eps_k = eps_{q-1-k} for all k (coefficient vector symmetric under
// reversal).  Length 1 is palindromic.
bool is_palindromic(const SignSequence& s);

} // namespace lwflat
