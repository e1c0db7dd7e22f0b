#include "lwflat/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace lwflat {

SignSequence::SignSequence(std::vector<std::int8_t> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("SignSequence: length must be >= 1");
    for (std::int8_t e : entries_) {
        if (e != 1 && e != -1)
            throw std::invalid_argument("SignSequence: entries must be +1 or -1");
        if (e == -1) ++minus_count_;
    }
}

double SignSequence::minus_frequency() const {
    return static_cast<double>(minus_count_) / static_cast<double>(size());
}

bool SignSequence::satisfies_endpoint_convention() const {
    return entries_.front() == 1 && entries_.back() == 1;
}

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
    if (bits_.empty())
        throw std::invalid_argument("BinarySequence: length must be >= 1");
    for (std::uint8_t b : bits_) {
        if (b != 0 && b != 1)
            throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
        weight_ += b;
    }
}

bool BinarySequence::satisfies_nb_convention() const {
    return bits_.front() == 1 && bits_.back() == 1;
}

double minus_one_frequency(const SignSequence& s) {
    return s.minus_frequency();
}

BinarySequence to_binary(const SignSequence& s) {
    std::vector<std::uint8_t> bits(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        bits[j] = static_cast<std::uint8_t>((s.sign(j) + 1) / 2);
    return BinarySequence(std::move(bits));
}

BinarySequence complement(const BinarySequence& b) {
    std::vector<std::uint8_t> bits(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
        bits[j] = static_cast<std::uint8_t>(1 - b.bit(j));
    return BinarySequence(std::move(bits));
}

SignSequence negated(const SignSequence& s) {
    std::vector<std::int8_t> entries(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        entries[j] = static_cast<std::int8_t>(-s.sign(j));
    return SignSequence(std::move(entries));
}

BinarySequence t_map(const SignSequence& s) {
    return to_binary(s);
}

SignSequence t_inverse(const BinarySequence& b) {
    std::vector<std::int8_t> entries(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
        entries[j] = static_cast<std::int8_t>(2 * b.bit(j) - 1);
    return SignSequence(std::move(entries));
}

bool is_palindromic(const SignSequence& s) {
    const std::size_t q = s.size();
    for (std::size_t k = 0; k < q / 2; ++k)
        if (s.sign(k) != s.sign(q - 1 - k)) return false;
    return true;
}

} // namespace lwflat
