// generators.hpp — deterministic, seeded producers of the polynomial
// families driven by the experiment harness.
//
// Random families draw through SplitMix64 only, so identical
// (spec, q, trial) always reproduces the identical sequence, across
// runs and thread counts.  random_littlewood places an exact count of
// -1 entries (n_q = round(p q)) by partial Fisher–Yates rather than
// i.i.d. sampling: the sweeps target a frequency, and exact counts
// remove the sampling noise from it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "lwflat/sequences.hpp"

namespace lwflat {

enum class FamilyKind {
    random_p,          // +-1, exact -1 count round(p q)
    rudin_shapiro,     // length 2^k pair recurrence
    legendre,          // Legendre symbols, length an odd prime
    palindromic_random,// random palindrome, odd length
    nb_density,        // 0/1, forced endpoints, Bernoulli(density) interior
};

const char* family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

// A family plus its parameters; round-trips through the key=value
// config format echoed into output headers.  prime and k are the
// analyze-time length selectors; sweeps derive them from q instead.
struct FamilySpec {
    FamilyKind kind = FamilyKind::random_p;
    double p = 0.5;          // random_p
    double density = 0.5;    // nb_density
    std::uint64_t prime = 0; // legendre; 0 = derive from q
    unsigned k = 0;          // rudin_shapiro exponent
    std::uint64_t seed = 0;
    bool endpoint_convention = false;

    // "kind=random_p p=0.1 seed=42 endpoint_convention=0" style; only
    // the fields meaningful for the kind are emitted.
    std::string to_config_string() const;
    static FamilySpec parse_config(const std::string& text);

    bool operator==(const FamilySpec&) const = default;
};

struct LittlewoodDraw {
    SignSequence sequence;
    // Set when the endpoint convention forced fewer -1 entries than
    // round(p q) requested.
    bool clamped = false;
};

// Exactly min(round(p q), available slots) entries equal -1, positions
// by a seeded partial Fisher–Yates.  With endpoint_convention and
// q >= 2, entries 0 and q-1 are forced +1 and the -1 count is taken
// among the q-2 interior slots.
LittlewoodDraw random_littlewood(std::size_t q, double p, std::uint64_t seed,
                                 bool endpoint_convention = false);

// Pair recurrence (P, Q) -> (P||Q, P||-Q) from (+1); length 2^k,
// 0 <= k <= 24.
SignSequence rudin_shapiro(unsigned k);

// entry 0 = +1, entry j = Legendre symbol (j | prime) for j >= 1.
// prime must be an odd prime (checked).
SignSequence legendre_fekete(std::uint64_t prime);

// Random palindrome of even degree n (length n+1): first half and
// center drawn, second half mirrored.
SignSequence random_palindromic(std::size_t n_even, std::uint64_t seed);

// eta_0 = eta_{q-1} = 1, interior bits Bernoulli(density); q >= 2,
// density in (0, 1]; weight always >= 2.
BinarySequence nb_random(std::size_t q, double density, std::uint64_t seed);

// Instantiates the family at length q for one trial; the work-item
// seed is derive_seed(spec.seed, q, trial).  rudin_shapiro requires q
// a power of two, legendre an odd prime, palindromic_random odd q.
SequenceVariant generate(const FamilySpec& spec, std::size_t q,
                         std::uint64_t trial);

} // namespace lwflat
