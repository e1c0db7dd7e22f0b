#include "lwflat/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lwflat/rng.hpp"

namespace lwflat {

namespace {

// Shortest round-trip text, locale-free.
std::string double_text(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_power_of_two_u64(std::uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

} // namespace

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::random_p: return "random_p";
        case FamilyKind::rudin_shapiro: return "rudin_shapiro";
        case FamilyKind::legendre: return "legendre";
        case FamilyKind::palindromic_random: return "palindromic_random";
        case FamilyKind::nb_density: return "nb_density";
    }
    throw std::logic_error("family_kind_name: unknown kind");
}

FamilyKind parse_family_kind(const std::string& name) {
    for (FamilyKind kind :
         {FamilyKind::random_p, FamilyKind::rudin_shapiro, FamilyKind::legendre,
          FamilyKind::palindromic_random, FamilyKind::nb_density})
        if (name == family_kind_name(kind)) return kind;
    throw std::invalid_argument("unknown family kind: " + name);
}

std::string FamilySpec::to_config_string() const {
    std::ostringstream out;
    out << "kind=" << family_kind_name(kind);
    switch (kind) {
        case FamilyKind::random_p:
            out << " p=" << double_text(p);
            break;
        case FamilyKind::nb_density:
            out << " density=" << double_text(density);
            break;
        case FamilyKind::legendre:
            if (prime != 0) out << " prime=" << prime;
            break;
        case FamilyKind::rudin_shapiro:
            if (k != 0) out << " k=" << k;
            break;
        case FamilyKind::palindromic_random:
            break;
    }
    out << " seed=" << seed;
    out << " endpoint_convention=" << (endpoint_convention ? 1 : 0);
    return out.str();
}

FamilySpec FamilySpec::parse_config(const std::string& text) {
    FamilySpec spec;
    bool saw_kind = false;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("FamilySpec: expected key=value, got " +
                                        token);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "kind") {
                spec.kind = parse_family_kind(value);
                saw_kind = true;
            } else if (key == "p") {
                spec.p = std::stod(value);
            } else if (key == "density") {
                spec.density = std::stod(value);
            } else if (key == "prime") {
                spec.prime = std::stoull(value);
            } else if (key == "k") {
                spec.k = static_cast<unsigned>(std::stoul(value));
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else if (key == "endpoint_convention") {
                spec.endpoint_convention = std::stoi(value) != 0;
            } else {
                throw std::invalid_argument("FamilySpec: unknown key " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("FamilySpec: bad value for " + key);
        }
    }
    if (!saw_kind) throw std::invalid_argument("FamilySpec: missing kind");
    return spec;
}

LittlewoodDraw random_littlewood(std::size_t q, double p, std::uint64_t seed,
                                 bool endpoint_convention) {
    if (q < 1) throw std::invalid_argument("random_littlewood: q must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_littlewood: p must be in [0,1]");

    const std::size_t target =
        static_cast<std::size_t>(std::llround(p * static_cast<double>(q)));
    std::vector<std::int8_t> entries(q, 1);

    std::vector<std::size_t> slots;
    if (endpoint_convention && q >= 2) {
        slots.resize(q - 2);
        std::iota(slots.begin(), slots.end(), std::size_t{1});
    } else if (endpoint_convention && q == 1) {
        // q = 1: first == last, forced +1.
    } else {
        slots.resize(q);
        std::iota(slots.begin(), slots.end(), std::size_t{0});
    }

    const std::size_t n_minus = std::min(target, slots.size());
    const bool clamped = n_minus != target;

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < n_minus; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.next_below(slots.size() - i));
        std::swap(slots[i], slots[j]);
        entries[slots[i]] = -1;
    }
    return LittlewoodDraw{SignSequence(std::move(entries)), clamped};
}

SignSequence rudin_shapiro(unsigned k) {
    if (k > 24)
        throw std::invalid_argument("rudin_shapiro: k must be in [0, 24]");
    std::vector<std::int8_t> p{1};
    std::vector<std::int8_t> q{1};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<std::int8_t> np(p);
        np.insert(np.end(), q.begin(), q.end());
        std::vector<std::int8_t> nq(p);
        for (std::int8_t e : q) nq.push_back(static_cast<std::int8_t>(-e));
        p = std::move(np);
        q = std::move(nq);
    }
    return SignSequence(std::move(p));
}

SignSequence legendre_fekete(std::uint64_t prime) {
    if (!is_odd_prime(prime))
        throw std::invalid_argument("legendre_fekete: need an odd prime");
    std::vector<bool> residue(prime, false);
    for (std::uint64_t x = 1; x < prime; ++x)
        residue[(x * x) % prime] = true;
    std::vector<std::int8_t> entries(prime);
    entries[0] = 1;
    for (std::uint64_t j = 1; j < prime; ++j)
        entries[j] = residue[j] ? 1 : -1;
    return SignSequence(std::move(entries));
}

SignSequence random_palindromic(std::size_t n_even, std::uint64_t seed) {
    if (n_even % 2 != 0)
        throw std::invalid_argument("random_palindromic: degree must be even");
    const std::size_t half = n_even / 2;
    std::vector<std::int8_t> entries(n_even + 1);
    SplitMix64 rng(seed);
    for (std::size_t j = 0; j < half; ++j) {
        const std::int8_t s = static_cast<std::int8_t>(rng.next_sign());
        entries[j] = s;
        entries[n_even - j] = s;
    }
    entries[half] = static_cast<std::int8_t>(rng.next_sign());
    return SignSequence(std::move(entries));
}

BinarySequence nb_random(std::size_t q, double density, std::uint64_t seed) {
    if (q < 2) throw std::invalid_argument("nb_random: q must be >= 2");
    if (!(density > 0.0 && density <= 1.0))
        throw std::invalid_argument("nb_random: density must be in (0,1]");
    std::vector<std::uint8_t> bits(q, 0);
    bits[0] = 1;
    bits[q - 1] = 1;
    SplitMix64 rng(seed);
    for (std::size_t j = 1; j + 1 < q; ++j)
        bits[j] = rng.next_unit() < density ? 1 : 0;
    return BinarySequence(std::move(bits));
}

SequenceVariant generate(const FamilySpec& spec, std::size_t q,
                         std::uint64_t trial) {
    const std::uint64_t seed = derive_seed(spec.seed, q, trial);
    switch (spec.kind) {
        case FamilyKind::random_p:
            return random_littlewood(q, spec.p, seed, spec.endpoint_convention)
                .sequence;
        case FamilyKind::rudin_shapiro: {
            if (!is_power_of_two_u64(q))
                throw std::invalid_argument(
                    "generate: rudin_shapiro needs q a power of two");
            unsigned k = 0;
            while ((std::size_t{1} << k) < q) ++k;
            return rudin_shapiro(k);
        }
        case FamilyKind::legendre:
            return legendre_fekete(q);
        case FamilyKind::palindromic_random:
            if (q % 2 == 0)
                throw std::invalid_argument(
                    "generate: palindromic_random needs odd q");
            return random_palindromic(q - 1, seed);
        case FamilyKind::nb_density:
            return nb_random(q, spec.density, seed);
    }
    throw std::logic_error("generate: unknown kind");
}

} // namespace lwflat
