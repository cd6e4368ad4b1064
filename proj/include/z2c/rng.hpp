#ifndef Z2C_RNG_HPP
#define Z2C_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

namespace z2c {

/*
 * Deterministic seeded RNG for sampling integer points.
 *
 * std::uniform_int_distribution is implementation-defined, which would break
 * byte-identical report output across standard libraries, so ranges are mapped
 * with plain modulo arithmetic (the tiny bias is irrelevant for Schwartz-Zippel
 * style sampling).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(eng_() % span);
    }

private:
    std::mt19937_64 eng_;
};

// Stable 64-bit FNV-1a, used to derive per-check seeds from a master seed and a
// check id so results do not depend on execution order (or on std::hash).
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, const std::string& tag) {
    return master ^ fnv1a64(tag);
}

} // namespace z2c

#endif // Z2C_RNG_HPP
