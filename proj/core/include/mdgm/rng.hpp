#pragma once

#include <bit>
#include <cstdint>

namespace mdgm::rng {

/// SplitMix64 finalizer. Stateless; the whole noise pipeline is built on it
/// so that a sample is a pure function of its counter, never of visitation
/// order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mixes a per-row key once so the per-column hash in hot loops is a single
/// splitmix64 round.
constexpr std::uint64_t row_key(std::uint64_t seed, std::uint64_t row) {
    return splitmix64(splitmix64(seed) ^ (row * 0x9e3779b97f4a7c15ULL));
}

constexpr std::uint64_t pair_bits(std::uint64_t row_key, std::uint64_t col) {
    return splitmix64(row_key ^ col);
}

/// Uniform double strictly inside (0,1): never 0, never 1, so log(log(u))
/// chains stay finite.
constexpr double bits_to_unit(std::uint64_t h) {
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

/// log(x) for finite normal x > 0 via mantissa/exponent split and the
/// atanh series; |abs err| < 1e-12 on (1e-300, 1e300). Branch-light and
/// auto-vectorizable, unlike libm's log, which dominates the Gumbel noise
/// cost otherwise.
inline double fast_log(double x) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    int e = static_cast<int>((bits >> 52) & 0x7ff) - 1023;
    double m = std::bit_cast<double>((bits & 0xfffffffffffffULL) | 0x3ff0000000000000ULL);
    // reduce m from [1,2) to [sqrt(1/2), sqrt(2)) so |t| <= 0.1716
    if (m > 1.4142135623730951) {
        m *= 0.5;
        e += 1;
    }
    const double t = (m - 1.0) / (m + 1.0);
    const double t2 = t * t;
    const double series =
        2.0 * t *
        (1.0 +
         t2 * (1.0 / 3.0 +
               t2 * (1.0 / 5.0 +
                     t2 * (1.0 / 7.0 + t2 * (1.0 / 9.0 + t2 * (1.0 / 11.0 + t2 * (1.0 / 13.0)))))));
    return series + static_cast<double>(e) * 0.6931471805599453;
}

/// Standard Gumbel(0,1) sample for counter (row, col, seed):
/// g = -log(-log(u)).
inline double gumbel(std::uint64_t row_key, std::uint64_t col) {
    const double u = bits_to_unit(pair_bits(row_key, col));
    return -fast_log(-fast_log(u));
}

inline double uniform(std::uint64_t row_key, std::uint64_t col) {
    return bits_to_unit(pair_bits(row_key, col));
}

}  // namespace mdgm::rng
