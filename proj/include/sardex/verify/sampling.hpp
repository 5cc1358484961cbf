#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

#include "sardex/construction/fat_cantor.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex::verify {

inline std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/// Random stream for one sample of one check. Seeded from (seed, check name,
/// sample index) only, so samples can be drawn in any order or in parallel.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::string_view check, std::uint64_t index)
        : engine_(splitmix64(splitmix64(seed) ^ fnv1a(check) ^ splitmix64(index + 0x632be59bd9b4e019ULL)))
    {
    }

    /// Uniform integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        for (;;) {
            const std::uint64_t v = engine_();
            if (v < limit) {
                return v % n;
            }
        }
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform big integer in [0, n), n >= 1.
    Integer below(const Integer& n)
    {
        const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (;;) {
            Integer v = 0;
            for (std::size_t done = 0; done < bits; done += 64) {
                v <<= 64;
                v += Integer(static_cast<unsigned long>(engine_()));
            }
            v >>= static_cast<mp_bitcnt_t>((bits + 63) / 64 * 64 - bits);
            if (v < n) {
                return v;
            }
        }
    }

    bool coin() { return (engine_() >> 63U) != 0; }

    /// j / 2^20 with 1 <= j < 2^20, a point strictly inside (0, 1).
    Rational unit_fraction()
    {
        constexpr std::uint64_t scale = 1ULL << 20U;
        return make_rational(Integer(static_cast<unsigned long>(1 + below(scale - 1))), Integer(static_cast<unsigned long>(scale)));
    }

private:
    std::mt19937_64 engine_;
};

inline Path random_path(SampleRng& rng, int depth)
{
    Path p(static_cast<std::size_t>(depth));
    for (auto&& bit : p) {
        bit = rng.coin();
    }
    return p;
}

inline GapAddress random_gap(SampleRng& rng, int max_level)
{
    const int n = static_cast<int>(rng.between(1, max_level));
    return GapAddress::from_path(random_path(rng, n - 1));
}

/// Point strictly inside a random gap of level <= max_level.
template <class T>
T gap_point(const Params<T>& params, SampleRng& rng, int max_level)
{
    const FatGap<T> gap = gap_interval(params, random_gap(rng, max_level));
    return gap.lo + gap.length * rng.unit_fraction();
}

/// Random end point of a random component of depth <= max_depth (a point of A).
template <class T>
T component_endpoint(const Params<T>& params, SampleRng& rng, int max_depth)
{
    const int d = static_cast<int>(rng.between(0, max_depth));
    const auto [lo, hi] = component_interval(params, ComponentAddress{random_path(rng, d)});
    return rng.coin() ? lo : hi;
}

/// Point strictly inside a random component at depth in [min_depth, max_depth].
template <class T>
T deep_point(const Params<T>& params, SampleRng& rng, int min_depth, int max_depth)
{
    const int d = static_cast<int>(rng.between(min_depth, max_depth));
    const auto [lo, hi] = component_interval(params, ComponentAddress{random_path(rng, d)});
    return lo + params.component_length(d) * rng.unit_fraction();
}

/// Random eventually periodic digit string over {0, 2}.
inline TernaryExpansion random_cantor_digits(SampleRng& rng, int max_pre, int max_period)
{
    Digits pre(static_cast<std::size_t>(rng.between(0, max_pre)));
    Digits per(static_cast<std::size_t>(rng.between(0, max_period)));
    for (auto& d : pre) {
        d = rng.coin() ? 2 : 0;
    }
    for (auto& d : per) {
        d = rng.coin() ? 2 : 0;
    }
    return {pre, per};
}

/// Random rational in [0, 2] with denominator 3^j * m, j <= 12, m <= 64.
inline Rational random_u(SampleRng& rng)
{
    const Integer den = pow_int(3, static_cast<unsigned long>(rng.between(0, 12))) * static_cast<unsigned long>(rng.between(1, 64));
    return make_rational(rng.below(Integer(2 * den + 1)), den);
}

} // namespace sardex::verify
