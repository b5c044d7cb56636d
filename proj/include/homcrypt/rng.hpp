#pragma once

#include <cstdint>
#include <cstddef>

#include "homcrypt/integer.hpp"

namespace homcrypt {

// Deterministic random stream. splitmix64 core: platform-independent output,
// so a fixed seed reproduces every artifact byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // Uniform Integer in [0, bound) by rejection on fixed-width bit blocks.
    Integer below_mpz(const Integer& bound) {
        std::size_t bits = bit_size_int(bound);
        for (;;) {
            Integer r = random_bits(bits);
            if (r < bound)
                return r;
        }
    }

    // Uniform Integer in [lo, hi] inclusive.
    Integer range_mpz(const Integer& lo, const Integer& hi) {
        return lo + below_mpz(hi - lo + 1);
    }

private:
    Integer random_bits(std::size_t bits) {
        static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
        Integer r = 0;
        std::size_t produced = 0;
        while (produced < bits) {
            r <<= 64;
            r += Integer(static_cast<unsigned long>(next_u64()));
            produced += 64;
        }
        if (produced > bits)
            r >>= (produced - bits);
        return r;
    }

    std::uint64_t state_;
};

} // namespace homcrypt
