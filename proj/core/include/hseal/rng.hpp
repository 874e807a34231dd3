#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace hseal {

/// Deterministic random source. Every random choice in the toolkit (session
/// order, block size, garbage bytes, RSA primes, Miller-Rabin witnesses)
/// flows through one of these, so a single seed reproduces an entire run.
/// mt19937_64 has a standard-mandated output sequence; the sampling helpers
/// below avoid std::uniform_int_distribution, whose output is
/// implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// Nondeterministic instance for production use.
    static SeededRng from_entropy();

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [lo, hi], both ends inclusive. Rejection-sampled.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    std::uint8_t byte() { return static_cast<std::uint8_t>(uniform(0, 255)); }

    /// Uniform in [0, 2^nbits).
    mpz_class bits(std::size_t nbits);

    /// Uniform in [0, bound). bound must be positive.
    mpz_class below(const mpz_class& bound);

private:
    std::mt19937_64 gen_;
};

}  // namespace hseal
