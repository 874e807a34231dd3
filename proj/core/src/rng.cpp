#include "hseal/rng.hpp"

#include <bit>
#include <stdexcept>

namespace hseal {

SeededRng SeededRng::from_entropy() {
    std::random_device rd;
    std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    return SeededRng(seed);
}

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("SeededRng::uniform: lo > hi");
    }
    if (lo == 0 && hi == ~std::uint64_t{0}) {
        return next_u64();
    }
    std::uint64_t span = hi - lo + 1;
    if (span == 1) {
        return lo;
    }
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(span - 1);
    std::uint64_t v;
    do {
        v = next_u64() & mask;
    } while (v >= span);
    return lo + v;
}

mpz_class SeededRng::bits(std::size_t nbits) {
    if (nbits == 0) {
        return 0;
    }
    mpz_class out = 0;
    std::size_t words = (nbits + 63) / 64;
    for (std::size_t i = 0; i < words; ++i) {
        mpz_class word(static_cast<unsigned long>(next_u64()));
        out |= word << (64 * i);
    }
    // Trim to exactly nbits.
    mpz_class limit = mpz_class(1) << nbits;
    out %= limit;
    return out;
}

mpz_class SeededRng::below(const mpz_class& bound) {
    if (bound <= 0) {
        throw std::invalid_argument("SeededRng::below: bound must be positive");
    }
    std::size_t nbits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    mpz_class v;
    do {
        v = bits(nbits);
    } while (v >= bound);
    return v;
}

}  // namespace hseal
