#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hseal/codec.hpp"
#include "hseal/rng.hpp"

namespace hseal {

// Textbook RSA: c = v^e mod N, unpadded and deterministic. The determinism
// is load-bearing: authentication re-encrypts the recovered garbage string
// and compares ciphertexts, which randomized padding would break. It is also
// what makes this construction insecure as general-purpose RSA; see the
// README for the full caveat.

struct RsaPublicKey {
    mpz_class modulus;   // N = p*q
    mpz_class exponent;  // e
};

struct RsaPrivateKey {
    mpz_class modulus;   // N
    mpz_class exponent;  // d, with e*d == 1 (mod phi(N))
};

struct RsaKeyPair {
    RsaPublicKey pub;
    RsaPrivateKey priv;
};

/// Element-wise RSA ciphertexts, each in [0, N).
using Envelope = std::vector<mpz_class>;

/// Miller-Rabin with a fixed deterministic base set; exact for every value
/// this toolkit ever tests (far below 3.3e24).
bool is_probable_prime(const mpz_class& value);

/// Random prime of exactly `bits` bits (top and bottom bits set), certified
/// by 40 Miller-Rabin rounds with witnesses drawn from rng. bits >= 2.
mpz_class random_prime(std::size_t bits, SeededRng& rng);

/// Generate a key pair with a `bits`-bit modulus. bits >= 16 (toy floor).
/// Deterministic under a seeded rng. Prefers e = 65537, falling back to the
/// smallest odd candidate coprime to phi(N).
RsaKeyPair rsa_keygen(std::size_t bits, SeededRng& rng);

/// Assemble a key pair from given primes and public exponent; validates
/// primality, distinctness and gcd(e, phi) == 1 (ParameterError otherwise).
RsaKeyPair rsa_from_primes(const mpz_class& p, const mpz_class& q,
                           const mpz_class& e);

/// value^e mod N. Throws std::out_of_range unless 0 <= value < N.
mpz_class rsa_encrypt(const RsaPublicKey& key, const mpz_class& value);

/// value^d mod N. Throws std::out_of_range unless 0 <= value < N.
mpz_class rsa_decrypt(const RsaPrivateKey& key, const mpz_class& value);

/// Element-wise encryption of a byte string, order preserved.
Envelope envelope_string(const RsaPublicKey& key, const GarbageString& s);

/// Element-wise decryption. A decrypted element outside [0, 255] means the
/// envelope was opened with the wrong key or altered: EnvelopeError.
GarbageString open_envelope(const RsaPrivateKey& key, const Envelope& env);

// Key files are textual and line-oriented: "N=<decimal>" and "e=<decimal>"
// for the public half, plus "d=<decimal>" for the private file.

std::string format_public_key(const RsaPublicKey& key);
std::string format_private_key(const RsaKeyPair& pair);
RsaPublicKey parse_public_key(std::string_view text);
RsaKeyPair parse_private_key(std::string_view text);

}  // namespace hseal
