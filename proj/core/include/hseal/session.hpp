#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hseal/codec.hpp"
#include "hseal/envelope.hpp"
#include "hseal/linalg.hpp"

namespace hseal {

/// Range auto-generated session orders are drawn from. The defaults keep
/// desk-scale runs fast; widen for larger sessions.
struct SessionConfig {
    std::size_t min_order = 11;
    std::size_t max_order = 97;
};

/// The per-session secrets: matrix order n (prime), block size m < n, and
/// optionally a fixed garbage string. When `garbage` is absent, fresh
/// garbage is drawn from the rng for every block.
struct SessionParams {
    std::size_t order = 0;       // n
    std::size_t block_size = 0;  // m
    std::optional<GarbageString> garbage;
};

/// Draw n uniformly from the primes in [config.min_order, config.max_order]
/// and m uniformly from [1, n-1].
SessionParams generate_params(SeededRng& rng, const SessionConfig& config = {});

/// One transmitted block: Y = H*T plus the enveloped session values. The
/// envelopes are single-element; k_env (one ciphertext per garbage byte) is
/// present only in authenticated mode. Bundles of one message share
/// identical n_env/m_env headers.
struct CipherBundle {
    RatVector y;
    Envelope n_env;
    Envelope m_env;
    std::optional<Envelope> k_env;
};

struct AuthResult {
    bool authenticated = false;
    std::optional<ByteString> plaintext;  // set exactly when authenticated
};

/// Encrypt with caller-supplied session parameters. Per block: T = P
/// followed by garbage, Y = H*T computed exactly. Throws ParameterError when
/// the parameters are unusable (n not prime, m >= n, receiver modulus too
/// small to envelope n or a byte).
std::vector<CipherBundle> encrypt_session(std::span<const Byte> message,
                                          const RsaPublicKey& receiver,
                                          const SessionParams& params,
                                          SeededRng& rng);

/// Encrypt with auto-generated session parameters.
std::vector<CipherBundle> encrypt_session(std::span<const Byte> message,
                                          const RsaPublicKey& receiver,
                                          SeededRng& rng,
                                          const SessionConfig& config = {});

/// Open the envelopes, compute T = H^-1 * Y exactly, take the first m
/// entries of each block, strip the padding. Every recovered entry must be
/// an integer in [0, 255]; anything else raises IntegrityError (tampered
/// ciphertext). A non-prime recovered order or m >= n raises EnvelopeError.
ByteString decrypt_session(const std::vector<CipherBundle>& bundles,
                           const RsaPrivateKey& receiver);

/// encrypt_session plus k_env: each bundle carries the element-wise
/// envelope of the garbage string actually appended to its block.
std::vector<CipherBundle> auth_send(std::span<const Byte> message,
                                    const RsaPublicKey& receiver,
                                    SeededRng& rng,
                                    const SessionConfig& config = {});
std::vector<CipherBundle> auth_send(std::span<const Byte> message,
                                    const RsaPublicKey& receiver,
                                    const SessionParams& params,
                                    SeededRng& rng);

/// Recover T, re-encrypt the recovered garbage under the receiver's public
/// key and compare with k_env. Tampering shows up as a comparison mismatch
/// or as a non-integer column, both reported as authenticated == false
/// rather than an exception. A bundle without k_env is caller error:
/// ParameterError.
AuthResult auth_verify(const std::vector<CipherBundle>& bundles,
                       const RsaPrivateKey& receiver_priv,
                       const RsaPublicKey& receiver_pub);

/// The dimension leak: Y has exactly n entries, so the "secret" order is
/// readable off any bundle without touching the envelopes.
std::size_t infer_order(const CipherBundle& bundle);

/// Pre-shared-parameter mode: both ends already know (n, m), so the columns
/// travel bare with no envelopes. Same block pipeline as encrypt_session.
std::vector<RatVector> encrypt_preshared(std::span<const Byte> message,
                                         const SessionParams& params,
                                         SeededRng& rng);
ByteString decrypt_preshared(const std::vector<RatVector>& columns,
                             std::size_t order, std::size_t block_size);

}  // namespace hseal
