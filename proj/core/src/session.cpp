#include "hseal/session.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "hseal/errors.hpp"
#include "hseal/hilbert.hpp"

namespace hseal {

namespace {

// Parameter checks that do not involve the receiver's key.
void validate_params(const SessionParams& params) {
    if (params.order < 2 || !is_probable_prime(mpz_class(
                                static_cast<unsigned long>(params.order)))) {
        throw ParameterError("session order " + std::to_string(params.order) +
                             " is not prime");
    }
    if (params.block_size == 0 || params.block_size >= params.order) {
        throw ParameterError("block size " + std::to_string(params.block_size) +
                             " must be in [1, " + std::to_string(params.order) +
                             ")");
    }
    if (params.garbage &&
        params.garbage->size() != params.order - params.block_size) {
        throw ParameterError("garbage string has " +
                             std::to_string(params.garbage->size()) +
                             " bytes, expected " +
                             std::to_string(params.order - params.block_size));
    }
}

void validate_envelope_capacity(const SessionParams& params,
                                const mpz_class& modulus) {
    if (modulus <= static_cast<unsigned long>(params.order)) {
        throw ParameterError(
            "receiver modulus too small to envelope the session order");
    }
    if (modulus <= 255) {
        throw ParameterError("receiver modulus too small to envelope a byte");
    }
}

RatVector column_product(const RatMatrix& h, const PaddedColumn& column) {
    RatVector t;
    t.reserve(column.size());
    for (Byte b : column) {
        t.emplace_back(static_cast<long>(b));
    }
    return mat_vec(h, t);
}

std::vector<CipherBundle> encrypt_impl(std::span<const Byte> message,
                                       const RsaPublicKey& receiver,
                                       const SessionParams& params,
                                       SeededRng& rng, bool authenticated) {
    validate_params(params);
    validate_envelope_capacity(params, receiver.modulus);

    const std::size_t n = params.order;
    const std::size_t m = params.block_size;

    const Envelope n_env = {
        rsa_encrypt(receiver, mpz_class(static_cast<unsigned long>(n)))};
    const Envelope m_env = {
        rsa_encrypt(receiver, mpz_class(static_cast<unsigned long>(m)))};

    const RatMatrix h = hilbert_matrix(n);
    std::vector<PlainBlock> blocks = encode_blocks(message, m);

    std::vector<CipherBundle> bundles;
    bundles.reserve(blocks.size());
    for (const PlainBlock& block : blocks) {
        GarbageString garbage =
            params.garbage ? *params.garbage : make_garbage(n - m, rng);
        PaddedColumn column = pad_column(block, garbage, n);
        CipherBundle bundle{column_product(h, column), n_env, m_env,
                            std::nullopt};
        if (authenticated) {
            bundle.k_env = envelope_string(receiver, garbage);
        }
        bundles.push_back(std::move(bundle));
    }
    return bundles;
}

struct SessionHeader {
    std::size_t order;
    std::size_t block_size;
};

// Open and sanity-check the shared (n', m') header of a bundle sequence.
SessionHeader open_header(const std::vector<CipherBundle>& bundles,
                          const RsaPrivateKey& receiver) {
    if (bundles.empty()) {
        throw std::invalid_argument("empty bundle sequence");
    }
    for (const CipherBundle& b : bundles) {
        if (b.n_env.size() != 1 || b.m_env.size() != 1) {
            throw std::invalid_argument(
                "bundle header envelopes must be single-element");
        }
        if (b.n_env != bundles.front().n_env ||
            b.m_env != bundles.front().m_env) {
            throw std::invalid_argument(
                "bundles do not share a session header");
        }
    }

    mpz_class n_val = rsa_decrypt(receiver, bundles.front().n_env.front());
    if (n_val < 2 || !n_val.fits_ulong_p()) {
        throw EnvelopeError("recovered order is out of range");
    }
    if (!is_probable_prime(n_val)) {
        throw EnvelopeError("recovered order is not prime");
    }
    mpz_class m_val = rsa_decrypt(receiver, bundles.front().m_env.front());
    if (m_val < 1 || m_val >= n_val) {
        throw EnvelopeError("recovered block size is out of range");
    }
    return {static_cast<std::size_t>(n_val.get_ui()),
            static_cast<std::size_t>(m_val.get_ui())};
}

// T = H^-1 * Y, demanding an exact byte column.
PaddedColumn recover_column(const RatMatrix& hinv, const RatVector& y,
                            std::size_t order) {
    if (y.size() != order) {
        throw IntegrityError("ciphertext has " + std::to_string(y.size()) +
                             " entries but the recovered order is " +
                             std::to_string(order));
    }
    RatVector t = mat_vec(hinv, y);
    PaddedColumn column;
    column.reserve(order);
    for (const Rational& entry : t) {
        if (!entry.is_integer() || entry.num() < 0 || entry.num() > 255) {
            throw IntegrityError(
                "recovered column entry " + entry.str() +
                " is not a byte; the ciphertext was altered in transit");
        }
        column.push_back(static_cast<Byte>(entry.num().get_ui()));
    }
    return column;
}

}  // namespace

SessionParams generate_params(SeededRng& rng, const SessionConfig& config) {
    if (config.min_order > config.max_order) {
        throw std::invalid_argument("generate_params: empty order range");
    }
    std::vector<std::size_t> primes;
    for (std::size_t v = std::max<std::size_t>(2, config.min_order);
         v <= config.max_order; ++v) {
        if (is_probable_prime(mpz_class(static_cast<unsigned long>(v)))) {
            primes.push_back(v);
        }
    }
    if (primes.empty()) {
        throw ParameterError("generate_params: no primes in [" +
                             std::to_string(config.min_order) + ", " +
                             std::to_string(config.max_order) + "]");
    }
    std::size_t n = primes[rng.uniform(0, primes.size() - 1)];
    std::size_t m = rng.uniform(1, n - 1);
    return SessionParams{n, m, std::nullopt};
}

std::vector<CipherBundle> encrypt_session(std::span<const Byte> message,
                                          const RsaPublicKey& receiver,
                                          const SessionParams& params,
                                          SeededRng& rng) {
    return encrypt_impl(message, receiver, params, rng, false);
}

std::vector<CipherBundle> encrypt_session(std::span<const Byte> message,
                                          const RsaPublicKey& receiver,
                                          SeededRng& rng,
                                          const SessionConfig& config) {
    return encrypt_impl(message, receiver, generate_params(rng, config), rng,
                        false);
}

ByteString decrypt_session(const std::vector<CipherBundle>& bundles,
                           const RsaPrivateKey& receiver) {
    SessionHeader header = open_header(bundles, receiver);
    const RatMatrix hinv = hilbert_inverse(header.order);

    std::vector<PlainBlock> blocks;
    blocks.reserve(bundles.size());
    for (const CipherBundle& bundle : bundles) {
        PaddedColumn column = recover_column(hinv, bundle.y, header.order);
        blocks.push_back(strip_column(column, header.block_size).first);
    }
    return decode_blocks(blocks);
}

std::vector<CipherBundle> auth_send(std::span<const Byte> message,
                                    const RsaPublicKey& receiver,
                                    SeededRng& rng,
                                    const SessionConfig& config) {
    return encrypt_impl(message, receiver, generate_params(rng, config), rng,
                        true);
}

std::vector<CipherBundle> auth_send(std::span<const Byte> message,
                                    const RsaPublicKey& receiver,
                                    const SessionParams& params,
                                    SeededRng& rng) {
    return encrypt_impl(message, receiver, params, rng, true);
}

AuthResult auth_verify(const std::vector<CipherBundle>& bundles,
                       const RsaPrivateKey& receiver_priv,
                       const RsaPublicKey& receiver_pub) {
    if (bundles.empty()) {
        throw std::invalid_argument("empty bundle sequence");
    }
    for (const CipherBundle& bundle : bundles) {
        if (!bundle.k_env) {
            throw ParameterError(
                "auth_verify: bundle is not in authenticated mode");
        }
    }

    try {
        SessionHeader header = open_header(bundles, receiver_priv);
        const RatMatrix hinv = hilbert_inverse(header.order);

        std::vector<PlainBlock> blocks;
        blocks.reserve(bundles.size());
        for (const CipherBundle& bundle : bundles) {
            PaddedColumn column = recover_column(hinv, bundle.y, header.order);
            auto [block, garbage] = strip_column(column, header.block_size);
            // The received K' must equal a fresh encryption of the recovered
            // garbage; textbook RSA is deterministic, so equality is exact.
            if (envelope_string(receiver_pub, garbage) != *bundle.k_env) {
                return {};
            }
            blocks.push_back(std::move(block));
        }
        return {true, decode_blocks(blocks)};
    } catch (const IntegrityError&) {
        return {};
    } catch (const EnvelopeError&) {
        return {};
    } catch (const PadError&) {
        return {};
    }
}

std::size_t infer_order(const CipherBundle& bundle) {
    return bundle.y.size();
}

std::vector<RatVector> encrypt_preshared(std::span<const Byte> message,
                                         const SessionParams& params,
                                         SeededRng& rng) {
    validate_params(params);
    const std::size_t n = params.order;
    const std::size_t m = params.block_size;
    const RatMatrix h = hilbert_matrix(n);

    std::vector<RatVector> columns;
    for (const PlainBlock& block : encode_blocks(message, m)) {
        GarbageString garbage =
            params.garbage ? *params.garbage : make_garbage(n - m, rng);
        columns.push_back(column_product(h, pad_column(block, garbage, n)));
    }
    return columns;
}

ByteString decrypt_preshared(const std::vector<RatVector>& columns,
                             std::size_t order, std::size_t block_size) {
    validate_params(SessionParams{order, block_size, std::nullopt});
    if (columns.empty()) {
        throw std::invalid_argument("empty column sequence");
    }
    const RatMatrix hinv = hilbert_inverse(order);
    std::vector<PlainBlock> blocks;
    blocks.reserve(columns.size());
    for (const RatVector& y : columns) {
        PaddedColumn column = recover_column(hinv, y, order);
        blocks.push_back(strip_column(column, block_size).first);
    }
    return decode_blocks(blocks);
}

}  // namespace hseal
