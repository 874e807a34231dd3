#include "hseal/envelope.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "hseal/errors.hpp"

namespace hseal {

namespace {

constexpr std::array<unsigned long, 40> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

// One Miller-Rabin round. value must be odd and > 3; base in [2, value-2].
// Returns false when base witnesses compositeness.
bool mr_round(const mpz_class& value, const mpz_class& base) {
    mpz_class d = value - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(),
             value.get_mpz_t());
    if (x == 1 || x == value - 1) {
        return true;
    }
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % value;
        if (x == value - 1) {
            return true;
        }
    }
    return false;
}

bool miller_rabin_seeded(const mpz_class& value, unsigned rounds,
                         SeededRng& rng) {
    for (unsigned i = 0; i < rounds; ++i) {
        mpz_class base = 2 + rng.below(value - 3);
        if (!mr_round(value, base)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_probable_prime(const mpz_class& value) {
    if (value < 2) {
        return false;
    }
    for (unsigned long p : kSmallPrimes) {
        if (value == p) {
            return true;
        }
        if (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
            return false;
        }
    }
    // Fixed bases keep the test deterministic; the first 40 primes are
    // exact far beyond any order or toy modulus this library handles.
    for (unsigned long p : kSmallPrimes) {
        if (!mr_round(value, mpz_class(p))) {
            return false;
        }
    }
    return true;
}

mpz_class random_prime(std::size_t bits, SeededRng& rng) {
    if (bits < 2) {
        throw std::invalid_argument("random_prime: need at least 2 bits");
    }
    for (;;) {
        mpz_class candidate = rng.bits(bits);
        mpz_setbit(candidate.get_mpz_t(), bits - 1);
        mpz_setbit(candidate.get_mpz_t(), 0);
        if (candidate <= 3) {
            if (candidate == 3) {
                return candidate;
            }
            continue;
        }
        bool divisible = false;
        for (unsigned long p : kSmallPrimes) {
            if (candidate == p) {
                return candidate;
            }
            if (mpz_divisible_ui_p(candidate.get_mpz_t(), p)) {
                divisible = true;
                break;
            }
        }
        if (divisible) {
            continue;
        }
        if (miller_rabin_seeded(candidate, 40, rng)) {
            return candidate;
        }
    }
}

RsaKeyPair rsa_keygen(std::size_t bits, SeededRng& rng) {
    if (bits < 16) {
        throw std::invalid_argument("rsa_keygen: modulus below 16 bits");
    }
    const std::size_t p_bits = bits - bits / 2;
    const std::size_t q_bits = bits / 2;

    for (;;) {
        mpz_class p = random_prime(p_bits, rng);
        mpz_class q = random_prime(q_bits, rng);
        if (p == q) {
            continue;
        }
        mpz_class phi = (p - 1) * (q - 1);

        mpz_class e = 65537;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
        if (e >= phi || g != 1) {
            // Smallest odd candidate coprime to phi.
            for (e = 3; e < phi; e += 2) {
                mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
                if (g == 1) {
                    break;
                }
            }
            if (e >= phi) {
                continue;  // no usable exponent; redraw primes
            }
        }

        mpz_class d;
        mpz_invert(d.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
        mpz_class modulus = p * q;
        return {RsaPublicKey{modulus, e}, RsaPrivateKey{modulus, d}};
    }
}

RsaKeyPair rsa_from_primes(const mpz_class& p, const mpz_class& q,
                           const mpz_class& e) {
    if (!is_probable_prime(p) || !is_probable_prime(q)) {
        throw ParameterError("rsa_from_primes: p and q must be prime");
    }
    if (p == q) {
        throw ParameterError("rsa_from_primes: p and q must be distinct");
    }
    mpz_class phi = (p - 1) * (q - 1);
    if (e <= 1 || e >= phi) {
        throw ParameterError("rsa_from_primes: e out of range (1, phi)");
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
    if (g != 1) {
        throw ParameterError("rsa_from_primes: e not coprime to phi");
    }
    mpz_class d;
    mpz_invert(d.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t());
    mpz_class modulus = p * q;
    return {RsaPublicKey{modulus, e}, RsaPrivateKey{modulus, d}};
}

mpz_class rsa_encrypt(const RsaPublicKey& key, const mpz_class& value) {
    if (value < 0 || value >= key.modulus) {
        throw std::out_of_range("rsa_encrypt: value outside [0, N)");
    }
    mpz_class out;
    mpz_powm(out.get_mpz_t(), value.get_mpz_t(), key.exponent.get_mpz_t(),
             key.modulus.get_mpz_t());
    return out;
}

mpz_class rsa_decrypt(const RsaPrivateKey& key, const mpz_class& value) {
    if (value < 0 || value >= key.modulus) {
        throw std::out_of_range("rsa_decrypt: value outside [0, N)");
    }
    mpz_class out;
    mpz_powm(out.get_mpz_t(), value.get_mpz_t(), key.exponent.get_mpz_t(),
             key.modulus.get_mpz_t());
    return out;
}

Envelope envelope_string(const RsaPublicKey& key, const GarbageString& s) {
    Envelope env;
    env.reserve(s.size());
    for (Byte b : s) {
        env.push_back(rsa_encrypt(key, mpz_class(static_cast<unsigned long>(b))));
    }
    return env;
}

GarbageString open_envelope(const RsaPrivateKey& key, const Envelope& env) {
    GarbageString out;
    out.reserve(env.size());
    for (const mpz_class& c : env) {
        mpz_class v = rsa_decrypt(key, c);
        if (v > 255) {
            throw EnvelopeError(
                "open_envelope: element decrypts outside byte range "
                "(wrong key or tampered envelope)");
        }
        out.push_back(static_cast<Byte>(v.get_ui()));
    }
    return out;
}

namespace {

// Line-oriented "key=value" files, decimal only.
mpz_class parse_key_line(std::string_view text, std::size_t line_no,
                         std::string_view key, std::string_view& rest) {
    auto eol = rest.find('\n');
    if (eol == std::string_view::npos) {
        throw ParseError(line_no, "key file: missing line '" +
                                      std::string(key) + "=<decimal>'");
    }
    std::string_view line = rest.substr(0, eol);
    rest.remove_prefix(eol + 1);
    if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
        line[key.size()] != '=') {
        throw ParseError(line_no, "key file: expected '" + std::string(key) +
                                      "=<decimal>'");
    }
    std::string_view value = line.substr(key.size() + 1);
    if (value.empty()) {
        throw ParseError(line_no, "key file: empty value");
    }
    for (char c : value) {
        if (c < '0' || c > '9') {
            throw ParseError(line_no, "key file: value is not a decimal");
        }
    }
    (void)text;
    return mpz_class(std::string(value), 10);
}

}  // namespace

std::string format_public_key(const RsaPublicKey& key) {
    return "N=" + key.modulus.get_str() + "\ne=" + key.exponent.get_str() +
           "\n";
}

std::string format_private_key(const RsaKeyPair& pair) {
    return "N=" + pair.pub.modulus.get_str() +
           "\ne=" + pair.pub.exponent.get_str() +
           "\nd=" + pair.priv.exponent.get_str() + "\n";
}

RsaPublicKey parse_public_key(std::string_view text) {
    std::string_view rest = text;
    mpz_class n = parse_key_line(text, 1, "N", rest);
    mpz_class e = parse_key_line(text, 2, "e", rest);
    if (!rest.empty()) {
        throw ParseError(3, "key file: trailing content");
    }
    return {n, e};
}

RsaKeyPair parse_private_key(std::string_view text) {
    std::string_view rest = text;
    mpz_class n = parse_key_line(text, 1, "N", rest);
    mpz_class e = parse_key_line(text, 2, "e", rest);
    mpz_class d = parse_key_line(text, 3, "d", rest);
    if (!rest.empty()) {
        throw ParseError(4, "key file: trailing content");
    }
    return {RsaPublicKey{n, e}, RsaPrivateKey{n, d}};
}

}  // namespace hseal
