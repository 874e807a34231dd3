// hseal - Hilbert-matrix session-key encryption toolkit.
//
// Every subcommand is deterministic under --seed; without it, seeds come
// from the system entropy source. All failures go to stderr with a nonzero
// exit code.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hseal/analysis.hpp"
#include "hseal/codec.hpp"
#include "hseal/envelope.hpp"
#include "hseal/rng.hpp"
#include "hseal/session.hpp"
#include "hseal/sum_protocol.hpp"
#include "hseal/wire.hpp"

namespace {

hseal::ByteString read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string s = buf.str();
    return hseal::ByteString(s.begin(), s.end());
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_bytes(const std::string& path, const hseal::ByteString& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw std::runtime_error("failed to write '" + path + "'");
    }
}

void write_text(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << data;
    if (!out) {
        throw std::runtime_error("failed to write '" + path + "'");
    }
}

std::vector<mpz_class> parse_secrets(const std::string& csv) {
    std::vector<mpz_class> secrets;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string token = csv.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        if (token.empty()) {
            throw std::runtime_error("--secrets: empty entry in '" + csv + "'");
        }
        for (char c : token) {
            if (c < '0' || c > '9') {
                throw std::runtime_error("--secrets: '" + token +
                                         "' is not a decimal integer");
            }
        }
        secrets.emplace_back(token, 10);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return secrets;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-matrix session-key encryption toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string in_path, out_path, pub_path, priv_path, out_pub, out_priv;
    std::string secrets_csv, blind_str;
    std::size_t bits = 0, opt_n = 0, opt_m = 0, max_order = 15;

    auto make_rng = [&](const CLI::Option* seed_opt) {
        return seed_opt->count() > 0 ? hseal::SeededRng(seed)
                                     : hseal::SeededRng::from_entropy();
    };

    // keygen
    auto* keygen = app.add_subcommand("keygen", "Generate an RSA key pair");
    keygen->add_option("--bits", bits, "Modulus size in bits (>= 16)")
        ->required();
    keygen->add_option("--out-pub", out_pub, "Public key file")->required();
    keygen->add_option("--out-priv", out_priv, "Private key file")->required();
    auto* keygen_seed = keygen->add_option("--seed", seed, "Deterministic seed");
    keygen->callback([&] {
        hseal::SeededRng rng = make_rng(keygen_seed);
        hseal::RsaKeyPair pair = hseal::rsa_keygen(bits, rng);
        write_text(out_pub, hseal::format_public_key(pair.pub));
        write_text(out_priv, hseal::format_private_key(pair));
    });

    // encrypt
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
    encrypt->add_option("--in", in_path, "Plaintext file")->required();
    encrypt->add_option("--pub", pub_path, "Receiver public key")->required();
    encrypt->add_option("--out", out_path, "Bundle file")->required();
    auto* enc_n = encrypt->add_option("--n", opt_n, "Session order (prime)");
    auto* enc_m = encrypt->add_option("--m", opt_m, "Block size (< n)");
    enc_n->needs(enc_m);
    enc_m->needs(enc_n);
    auto* enc_seed = encrypt->add_option("--seed", seed, "Deterministic seed");
    encrypt->callback([&] {
        hseal::SeededRng rng = make_rng(enc_seed);
        hseal::ByteString message = read_bytes(in_path);
        hseal::RsaPublicKey pub = hseal::parse_public_key(read_text(pub_path));
        std::vector<hseal::CipherBundle> bundles;
        if (enc_n->count() > 0) {
            hseal::SessionParams params{opt_n, opt_m, std::nullopt};
            bundles = hseal::encrypt_session(message, pub, params, rng);
        } else {
            bundles = hseal::encrypt_session(message, pub, rng);
        }
        write_text(out_path, hseal::write_bundle(bundles));
    });

    // decrypt
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a bundle file");
    decrypt->add_option("--in", in_path, "Bundle file")->required();
    decrypt->add_option("--priv", priv_path, "Receiver private key")
        ->required();
    decrypt->add_option("--out", out_path, "Recovered plaintext file")
        ->required();
    decrypt->callback([&] {
        auto bundles = hseal::read_bundle(read_text(in_path));
        hseal::RsaKeyPair pair =
            hseal::parse_private_key(read_text(priv_path));
        write_bytes(out_path, hseal::decrypt_session(bundles, pair.priv));
    });

    // auth-send
    auto* auth_send =
        app.add_subcommand("auth-send", "Encrypt with an authentication tag");
    auth_send->add_option("--in", in_path, "Plaintext file")->required();
    auth_send->add_option("--pub", pub_path, "Receiver public key")
        ->required();
    auth_send->add_option("--out", out_path, "Bundle file")->required();
    auto* auth_seed =
        auth_send->add_option("--seed", seed, "Deterministic seed");
    auth_send->callback([&] {
        hseal::SeededRng rng = make_rng(auth_seed);
        hseal::ByteString message = read_bytes(in_path);
        hseal::RsaPublicKey pub = hseal::parse_public_key(read_text(pub_path));
        write_text(out_path,
                   hseal::write_bundle(hseal::auth_send(message, pub, rng)));
    });

    // auth-verify
    auto* auth_verify = app.add_subcommand(
        "auth-verify", "Verify and decrypt an authenticated bundle");
    auth_verify->add_option("--in", in_path, "Bundle file")->required();
    auth_verify->add_option("--priv", priv_path, "Receiver private key")
        ->required();
    auth_verify->add_option("--pub", pub_path, "Receiver public key")
        ->required();
    auth_verify->add_option("--out", out_path, "Recovered plaintext file")
        ->required();
    auth_verify->callback([&] {
        auto bundles = hseal::read_bundle(read_text(in_path));
        hseal::RsaKeyPair pair =
            hseal::parse_private_key(read_text(priv_path));
        hseal::RsaPublicKey pub = hseal::parse_public_key(read_text(pub_path));
        hseal::AuthResult result = hseal::auth_verify(bundles, pair.priv, pub);
        if (!result.authenticated) {
            throw std::runtime_error("message rejected: authentication failed");
        }
        write_bytes(out_path, *result.plaintext);
        std::cout << "authenticated\n";
    });

    // sum-demo
    auto* sum_demo =
        app.add_subcommand("sum-demo", "Run the ring sum protocol");
    sum_demo->add_option("--secrets", secrets_csv, "Comma-separated secrets")
        ->required();
    sum_demo->add_option("--blind", blind_str, "Participant 1's blind")
        ->required();
    sum_demo->callback([&] {
        auto transcript = hseal::run_sum_protocol(parse_secrets(secrets_csv),
                                                  mpz_class(blind_str, 10));
        for (const hseal::SumMessage& msg : transcript.messages) {
            std::cout << msg.from << "->" << msg.to << ": "
                      << msg.value.get_str() << '\n';
        }
        std::cout << "broadcast: " << transcript.broadcast.get_str() << '\n';
    });

    // shared-encrypt
    auto* shared = app.add_subcommand(
        "shared-encrypt", "Ring-agree on the order, then encrypt");
    shared->add_option("--secrets", secrets_csv, "Comma-separated secrets")
        ->required();
    shared->add_option("--blind", blind_str, "Participant 1's blind")
        ->required();
    shared->add_option("--in", in_path, "Plaintext file")->required();
    shared->add_option("--pub", pub_path, "Receiver public key")->required();
    shared->add_option("--out", out_path, "Bundle file")->required();
    auto* shared_seed = shared->add_option("--seed", seed, "Deterministic seed");
    shared->callback([&] {
        hseal::SeededRng rng = make_rng(shared_seed);
        hseal::ByteString message = read_bytes(in_path);
        hseal::RsaPublicKey pub = hseal::parse_public_key(read_text(pub_path));
        auto [session, bundles] = hseal::shared_key_session(
            parse_secrets(secrets_csv), mpz_class(blind_str, 10), message, pub,
            rng);
        write_text(out_path, hseal::write_bundle(bundles));
    });

    // inspect
    auto* inspect =
        app.add_subcommand("inspect", "Show what a bundle leaks on its own");
    inspect->add_option("--in", in_path, "Bundle file")->required();
    inspect->callback([&] {
        auto bundles = hseal::read_bundle(read_text(in_path));
        std::cout << "order: " << hseal::infer_order(bundles.front()) << '\n'
                  << "mode: "
                  << (bundles.front().k_env ? "auth" : "plain") << '\n'
                  << "blocks: " << bundles.size() << '\n';
    });

    // stability
    auto* stability = app.add_subcommand(
        "stability", "Float-vs-exact inversion residuals as CSV");
    stability->add_option("--max-order", max_order, "Largest order (<= 20)")
        ->required();
    stability->callback([&] {
        std::cout << hseal::stability_csv(hseal::stability_report(max_order));
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
