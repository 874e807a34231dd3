#include "hseal/sum_protocol.hpp"

#include <stdexcept>

#include "hseal/errors.hpp"

namespace hseal {

SumTranscript run_sum_protocol(const std::vector<mpz_class>& secrets,
                               const mpz_class& blind) {
    const std::size_t k = secrets.size();
    if (k < 2) {
        throw ProtocolError("sum protocol needs at least two participants");
    }
    if (blind < 1) {
        throw ParameterError("blind must be a positive integer");
    }
    for (const mpz_class& s : secrets) {
        if (s < 1) {
            throw ParameterError("secrets must be positive integers");
        }
    }

    SumTranscript transcript;
    transcript.messages.reserve(k);

    // Participant 1 starts the ring with c + n_1; each hop adds its own
    // secret; the last hop returns to participant 1.
    mpz_class running = blind + secrets[0];
    for (std::size_t i = 1; i < k; ++i) {
        transcript.messages.push_back({i, i + 1, running});
        running += secrets[i];
    }
    transcript.messages.push_back({k, 1, running});

    // Participant 1 removes the blind and broadcasts the total.
    transcript.broadcast = running - blind;
    return transcript;
}

std::pair<SharedSession, std::vector<CipherBundle>> shared_key_session(
    const std::vector<mpz_class>& secrets, const mpz_class& blind,
    std::span<const Byte> message, const RsaPublicKey& receiver,
    SeededRng& rng) {
    SumTranscript transcript = run_sum_protocol(secrets, blind);

    const mpz_class& sum = transcript.broadcast;
    if (!sum.fits_ulong_p() || !is_probable_prime(sum)) {
        throw ParameterError("sum of secrets (" + sum.get_str() +
                             ") is not prime; participants must re-select "
                             "their secrets");
    }
    const std::size_t order = static_cast<std::size_t>(sum.get_ui());

    SessionParams params;
    params.order = order;
    params.block_size = rng.uniform(1, order - 1);

    std::vector<CipherBundle> bundles =
        encrypt_session(message, receiver, params, rng);
    return {SharedSession{secrets, order, std::move(transcript)},
            std::move(bundles)};
}

PrivacyReport privacy_audit(const SumTranscript& transcript,
                            std::size_t observer) {
    const std::size_t k = transcript.messages.size();
    if (k < 2) {
        throw std::invalid_argument("privacy_audit: malformed transcript");
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t expect_to = (i + 1 < k) ? i + 2 : 1;
        if (transcript.messages[i].from != i + 1 ||
            transcript.messages[i].to != expect_to) {
            throw std::invalid_argument(
                "privacy_audit: transcript is not a 1->2->...->k->1 ring");
        }
    }
    if (observer < 1 || observer > k) {
        throw std::invalid_argument("privacy_audit: observer out of range");
    }

    PrivacyReport report;
    report.observer = observer;
    report.participants = k;
    report.broadcast = transcript.broadcast;
    // Message addressed to this observer: hop observer-1 -> observer, or the
    // closing hop k -> 1.
    report.incoming = (observer == 1) ? transcript.messages[k - 1].value
                                      : transcript.messages[observer - 2].value;

    if (observer == 1) {
        report.hidden_term_bound = 0;
        if (k == 2) {
            report.exposes_individual_secret = true;
            report.note =
                "participant 1 recovers the other secret exactly: "
                "n_2 = broadcast - n_1";
        } else {
            report.note =
                "participant 1 learns only the total of the other " +
                std::to_string(k - 1) + " secrets, not any individual one";
        }
    } else {
        // incoming = c + n_1 + ... + n_{observer-1}: `observer` hidden terms,
        // each at least 1. Any single term can be anything in
        // [1, incoming - (observer - 1)].
        report.hidden_term_bound =
            report.incoming - static_cast<unsigned long>(observer - 1);
        report.note =
            "incoming value is explained by every choice of any single "
            "hidden term in [1, " +
            report.hidden_term_bound.get_str() +
            "]; no individual secret is determined";
    }
    return report;
}

}  // namespace hseal
