#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hseal/envelope.hpp"
#include "hseal/session.hpp"

namespace hseal {

/// One hop of the ring. Participant indices are 1-based.
struct SumMessage {
    std::size_t from;
    std::size_t to;
    mpz_class value;
};

/// Ordered record of every value that crossed the (simulated) wire:
/// messages 1->2, 2->3, ..., k->1, then the broadcast total.
struct SumTranscript {
    std::vector<SumMessage> messages;
    mpz_class broadcast;  // sum of all secrets
};

/// The ring sum: participant 1 blinds a running total with its secret
/// constant, every participant adds its own secret, and participant 1
/// removes the blind and broadcasts the sum. Sequential and deterministic.
/// Throws ProtocolError for fewer than two participants and ParameterError
/// for non-positive secrets or blind.
SumTranscript run_sum_protocol(const std::vector<mpz_class>& secrets,
                               const mpz_class& blind);

/// A completed group session: the secrets, the agreed order n = sum of
/// secrets, and the full transcript for auditing.
struct SharedSession {
    std::vector<mpz_class> secrets;
    std::size_t order;
    SumTranscript transcript;
};

/// Run the sum protocol, then encrypt with n = sum of secrets and m drawn
/// uniformly from [1, n-1]. The sum must be prime to serve as a session
/// order; a non-prime sum raises ParameterError telling the participants to
/// re-select secrets.
std::pair<SharedSession, std::vector<CipherBundle>> shared_key_session(
    const std::vector<mpz_class>& secrets, const mpz_class& blind,
    std::span<const Byte> message, const RsaPublicKey& receiver,
    SeededRng& rng);

/// What one ring position actually observed, and whether that view pins
/// down any other participant's secret.
///
/// For an observer other than participant 1 the incoming value is
/// c + n_1 + ... + n_{i-1} with i unknowns, each >= 1, so any single
/// unknown is consistent with every value in [1, incoming - (i-1)]:
/// nothing is determined as long as that bound exceeds 1. Participant 1
/// learns the total of the others' secrets (broadcast minus its own); for
/// k == 2 that total *is* the other secret - the protocol's known limit.
struct PrivacyReport {
    std::size_t observer = 0;
    std::size_t participants = 0;
    mpz_class incoming;   // the ring value addressed to the observer
    mpz_class broadcast;
    /// observer != 1: largest value any single hidden term can take while
    /// staying consistent with `incoming`; 0 for observer 1.
    mpz_class hidden_term_bound;
    bool exposes_individual_secret = false;  // observer 1 with k == 2
    std::string note;
};

/// Audit a transcript from one participant's point of view. Throws
/// std::invalid_argument when observer is not in [1, k] or the transcript
/// is malformed.
PrivacyReport privacy_audit(const SumTranscript& transcript,
                            std::size_t observer);

}  // namespace hseal
