#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hseal {

/// Matrix has no inverse.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Block padding failed to decode.
struct PadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A recovered column is not an integer byte column: the ciphertext (or its
/// header) was altered in transit. Exact arithmetic makes this detectable.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enveloped value is unusable after decryption (wrong key, corrupted
/// element, order not prime, block size out of range).
struct EnvelopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid session or protocol parameters.
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ring protocol cannot run with the given participants.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wire-format violation; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace hseal
