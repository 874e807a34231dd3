#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hseal/session.hpp"

namespace hseal {

// Bundle files are line-oriented UTF-8, frozen at version "HSEAL v1":
//
//   HSEAL v1
//   mode: plain|auth
//   n': <decimal>
//   m': <decimal>
//   Y: r1,r2,...,rn          (one line per block, canonical rationals)
//   K': e1,e2,...            (follows each Y line in auth mode only)
//
// with a trailing newline. Output bytes are a pure function of the logical
// bundle: same input, same bytes.

/// Serialize a bundle sequence. All bundles must share one (n', m') header
/// and agree on mode; violations throw std::invalid_argument.
std::string write_bundle(const std::vector<CipherBundle>& bundles);

/// Strict inverse of write_bundle. Throws ParseError naming the 1-based
/// line number on any malformed input (bad magic, unknown mode, missing
/// field, non-canonical rational, zero denominator, stray K').
std::vector<CipherBundle> read_bundle(std::string_view data);

}  // namespace hseal
