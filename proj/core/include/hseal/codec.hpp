#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hseal/rng.hpp"

namespace hseal {

using Byte = std::uint8_t;
using ByteString = std::vector<Byte>;

/// First m entries of a column: one plaintext byte per entry.
using PlainBlock = std::vector<Byte>;
/// Trailing n-m random entries of a column. Doubles as the authentication
/// token in authenticated mode.
using GarbageString = std::vector<Byte>;
/// Full length-n column: plaintext block followed by garbage.
using PaddedColumn = std::vector<Byte>;

/// Split a message into blocks of m bytes. The final block always carries
/// padding: a 0x01 marker byte then 0x00 fill, so a message that fills its
/// last block exactly gains one extra pad-only block. Throws
/// std::invalid_argument for an empty message or m == 0.
std::vector<PlainBlock> encode_blocks(std::span<const Byte> message,
                                      std::size_t m);

/// Inverse of encode_blocks. Throws PadError when the tail is not
/// 0x01-then-0x00s (including an empty block list).
ByteString decode_blocks(const std::vector<PlainBlock>& blocks);

/// length uniformly random bytes from rng. length must be positive.
GarbageString make_garbage(std::size_t length, SeededRng& rng);

/// Concatenate block and garbage into a column of exactly `order` entries.
/// Throws std::invalid_argument when the lengths do not sum to order.
PaddedColumn pad_column(const PlainBlock& block, const GarbageString& garbage,
                        std::size_t order);

/// Split a column back into its first m entries and the garbage tail.
/// Requires 1 <= m < column.size().
std::pair<PlainBlock, GarbageString> strip_column(const PaddedColumn& column,
                                                  std::size_t m);

}  // namespace hseal
