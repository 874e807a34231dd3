#include "hseal/codec.hpp"

#include <stdexcept>
#include <string>

#include "hseal/errors.hpp"

namespace hseal {

std::vector<PlainBlock> encode_blocks(std::span<const Byte> message,
                                      std::size_t m) {
    if (m == 0) {
        throw std::invalid_argument("encode_blocks: block size must be positive");
    }
    if (message.empty()) {
        throw std::invalid_argument("encode_blocks: empty message");
    }

    // 0x01 marker then 0x00 fill up to the next block boundary. A message
    // that exactly fills its last block gains a pad-only block, which keeps
    // the strip rule unambiguous.
    ByteString padded(message.begin(), message.end());
    padded.push_back(0x01);
    while (padded.size() % m != 0) {
        padded.push_back(0x00);
    }

    std::vector<PlainBlock> blocks;
    blocks.reserve(padded.size() / m);
    for (std::size_t off = 0; off < padded.size(); off += m) {
        blocks.emplace_back(padded.begin() + off, padded.begin() + off + m);
    }
    return blocks;
}

ByteString decode_blocks(const std::vector<PlainBlock>& blocks) {
    if (blocks.empty()) {
        throw PadError("decode_blocks: no blocks");
    }
    ByteString bytes;
    for (const PlainBlock& block : blocks) {
        bytes.insert(bytes.end(), block.begin(), block.end());
    }

    std::size_t end = bytes.size();
    while (end > 0 && bytes[end - 1] == 0x00) {
        --end;
    }
    if (end == 0 || bytes[end - 1] != 0x01) {
        throw PadError("decode_blocks: missing 0x01 padding marker");
    }
    bytes.resize(end - 1);
    return bytes;
}

GarbageString make_garbage(std::size_t length, SeededRng& rng) {
    if (length == 0) {
        throw std::invalid_argument("make_garbage: length must be positive");
    }
    GarbageString g(length);
    for (Byte& b : g) {
        b = rng.byte();
    }
    return g;
}

PaddedColumn pad_column(const PlainBlock& block, const GarbageString& garbage,
                        std::size_t order) {
    if (block.size() + garbage.size() != order) {
        throw std::invalid_argument(
            "pad_column: block (" + std::to_string(block.size()) +
            ") plus garbage (" + std::to_string(garbage.size()) +
            ") does not fill a column of " + std::to_string(order));
    }
    PaddedColumn column;
    column.reserve(order);
    column.insert(column.end(), block.begin(), block.end());
    column.insert(column.end(), garbage.begin(), garbage.end());
    return column;
}

std::pair<PlainBlock, GarbageString> strip_column(const PaddedColumn& column,
                                                  std::size_t m) {
    if (m == 0 || m >= column.size()) {
        throw std::invalid_argument("strip_column: block size " +
                                    std::to_string(m) +
                                    " out of range for column of " +
                                    std::to_string(column.size()));
    }
    PlainBlock block(column.begin(), column.begin() + m);
    GarbageString garbage(column.begin() + m, column.end());
    return {std::move(block), std::move(garbage)};
}

}  // namespace hseal
