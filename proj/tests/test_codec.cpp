#include "doctest.h"

#include <set>
#include <stdexcept>

#include "hseal/codec.hpp"
#include "hseal/errors.hpp"
#include "hseal/rng.hpp"

using hseal::Byte;
using hseal::ByteString;
using hseal::GarbageString;
using hseal::PlainBlock;
using hseal::SeededRng;

TEST_CASE("encode_blocks: padding rule is forced") {
    CHECK(hseal::encode_blocks(ByteString{65, 66}, 2) ==
          std::vector<PlainBlock>{{65, 66}, {1, 0}});
    CHECK(hseal::encode_blocks(ByteString{65}, 3) ==
          std::vector<PlainBlock>{{65, 1, 0}});
    CHECK(hseal::encode_blocks(ByteString{1, 2, 3, 4, 5}, 2) ==
          std::vector<PlainBlock>{{1, 2}, {3, 4}, {5, 1}});
}

TEST_CASE("encode_blocks: rejects empty input and zero block size") {
    CHECK_THROWS_AS(hseal::encode_blocks(ByteString{}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(hseal::encode_blocks(ByteString{1}, 0),
                    std::invalid_argument);
}

TEST_CASE("decode_blocks: inverts the examples") {
    CHECK(hseal::decode_blocks({{65, 1, 0}}) == ByteString{65});
    CHECK(hseal::decode_blocks({{1, 2}, {3, 1}}) == ByteString{1, 2, 3});
}

TEST_CASE("decode_blocks: malformed padding") {
    CHECK_THROWS_AS(hseal::decode_blocks({{0, 0}}), hseal::PadError);
    CHECK_THROWS_AS(hseal::decode_blocks({}), hseal::PadError);
}

TEST_CASE("encode/decode round-trips arbitrary messages") {
    SeededRng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t len = rng.uniform(1, 80);
        std::size_t m = rng.uniform(1, 16);
        ByteString msg(len);
        for (Byte& b : msg) {
            b = rng.byte();
        }
        auto blocks = hseal::encode_blocks(msg, m);
        for (const PlainBlock& block : blocks) {
            CHECK(block.size() == m);
        }
        CHECK(hseal::decode_blocks(blocks) == msg);
    }
}

TEST_CASE("make_garbage: deterministic under a seed, full byte range") {
    SeededRng a(42), b(42);
    CHECK(hseal::make_garbage(16, a) == hseal::make_garbage(16, b));

    SeededRng rng(1);
    GarbageString one = hseal::make_garbage(1, rng);
    CHECK(one.size() == 1);

    CHECK_THROWS_AS(hseal::make_garbage(0, rng), std::invalid_argument);
}

TEST_CASE("make_garbage: different seeds give different strings") {
    int collisions = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        SeededRng a(seed), b(seed + 5000);
        if (hseal::make_garbage(5, a) == hseal::make_garbage(5, b)) {
            ++collisions;
        }
    }
    CHECK(collisions == 0);
}

TEST_CASE("pad/strip round trip") {
    CHECK(hseal::pad_column({1, 2}, {5}, 3) == hseal::PaddedColumn{1, 2, 5});
    CHECK(hseal::pad_column({7}, {8, 9}, 3) == hseal::PaddedColumn{7, 8, 9});
    CHECK_THROWS_AS(hseal::pad_column({1, 2}, {5}, 4), std::invalid_argument);

    auto [block, garbage] = hseal::strip_column({1, 2, 5}, 2);
    CHECK(block == PlainBlock{1, 2});
    CHECK(garbage == GarbageString{5});

    SeededRng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = rng.uniform(2, 24);
        std::size_t m = rng.uniform(1, n - 1);
        PlainBlock b(m);
        for (Byte& x : b) {
            x = rng.byte();
        }
        GarbageString g = hseal::make_garbage(n - m, rng);
        auto [b2, g2] = hseal::strip_column(hseal::pad_column(b, g, n), m);
        CHECK(b2 == b);
        CHECK(g2 == g);
    }
}
