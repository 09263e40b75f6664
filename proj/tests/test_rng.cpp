#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "riesz/rng.hpp"

using riesz::CounterRng;

TEST_SUITE("rng") {

TEST_CASE("same seed replays the same stream") {
    CounterRng a(12345, 7);
    CounterRng b(12345, 7);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("at() is a pure function of the index") {
    CounterRng rng(99, 3);
    const CounterRng frozen(99, 3);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t i = 0; i < 20; ++i) expected.push_back(frozen.at(i));
    // at() doesn't advance, next_u64 walks exactly the at() sequence
    CHECK(rng.at(5) == expected[5]);
    CHECK(rng.at(5) == expected[5]);
    for (std::uint64_t i = 0; i < 20; ++i) CHECK(rng.next_u64() == expected[i]);
}

TEST_CASE("different seeds and streams give different outputs") {
    CHECK(CounterRng(1).next_u64() != CounterRng(2).next_u64());
    CHECK(CounterRng(1, 0).next_u64() != CounterRng(1, 1).next_u64());
}

TEST_CASE("split derives a reproducible independent stream") {
    CounterRng base(42);
    CounterRng s1 = base.split(0);
    CounterRng s2 = base.split(1);
    CHECK(s1.next_u64() != s2.next_u64());
    CHECK(base.split(0).next_u64() == base.split(0).next_u64());
    // splitting does not disturb the parent
    CHECK(base.next_u64() == CounterRng(42).next_u64());
}

TEST_CASE("next_double lands in [0, 1)") {
    CounterRng rng(7);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("uniform lands in [lo, hi)") {
    CounterRng rng(8);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.uniform(-0.25, 0.25);
        CHECK(x >= -0.25);
        CHECK(x < 0.25);
    }
}

TEST_CASE("below stays under n and hits every small residue") {
    CounterRng rng(9);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 200; ++i) {
        std::uint64_t v = rng.below(5);
        CHECK(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
    for (int i = 0; i < 50; ++i) CHECK(rng.below(1) == 0);
}

TEST_CASE("generator name is stable for reports") {
    CHECK(std::string(CounterRng::name()) == "splitmix64-counter");
}

} // TEST_SUITE
