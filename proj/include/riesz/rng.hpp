#ifndef RIESZ_RNG_HPP
#define RIESZ_RNG_HPP

#include <cstdint>

namespace riesz {

// Counter-based generator: output i is a pure function of (seed, i), so streams
// can be split and replayed without carrying mutable state around. The mixer is
// the splitmix64 finalizer, applied to seed + (i+1)*golden. Reports that record
// a seed name this generator "splitmix64-counter".
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(mix(seed ^ mix(stream + 0x5555555555555555ull))), counter_(0) {}

    static constexpr const char* name() { return "splitmix64-counter"; }

    std::uint64_t next_u64() { return at(counter_++); }

    // value of the stream at a fixed index, counter untouched
    std::uint64_t at(std::uint64_t index) const {
        return mix(seed_ + (index + 1) * 0x9e3779b97f4a7c15ull);
    }

    // uniform in [0, 1), 53-bit mantissa
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // uniform integer in [0, n), n >= 1; 128-bit multiply avoids modulo bias
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // derived independent stream, e.g. one per trial index
    CounterRng split(std::uint64_t stream) const {
        return CounterRng(seed_, stream + 1);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace riesz

#endif
