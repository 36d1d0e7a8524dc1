#pragma once

#include <cstdint>

namespace imax {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Full-period 64-bit mixer;
// every stream and derived seed in this project goes through it so results
// are reproducible across platforms and thread counts.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derived seed for sub-stream `index` of stream `tag` under `master`.
// Counter scheme: both coordinates are mixed in, so (tag, index) pairs give
// independent streams that can be consumed in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                    std::uint64_t index) {
    return mix64(mix64(master ^ mix64(tag)) ^ mix64(index));
}

// Sequential splitmix64 stream. u01() maps the 53 high bits of the next
// output to a double in [0, 1).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 significant bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in (0, 1]; used for interest values.
    double u01_open_closed() { return 1.0 - u01(); }

    // Uniform integer in [0, bound) by rejection-free multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace imax
