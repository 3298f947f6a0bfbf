#pragma once

#include <cstdint>
#include <random>

namespace betachain {

// splitmix64 finalizer; used to derive independent sub-stream seeds so that
// e.g. changing the right-proportion law never perturbs the direction stream.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 1));
}

/// One reproducible uniform stream. Doubles are produced from the top 53 bits
/// so results do not depend on the platform's distribution implementation.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// The three named sub-streams driving one chain.
struct ChainRng {
    RngStream direction;
    RngStream left;
    RngStream right;

    explicit ChainRng(std::uint64_t seed)
        : direction(split_seed(seed, 0)),
          left(split_seed(seed, 1)),
          right(split_seed(seed, 2)) {}
};

} // namespace betachain
