#pragma once

#include <array>
#include <cstdint>

namespace tailcheck {

// Philox 4x32-10 keyed counter permutation (Salmon et al., SC'11).
// A block is a pure function of (counter, key), which is what makes
// per-row / per-replica streams order-independent.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// SplitMix64 finalizer; used to derive stream seeds from user seeds.
std::uint64_t splitmix64(std::uint64_t x);

// One logical stream of randomness, identified by (seed, stream).
// Every value drawn is a pure function of (seed, stream, draw position),
// so distinct streams can be generated in any order, on any thread, and
// reproduce bit-exactly.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    // Uniform on (0, 1] with 53-bit resolution. The open lower end keeps
    // log() finite in the samplers below.
    double uniform();

    // Standard normal, Box-Muller. Two deviates per pair of uniforms.
    double gaussian();

    // Gamma(shape) with unit scale, Marsaglia-Tsang squeeze for
    // shape >= 1, boosting for shape < 1. Consumes a variable number of
    // uniforms; that is fine because the stream is private to one row.
    double gamma(double shape);

private:
    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int word_ = 4;
    double spare_gaussian_ = 0.0;
    bool have_spare_ = false;

    std::uint32_t next_u32();
};

}  // namespace tailcheck
