#pragma once

#include <cstdint>

namespace chainwatch {

// xoshiro256++ seeded through splitmix64. All draws are built from integer
// arithmetic only, so identical seeds give identical streams on every
// platform. Child streams are derived by mixing (seed, stream_id) through
// splitmix64, which keeps them independent of the order they are spawned in.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    // Derive an independent stream; child(seed, id) is a pure function.
    Rng child(std::uint64_t stream_id) const;

    std::uint64_t next_u64();

    // Uniform on [0, 1): (next_u64() >> 11) * 2^-53.
    double uniform();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Uniform integer in [0, n); n > 0. Rejection-free modulo is avoided by
    // multiply-shift so the result is unbiased for n << 2^64.
    std::uint64_t uniform_index(std::uint64_t n);

    // Standard normal via Box-Muller (two uniforms per call, no cached spare).
    double normal();

    double normal(double mean, double stddev);

    // Exponential with the given rate (inversion method).
    double exponential(double rate);

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
};

// splitmix64 single step; exposed because per-tree / per-stream seed mixing
// uses it directly.
std::uint64_t splitmix64(std::uint64_t& state);

// One-shot mix of two words into a seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace chainwatch
