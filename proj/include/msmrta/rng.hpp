#pragma once

#include <cstdint>
#include <random>

namespace msmrta {

// splitmix64 finalizer, used to derive independent stream seeds from one
// scenario seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix_seed(seed ^ mix_seed(stream));
}

// Thin wrapper around mt19937_64. std::uniform_int_distribution and friends
// are implementation-defined, so every draw goes through these helpers to
// keep frozen regression values stable across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). Modulo bias is < n / 2^64, irrelevant at our sizes.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo) + 1));
    }

    // Uniform in [0, 1) with 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace msmrta
