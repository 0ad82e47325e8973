#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace specnet {

/// Name of the pinned generator, embedded in experiment outputs.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64 seeded by splitmix64(master_seed, run_index)";

/// One splitmix64 output step.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Per-run seed; a pure function of (master_seed, run_index).
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(run_index + 0x632BE59BD9B4E019ull));
}

/// Seeded random source with distribution mappings written out by hand, so
/// that a seed yields the same stream with every standard library
/// (std::uniform_*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on (0, 1], 53-bit resolution.
    double uniform_open_closed() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be > 0. Lemire's
    /// multiply-and-reject, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        __extension__ using u128 = unsigned __int128;
        u128 product = static_cast<u128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<u128>(next()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace specnet
