#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace affuse {

// splitmix64 finalizer; mixes a seed into a well-distributed 64-bit value.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from a base seed and a tag.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

// FNV-1a over a string, for deriving per-record seeds from identifiers.
std::uint64_t hash_string(const std::string& s);

// Deterministic random source. std::mt19937_64 produces the same stream on
// every platform; the std <random> distributions do not, so the draws below
// are implemented by hand on top of the raw engine output.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n);

    // Inclusive integer range.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Box-Muller; the spare value is cached, keeping one draw per call on average.
    double normal(double mean = 0.0, double stddev = 1.0);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        // Fisher-Yates with explicit bounded draws.
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace affuse
