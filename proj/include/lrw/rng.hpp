#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lrw {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Pure function of (counter, key).
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// SplitMix64 finalizer; used to derive independent stream identifiers.
std::uint64_t splitmix64(std::uint64_t x);

/// Combine a seed with a stream tag into a child seed. Deterministic, and
/// built so that (seed, a) and (seed, b) give unrelated streams for a != b.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag);

/// Counter-based generator: a 64-bit key (seed) and a 64-bit stream id select
/// an independent sequence; the position within the sequence is an explicit
/// counter, so draws do not depend on evaluation order across streams.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform();

    /// Standard normal via Box-Muller (pairs cached).
    double normal();

    /// Uniform integer in [0, n), unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t counter_ = 0;   // block index
    std::uint64_t stream_ = 0;    // occupies the high counter words
    std::array<std::uint32_t, 4> block_{};
    int block_pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace lrw
