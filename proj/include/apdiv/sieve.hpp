#pragma once

#include <cstddef>

#include "apdiv/core.hpp"

namespace apdiv {

// Smallest-prime-factor values for a window of integers.
struct SieveSegment {
    u64 lo = 1;
    u64 hi = 1;               // exclusive
    std::vector<u64> spf;     // spf[i] is the least prime factor of lo + i
};

// Ascending primes <= limit.
std::vector<u32> primes_up_to(u32 limit);

// SPF table for [lo, hi), 1 <= lo <= hi. spf of a prime is the prime
// itself; spf of 1 is 1.
SieveSegment spf_segment(u64 lo, u64 hi);

// Streams the full factorization of every integer in a window, one
// segment's worth of state at a time. base_primes must cover
// isqrt(hi - 1); the factor span passed to the callback is valid only for
// the duration of the call.
class FactorWindow {
public:
    explicit FactorWindow(std::span<const u32> base_primes,
                          std::size_t segment_size = std::size_t{1} << 22);

    template <typename F>
    void run(u64 lo, u64 hi, F&& fn) {
        for (u64 seg_lo = lo; seg_lo < hi;) {
            u64 seg_hi = std::min(hi, seg_lo + capacity_);
            fill(seg_lo, seg_hi);
            emit(seg_lo, seg_hi, fn);
            seg_lo = seg_hi;
        }
    }

private:
    // Enough for every product of distinct primes below 2^63.
    static constexpr std::size_t kMaxTracked = 15;

    void fill(u64 lo, u64 hi);

    template <typename F>
    void emit(u64 lo, u64 hi, F& fn) {
        PrimePower local[kMaxTracked + 1];
        for (u64 n = lo; n < hi; ++n) {
            std::size_t i = n - lo;
            std::size_t count = counts_[i];
            for (std::size_t k = 0; k < count; ++k) {
                local[k] = {primes_[i * kMaxTracked + k], exps_[i * kMaxTracked + k]};
            }
            if (rem_[i] > 1) local[count++] = {rem_[i], 1};
            fn(n, std::span<const PrimePower>(local, count));
        }
    }

    std::span<const u32> base_;
    std::size_t capacity_;
    std::vector<u64> rem_;
    std::vector<u32> primes_;
    std::vector<std::uint8_t> exps_;
    std::vector<std::uint8_t> counts_;
};

}  // namespace apdiv
