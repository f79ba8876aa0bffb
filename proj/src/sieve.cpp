#include "apdiv/sieve.hpp"

#include <algorithm>

namespace apdiv {

std::vector<u32> primes_up_to(u32 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<bool> composite(std::size_t{limit} + 1, false);
    for (u32 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (u64 m = u64{p} * p; m <= limit; m += p) composite[m] = true;
    }
    return out;
}

SieveSegment spf_segment(u64 lo, u64 hi) {
    if (lo < 1 || lo > hi) throw std::out_of_range("spf_segment: need 1 <= lo <= hi");
    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.spf.assign(hi - lo, 0);
    if (hi > lo) {
        u64 root = isqrt(hi - 1);
        for (u32 p : primes_up_to(static_cast<u32>(root))) {
            u64 start = std::max<u64>(u64{p}, (lo + p - 1) / p * p);
            for (u64 m = start; m < hi; m += p) {
                if (seg.spf[m - lo] == 0) seg.spf[m - lo] = p;
            }
        }
    }
    for (u64 i = 0; i < seg.spf.size(); ++i) {
        if (seg.spf[i] == 0) seg.spf[i] = lo + i;  // prime, or 1
    }
    return seg;
}

FactorWindow::FactorWindow(std::span<const u32> base_primes, std::size_t segment_size)
    : base_(base_primes), capacity_(std::max<std::size_t>(segment_size, 1)) {
    rem_.resize(capacity_);
    primes_.resize(capacity_ * kMaxTracked);
    exps_.resize(capacity_ * kMaxTracked);
    counts_.resize(capacity_);
}

void FactorWindow::fill(u64 lo, u64 hi) {
    std::size_t len = hi - lo;
    for (std::size_t i = 0; i < len; ++i) rem_[i] = lo + i;
    std::fill_n(counts_.begin(), len, 0);
    for (u32 p : base_) {
        if (u64{p} * p >= hi) break;
        u64 start = std::max<u64>(u64{p}, (lo + p - 1) / p * p);
        for (u64 m = start; m < hi; m += p) {
            std::size_t i = m - lo;
            u64& r = rem_[i];
            std::uint8_t e = 0;
            do {
                r /= p;
                ++e;
            } while (r % p == 0);
            std::size_t c = counts_[i]++;
            primes_[i * kMaxTracked + c] = p;
            exps_[i * kMaxTracked + c] = e;
        }
    }
}

}  // namespace apdiv
