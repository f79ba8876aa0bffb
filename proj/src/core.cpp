#include "apdiv/core.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace apdiv {

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    // Newton iteration with a seed >= sqrt(n); descends monotonically.
    u64 x = u64{1} << ((std::bit_width(n) + 1) / 2);
    while (true) {
        u64 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Primes below 1000, for the trial-division phase of factorize.
const std::vector<u32>& small_primes() {
    static const std::vector<u32> primes = [] {
        std::vector<u32> out;
        std::vector<bool> composite(1000, false);
        for (u32 p = 2; p < 1000; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (u32 m = p * p; m < 1000; m += p) composite[m] = true;
        }
        return out;
    }();
    return primes;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's cycle variant of Pollard rho. n must be odd, composite, and
// coprime to the small primes already divided out.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 saved = 0, q = 1;
        const u64 step = 128;
        for (u64 r = 1; d == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += step) {
                saved = y;
                u64 lim = std::min(step, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
            }
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            y = saved;
            while (d == 1) {
                y = (mulmod(y, y, n) + c) % n;
                d = gcd_u64(x > y ? x - y : y - x, n);
            }
        }
        if (d != n) return d;
    }
}

void split(u64 n, std::map<u64, u32>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n < 1 || n > kMaxInput) {
        throw std::out_of_range("factorize: n must be in [1, 2^63)");
    }
    Factorization f;
    f.n = n;
    u64 rem = n;
    for (u32 p : small_primes()) {
        if (u64{p} * p > rem) break;
        if (rem % p == 0) {
            u32 e = 0;
            do {
                rem /= p;
                ++e;
            } while (rem % p == 0);
            f.factors.push_back({p, e});
        }
    }
    if (rem > 1) {
        if (is_prime(rem)) {
            f.factors.push_back({rem, 1});
        } else {
            std::map<u64, u32> rest;
            split(rem, rest);
            for (auto [p, e] : rest) f.factors.push_back({p, e});
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

u64 tau(const Factorization& f) {
    u64 t = 1;
    for (const auto& pp : f.factors) t *= pp.exponent + 1;
    return t;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    divs.reserve(tau(f));
    for (const auto& pp : f.factors) {
        std::size_t block = divs.size();
        u64 pe = 1;
        for (u32 i = 0; i < pp.exponent; ++i) {
            pe *= pp.prime;
            for (std::size_t j = 0; j < block; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

LargeDivisorSet large_divisors(u64 n, Mode mode) {
    if (n < 1 || n > kMaxInput) {
        throw std::out_of_range("large_divisors: n must be in [1, 2^63)");
    }
    LargeDivisorSet set;
    set.n = n;
    set.mode = mode;
    for (u64 d : divisors(factorize(n))) {
        if (u128{d} * d < n) continue;
        if (mode == Mode::Exclusive && d == n) continue;
        set.divisors.push_back(d);
    }
    ApVerdict ap = is_arithmetic_progression(set.divisors);
    set.is_ap = ap.is_ap;
    set.common_difference = ap.common_difference;
    return set;
}

ApVerdict is_arithmetic_progression(std::span<const u64> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) {
            throw std::invalid_argument("is_arithmetic_progression: input not strictly increasing");
        }
    }
    if (values.size() <= 1) return {true, std::nullopt};
    u64 diff = values[1] - values[0];
    for (std::size_t i = 2; i < values.size(); ++i) {
        if (values[i] - values[i - 1] != diff) return {false, std::nullopt};
    }
    return {true, diff};
}

}  // namespace apdiv
