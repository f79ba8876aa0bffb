#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace apdiv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Inputs are natural numbers in [1, 2^63).
inline constexpr u64 kMaxInput = (u64{1} << 63) - 1;

// Raised when a computation would exceed a stated memory/time budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails (classifier vs oracle).
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct PrimePower {
    u64 prime;
    u32 exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition, primes strictly increasing.
// factorize(1) yields an empty factor list.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;
};

enum class Mode { Exclusive, Inclusive };

// Divisors d of n with d*d >= n; Exclusive additionally requires d < n.
struct LargeDivisorSet {
    u64 n = 1;
    Mode mode = Mode::Exclusive;
    std::vector<u64> divisors;
    bool is_ap = true;
    std::optional<u64> common_difference;
};

struct ApVerdict {
    bool is_ap = true;
    std::optional<u64> common_difference;
};

// floor(sqrt(n)), pure integer arithmetic.
u64 isqrt(u64 n);

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime(u64 n);

// Trial division by small primes, then Miller-Rabin + Brent's rho with a
// fixed seed; deterministic for every n in [1, 2^63).
Factorization factorize(u64 n);

// Number of divisors, prod(e_i + 1).
u64 tau(const Factorization& f);

// All divisors of f.n in increasing order; length equals tau(f).
std::vector<u64> divisors(const Factorization& f);

// Membership decided by the widened integer test d*d >= n.
LargeDivisorSet large_divisors(u64 n, Mode mode);

// Lists of length 0, 1, 2 are APs; the difference is reported only for
// length >= 2. Throws std::invalid_argument unless strictly increasing.
ApVerdict is_arithmetic_progression(std::span<const u64> values);

}  // namespace apdiv
