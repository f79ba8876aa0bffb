#pragma once

#include <cstddef>
#include <map>

#include "apdiv/classify.hpp"
#include "apdiv/core.hpp"

namespace apdiv {

struct CensusOptions {
    std::size_t segment_size = std::size_t{1} << 22;
    unsigned threads = 1;
};

// Per-family breakdown of how many n <= x have their large divisors in
// arithmetic progression, plus the x loglog x / log x comparison. The
// landau fields are NaN for x < 3.
struct CensusReport {
    u64 x = 1;
    Mode mode = Mode::Inclusive;
    std::map<Form, u64> family_counts;
    u64 total = 0;
    double landau_term = 0.0;
    double ratio = 0.0;
};

// Exact count of primes <= x, segmented sieve.
u64 prime_pi(u64 x);

// pi at each point, answered in input order from a single sieve sweep.
std::vector<u64> prime_pi_batch(const std::vector<u64>& points);

// floor(x^(1/k)) in exact integer arithmetic.
u64 integer_kth_root(u64 x, unsigned k);

// n = p*q <= x with primes p < q.
u64 count_squarefree_semiprimes(u64 x);

// n = p^2*q <= x with primes p < q.
u64 count_p_square_q(u64 x);

// n = p*q^2 <= x with primes p < q.
u64 count_p_q_square(u64 x);

// n = p*q*r <= x with primes p < q < r, pq < r, and 2p = q + 1.
u64 count_constrained_pqr(u64 x);

// n = p^3*q <= x with primes p > q and 2q = p + 1.
u64 count_constrained_pcubeq(u64 x);

// x loglog x / log x; NaN for x < 3.
double landau_term(u64 x);

// Closed-form censuses built from pi-queries and the family enumerations.
CensusReport f_inclusive(u64 x);
CensusReport g_exclusive(u64 x);

// Independent path: sieve-factor every n <= x and classify it directly.
std::map<Form, u64> brute_family_counts(u64 x, Mode mode, const CensusOptions& options = {});
u64 brute_census(u64 x, Mode mode, const CensusOptions& options = {});

// One census row per bound; bounds must be increasing and >= 3.
std::vector<CensusReport> landau_ratio_table(std::span<const u64> xs, Mode mode);

}  // namespace apdiv
