#include <algorithm>
#include <atomic>
#include <ranges>
#include <thread>

#include "apdiv/classify.hpp"
#include "apdiv/sieve.hpp"

namespace apdiv {

namespace {

constexpr u64 kVerifyBudget = 1'000'000'000;

struct Counters {
    u64 mismatches = 0;
    u64 long_ap = 0;
    u64 tau_violations = 0;
};

// Checks one n given its factorization; divs is a reusable scratch buffer.
void check_one(u64 n, std::span<const PrimePower> factors, std::vector<u64>& divs,
               Counters& c) {
    divs.clear();
    divs.push_back(1);
    u64 t = 1;
    bool square = true;
    for (const auto& pp : factors) {
        t *= pp.exponent + 1;
        if (pp.exponent % 2 != 0) square = false;
        std::size_t block = divs.size();
        u64 pe = 1;
        for (u32 i = 0; i < pp.exponent; ++i) {
            pe *= pp.prime;
            for (std::size_t j = 0; j < block; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());

    // Large divisors form the suffix starting at the first d with d*d >= n.
    std::size_t first = 0;
    while (first < divs.size() && u128{divs[first]} * divs[first] < n) ++first;
    std::span<const u64> inclusive(divs.data() + first, divs.size() - first);
    std::span<const u64> exclusive = inclusive.first(inclusive.size() - 1);

    bool ap_excl = is_arithmetic_progression(exclusive).is_ap;
    bool ap_incl = is_arithmetic_progression(inclusive).is_ap;

    Form excl_variant = exclusive_form(factors);
    Form incl_variant = inclusive_form(factors);
    if ((excl_variant != Form::NotAP) != ap_excl) ++c.mismatches;
    if ((incl_variant != Form::NotAP) != ap_incl) ++c.mismatches;
    if (ap_excl && exclusive.size() >= 4) ++c.long_ap;

    // predicted-set fidelity: the form's symbolic set must match the oracle
    if (excl_variant != Form::NotAP) {
        auto predicted = predicted_set(form_label(factors, Mode::Exclusive), Mode::Exclusive);
        if (!std::ranges::equal(predicted, exclusive)) ++c.mismatches;
    }
    if (incl_variant != Form::NotAP) {
        auto predicted = predicted_set(form_label(factors, Mode::Inclusive), Mode::Inclusive);
        if (!std::ranges::equal(predicted, inclusive)) ++c.mismatches;
    }

    u64 k_excl = exclusive.size();
    u64 k_incl = inclusive.size();
    if (square) {
        if (t != 2 * k_excl + 1 || t != 2 * k_incl - 1) ++c.tau_violations;
    } else {
        if (t != 2 * k_excl + 2 || t != 2 * k_incl) ++c.tau_violations;
    }
}

}  // namespace

VerifyReport verify_scan(u64 limit, const ScanOptions& options) {
    if (limit > kVerifyBudget) {
        throw resource_error("verify_scan: limit exceeds budget of 10^9");
    }
    VerifyReport rep;
    rep.limit = limit;
    if (limit == 0) return rep;
    rep.checked = limit;

    const std::vector<u32> base = primes_up_to(static_cast<u32>(isqrt(limit)));
    const std::size_t seg = std::min<std::size_t>(options.segment_size, limit);
    const unsigned threads = std::max(1u, options.threads);
    const u64 chunks = (limit + seg - 1) / seg;

    std::atomic<u64> next{0};
    std::vector<Counters> partial(threads);
    auto worker = [&](unsigned id) {
        FactorWindow window(base, seg);
        std::vector<u64> divs;
        Counters& c = partial[id];
        for (u64 chunk; (chunk = next.fetch_add(1)) < chunks;) {
            u64 lo = 1 + chunk * seg;
            u64 hi = std::min(limit + 1, lo + seg);
            window.run(lo, hi, [&](u64 n, std::span<const PrimePower> factors) {
                check_one(n, factors, divs, c);
            });
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }
    for (const Counters& c : partial) {
        rep.classifier_mismatches += c.mismatches;
        rep.long_ap_sets += c.long_ap;
        rep.tau_identity_violations += c.tau_violations;
    }
    return rep;
}

}  // namespace apdiv
