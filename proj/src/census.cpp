#include "apdiv/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "apdiv/sieve.hpp"

namespace apdiv {

namespace {

constexpr u64 kBruteBudget = 10'000'000'000ull;

constexpr Form kInclusiveFamilies[] = {
    Form::One, Form::Prime, Form::PrimeSquare, Form::PrimeCube, Form::Semiprime,
};
constexpr Form kExclusiveFamilies[] = {
    Form::One,          Form::Prime,    Form::PrimeSquare,
    Form::PrimeCube,    Form::Semiprime, Form::PrimeFourth,
    Form::PrimeFifth,   Form::PSquareQ, Form::PQSquare,
    Form::PQRConstrained, Form::PCubeQConstrained,
};

std::span<const Form> families_for(Mode mode) {
    return mode == Mode::Inclusive ? std::span<const Form>(kInclusiveFamilies)
                                   : std::span<const Form>(kExclusiveFamilies);
}

void finish_report(CensusReport& report) {
    report.total = 0;
    for (const auto& [form, count] : report.family_counts) report.total += count;
    report.landau_term = landau_term(report.x);
    report.ratio = report.x < 3
                       ? std::numeric_limits<double>::quiet_NaN()
                       : static_cast<double>(report.total) / report.landau_term;
}

}  // namespace

std::vector<u64> prime_pi_batch(const std::vector<u64>& points) {
    std::vector<u64> result(points.size(), 0);
    if (points.empty()) return result;
    u64 mx = *std::max_element(points.begin(), points.end());
    if (mx < 2) return result;

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    const std::vector<u32> base = primes_up_to(static_cast<u32>(isqrt(mx)));
    const u64 seg_size = u64{1} << 22;
    std::vector<char> composite;
    u64 count = 0;
    std::size_t qi = 0;
    while (qi < order.size() && points[order[qi]] < 2) ++qi;

    for (u64 lo = 2; lo <= mx && qi < order.size(); lo += seg_size) {
        u64 hi = std::min(mx, lo + seg_size - 1);
        composite.assign(hi - lo + 1, 0);
        for (u32 p : base) {
            u64 pp = u64{p} * p;
            if (pp > hi) break;
            u64 start = std::max(pp, (lo + p - 1) / p * p);
            for (u64 m = start; m <= hi; m += p) composite[m - lo] = 1;
        }
        for (u64 v = lo; v <= hi; ++v) {
            if (!composite[v - lo]) ++count;
            while (qi < order.size() && points[order[qi]] == v) result[order[qi++]] = count;
        }
    }
    return result;
}

u64 prime_pi(u64 x) { return prime_pi_batch({x})[0]; }

u64 integer_kth_root(u64 x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
    if (x == 0) return 0;
    if (k == 1) return x;
    if (k >= 64) return 1;
    auto pow_leq = [x](u64 r, unsigned e) {
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            acc *= r;
            if (acc > x) return false;
        }
        return true;
    };
    u64 lo = 1, hi = (u64{1} << (64 / k)) + 1;
    while (lo < hi) {
        u64 mid = lo + (hi - lo + 1) / 2;
        if (pow_leq(mid, k)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

u64 count_squarefree_semiprimes(u64 x) {
    if (x < 6) return 0;
    std::vector<u32> ps = primes_up_to(static_cast<u32>(isqrt(x)));
    std::vector<u64> points;
    points.reserve(ps.size());
    for (u32 p : ps) points.push_back(x / p);
    std::vector<u64> pis = prime_pi_batch(points);
    u64 total = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) total += pis[i] - (i + 1);
    return total;
}

u64 count_p_square_q(u64 x) {
    // p^2 q <= x, p < q: for each p count primes in (p, x/p^2].
    std::vector<u32> ps = primes_up_to(static_cast<u32>(integer_kth_root(x, 3)));
    std::vector<u64> points;
    points.reserve(ps.size());
    for (u32 p : ps) {
        if (u128{p} * p * p >= x) break;  // need q > p
        points.push_back(x / (u64{p} * p));
    }
    std::vector<u64> pis = prime_pi_batch(points);
    u64 total = 0;
    for (std::size_t i = 0; i < points.size(); ++i) total += pis[i] - (i + 1);
    return total;
}

u64 count_p_q_square(u64 x) {
    // p q^2 <= x, p < q: for each q count primes <= min(q - 1, x / q^2).
    std::vector<u64> points;
    for (u32 q : primes_up_to(static_cast<u32>(isqrt(x / 2 + 1)))) {
        u64 qq = u64{q} * q;
        if (2 * qq > x) break;
        points.push_back(std::min<u64>(q - 1, x / qq));
    }
    std::vector<u64> pis = prime_pi_batch(points);
    return std::accumulate(pis.begin(), pis.end(), u64{0});
}

u64 count_constrained_pqr(u64 x) {
    // n = pqr, p < q < r, pq < r, 2p = q + 1: iterate (p, q = 2p - 1) and
    // count primes r in (pq, x / pq].
    std::vector<u64> hi_points, lo_points;
    for (u32 p : primes_up_to(static_cast<u32>(isqrt(isqrt(x)) + 2))) {
        u64 q = 2 * u64{p} - 1;
        u64 pq = p * q;
        if (u128{pq} * pq >= x) break;
        if (!is_prime(q)) continue;
        hi_points.push_back(x / pq);
        lo_points.push_back(pq);
    }
    std::vector<u64> his = prime_pi_batch(hi_points);
    std::vector<u64> los = prime_pi_batch(lo_points);
    u64 total = 0;
    for (std::size_t i = 0; i < his.size(); ++i) total += his[i] - los[i];
    return total;
}

u64 count_constrained_pcubeq(u64 x) {
    // n = p^3 q, p > q, 2q = p + 1: each admissible pair contributes one n.
    u64 total = 0;
    for (u32 p : primes_up_to(static_cast<u32>(integer_kth_root(x / 2 + 1, 3) + 1))) {
        u128 cube = u128{p} * p * p;
        if (cube * 2 > x) break;
        if (p % 2 == 0) continue;
        u64 q = (u64{p} + 1) / 2;
        if (q >= p || !is_prime(q)) continue;
        if (cube * q <= x) ++total;
    }
    return total;
}

double landau_term(u64 x) {
    if (x < 3) return std::numeric_limits<double>::quiet_NaN();
    double xd = static_cast<double>(x);
    return xd * std::log(std::log(xd)) / std::log(xd);
}

CensusReport f_inclusive(u64 x) {
    if (x < 1) throw std::out_of_range("f_inclusive: x must be >= 1");
    CensusReport report;
    report.x = x;
    report.mode = Mode::Inclusive;
    std::vector<u64> pis = prime_pi_batch({x, isqrt(x), integer_kth_root(x, 3)});
    report.family_counts[Form::One] = 1;
    report.family_counts[Form::Prime] = pis[0];
    report.family_counts[Form::PrimeSquare] = pis[1];
    report.family_counts[Form::PrimeCube] = pis[2];
    report.family_counts[Form::Semiprime] = count_squarefree_semiprimes(x);
    finish_report(report);
    return report;
}

CensusReport g_exclusive(u64 x) {
    if (x < 1) throw std::out_of_range("g_exclusive: x must be >= 1");
    CensusReport report;
    report.x = x;
    report.mode = Mode::Exclusive;
    std::vector<u64> pis = prime_pi_batch({x, isqrt(x), integer_kth_root(x, 3),
                                           integer_kth_root(x, 4), integer_kth_root(x, 5)});
    report.family_counts[Form::One] = 1;
    report.family_counts[Form::Prime] = pis[0];
    report.family_counts[Form::PrimeSquare] = pis[1];
    report.family_counts[Form::PrimeCube] = pis[2];
    report.family_counts[Form::PrimeFourth] = pis[3];
    report.family_counts[Form::PrimeFifth] = pis[4];
    report.family_counts[Form::Semiprime] = count_squarefree_semiprimes(x);
    report.family_counts[Form::PSquareQ] = count_p_square_q(x);
    report.family_counts[Form::PQSquare] = count_p_q_square(x);
    report.family_counts[Form::PQRConstrained] = count_constrained_pqr(x);
    report.family_counts[Form::PCubeQConstrained] = count_constrained_pcubeq(x);
    finish_report(report);
    return report;
}

std::map<Form, u64> brute_family_counts(u64 x, Mode mode, const CensusOptions& options) {
    if (x < 1) throw std::out_of_range("brute_census: x must be >= 1");
    if (x > kBruteBudget) {
        throw resource_error("brute_census: x exceeds budget of 10^10");
    }
    const std::vector<u32> base = primes_up_to(static_cast<u32>(isqrt(x)));
    const std::size_t seg = static_cast<std::size_t>(
        std::min<u64>(std::max<std::size_t>(options.segment_size, 1), x));
    const unsigned threads = std::max(1u, options.threads);
    const u64 chunks = (x + seg - 1) / seg;

    using FormCounts = std::array<u64, 12>;
    std::atomic<u64> next{0};
    std::vector<FormCounts> partial(threads, FormCounts{});
    auto worker = [&](unsigned id) {
        FactorWindow window(base, seg);
        FormCounts& counts = partial[id];
        for (u64 chunk; (chunk = next.fetch_add(1)) < chunks;) {
            u64 lo = 1 + chunk * seg;
            u64 hi = std::min(x + 1, lo + seg);
            window.run(lo, hi, [&](u64, std::span<const PrimePower> factors) {
                Form f = mode == Mode::Inclusive ? inclusive_form(factors)
                                                 : exclusive_form(factors);
                ++counts[static_cast<std::size_t>(f)];
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

    std::map<Form, u64> result;
    for (Form f : families_for(mode)) {
        u64 sum = 0;
        for (const FormCounts& counts : partial) sum += counts[static_cast<std::size_t>(f)];
        result[f] = sum;
    }
    return result;
}

u64 brute_census(u64 x, Mode mode, const CensusOptions& options) {
    u64 total = 0;
    for (const auto& [form, count] : brute_family_counts(x, mode, options)) total += count;
    return total;
}

std::vector<CensusReport> landau_ratio_table(std::span<const u64> xs, Mode mode) {
    if (xs.empty()) throw std::invalid_argument("landau_ratio_table: empty bound list");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 3) {
            throw std::domain_error("landau_ratio_table: bounds must be >= 3 (loglog undefined)");
        }
        if (i > 0 && xs[i] <= xs[i - 1]) {
            throw std::invalid_argument("landau_ratio_table: bounds must be increasing");
        }
    }
    std::vector<CensusReport> rows;
    rows.reserve(xs.size());
    for (u64 x : xs) rows.push_back(mode == Mode::Inclusive ? f_inclusive(x) : g_exclusive(x));
    return rows;
}

}  // namespace apdiv
