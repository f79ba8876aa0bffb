#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apdiv/classify.hpp"

using namespace apdiv;

TEST_CASE("form_of examples") {
    CHECK(form_of(factorize(42)) == FormLabel{Form::PQRConstrained, {2, 3, 7}});
    CHECK(form_of(factorize(54)) == FormLabel{Form::PCubeQConstrained, {3, 2}});
    CHECK(form_of(factorize(30)) == FormLabel{Form::NotAP, {}});
    CHECK(form_of(factorize(64)) == FormLabel{Form::NotAP, {}});
    CHECK(form_of(factorize(12)) == FormLabel{Form::PSquareQ, {2, 3}});
    CHECK(form_of(factorize(1)) == FormLabel{Form::One, {}});
    CHECK(form_of(factorize(7)) == FormLabel{Form::Prime, {7}});
    CHECK(form_of(factorize(16)) == FormLabel{Form::PrimeFourth, {2}});
    CHECK(form_of(factorize(32)) == FormLabel{Form::PrimeFifth, {2}});
    CHECK(form_of(factorize(18)) == FormLabel{Form::PQSquare, {2, 3}});
}

TEST_CASE("form_of_inclusive examples") {
    CHECK(form_of_inclusive(factorize(1)).variant == Form::One);
    CHECK(form_of_inclusive(factorize(8)).variant == Form::PrimeCube);
    CHECK(form_of_inclusive(factorize(16)).variant == Form::NotAP);
    CHECK(form_of_inclusive(factorize(15)).variant == Form::Semiprime);
    CHECK(form_of_inclusive(factorize(12)).variant == Form::NotAP);
}

TEST_CASE("predicted_set examples") {
    CHECK(predicted_set({Form::PQRConstrained, {2, 3, 7}}) == std::vector<u64>{7, 14, 21});
    CHECK(predicted_set({Form::PCubeQConstrained, {3, 2}}) == std::vector<u64>{9, 18, 27});
    CHECK(predicted_set({Form::PrimeSquare, {5}}) == std::vector<u64>{5});
    // item (viii) sub-shapes: q < p^2 vs q > p^2
    CHECK(predicted_set({Form::PSquareQ, {2, 3}}) == std::vector<u64>{4, 6});
    CHECK(predicted_set({Form::PSquareQ, {2, 5}}) == std::vector<u64>{5, 10});
    // inclusive sets append n itself
    CHECK(predicted_set({Form::One, {}}, Mode::Inclusive) == std::vector<u64>{1});
    CHECK(predicted_set({Form::Semiprime, {2, 3}}, Mode::Inclusive) == std::vector<u64>{3, 6});
    CHECK(predicted_set({Form::PrimeCube, {2}}, Mode::Inclusive) == std::vector<u64>{4, 8});
    CHECK_THROWS_AS(predicted_set({Form::NotAP, {}}), std::invalid_argument);
}

TEST_CASE("oracle_classify examples") {
    auto l16 = oracle_classify(16, Mode::Exclusive);
    CHECK(l16.divisors == std::vector<u64>{4, 8});
    CHECK(l16.is_ap);

    auto l42 = oracle_classify(42, Mode::Exclusive);
    CHECK(l42.divisors == std::vector<u64>{7, 14, 21});
    CHECK(l42.is_ap);

    auto l30 = oracle_classify(30, Mode::Exclusive);
    CHECK(l30.divisors == std::vector<u64>{6, 10, 15});
    CHECK(!l30.is_ap);
}

TEST_CASE("classify examples") {
    auto r20 = classify(20);
    CHECK(r20.exclusive_form == FormLabel{Form::PSquareQ, {2, 5}});
    CHECK(r20.exclusive_set.divisors == std::vector<u64>{5, 10});
    CHECK(r20.oracle_agrees);

    auto r18 = classify(18);
    CHECK(r18.exclusive_form == FormLabel{Form::PQSquare, {2, 3}});
    CHECK(r18.exclusive_set.divisors == std::vector<u64>{6, 9});
    CHECK(r18.oracle_agrees);

    auto r36 = classify(36);
    CHECK(r36.exclusive_form.variant == Form::NotAP);
    CHECK(r36.exclusive_set.divisors == std::vector<u64>{6, 9, 12, 18});
    CHECK(!r36.exclusive_set.is_ap);
    CHECK(r36.oracle_agrees);
}

TEST_CASE("classifier matches oracle with predicted sets up to 10^5") {
    for (u64 n = 1; n <= 100'000; ++n) {
        ClassificationResult res = classify(n);
        CHECK(res.oracle_agrees);
        CHECK((res.exclusive_form.variant != Form::NotAP) == res.exclusive_set.is_ap);
        CHECK((res.inclusive_form.variant != Form::NotAP) == res.inclusive_set.is_ap);
        // inclusive AP implies exclusive AP (L_n is a subset of L'_n)
        if (res.inclusive_set.is_ap) CHECK(res.exclusive_set.is_ap);
    }
}

TEST_CASE("constraint sharpness for pqr and p^3 q up to 10^5") {
    std::vector<u64> primes;
    for (u64 v = 2; v < 50'000; ++v) {
        if (is_prime(v)) primes.push_back(v);
    }
    const u64 bound = 100'000;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        if (p * p * p > bound) break;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            u64 q = primes[j];
            if (p * q * q > bound) break;
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                u64 r = primes[k];
                u64 n = p * q * r;
                if (n > bound) break;
                if (p * q >= r) continue;
                bool ap = oracle_classify(n, Mode::Exclusive).is_ap;
                CHECK(ap == (2 * p == q + 1));
            }
        }
    }
    for (u64 p : primes) {
        if (p * p * p * 2 > bound) break;
        for (u64 q : primes) {
            if (q >= p) break;
            u64 n = p * p * p * q;
            if (n > bound) continue;
            bool ap = oracle_classify(n, Mode::Exclusive).is_ap;
            CHECK(ap == (2 * q == p + 1));
        }
    }
}

TEST_CASE("verify_scan") {
    VerifyReport rep = verify_scan(100'000);
    CHECK(rep.checked == 100'000);
    CHECK(rep.ok());
    CHECK(verify_scan(1).ok());
    CHECK(verify_scan(0).ok());
    CHECK_THROWS_AS(verify_scan(u64{1'000'000'000'000}), resource_error);
}

TEST_CASE("verify_scan is segment- and thread-independent") {
    VerifyReport base = verify_scan(20'000);
    for (std::size_t seg : {std::size_t{1} << 10, std::size_t{1} << 14}) {
        for (unsigned threads : {1u, 3u}) {
            VerifyReport rep = verify_scan(20'000, {seg, threads});
            CHECK(rep.classifier_mismatches == base.classifier_mismatches);
            CHECK(rep.long_ap_sets == base.long_ap_sets);
            CHECK(rep.tau_identity_violations == base.tau_identity_violations);
        }
    }
}
