#pragma once

#include <cstddef>
#include <string_view>

#include "apdiv/core.hpp"

namespace apdiv {

// The shapes of n whose large divisors form an arithmetic progression.
// One..PrimeFifth and Semiprime carry the obvious witnesses; PSquareQ is
// n = p^2*q (p < q), PQSquare is n = p*q^2 (p < q), PQRConstrained is
// n = p*q*r (p < q < r, pq < r, 2p = q+1), PCubeQConstrained is
// n = p^3*q (p > q, 2q = p+1).
enum class Form {
    One,
    Prime,
    PrimeSquare,
    PrimeCube,
    Semiprime,
    PrimeFourth,
    PrimeFifth,
    PSquareQ,
    PQSquare,
    PQRConstrained,
    PCubeQConstrained,
    NotAP,
};

std::string_view to_string(Form form);

struct FormLabel {
    Form variant = Form::NotAP;
    std::vector<u64> witnesses;  // the primes instantiating the form
    friend bool operator==(const FormLabel&, const FormLabel&) = default;
};

// Witness-free classification from a factor span; no divisor enumeration.
Form exclusive_form(std::span<const PrimePower> factors);
Form inclusive_form(std::span<const PrimePower> factors);

FormLabel form_label(std::span<const PrimePower> factors, Mode mode);

// Exclusive classifier: which of the eleven admissible families n belongs
// to, or NotAP.
FormLabel form_of(const Factorization& f);

// Inclusive classifier: One, Prime, PrimeSquare, PrimeCube, Semiprime, or
// NotAP.
FormLabel form_of_inclusive(const Factorization& f);

// The divisor set a form predicts, rebuilt symbolically from the
// witnesses. Inclusive mode appends n itself. Throws std::invalid_argument
// for NotAP.
std::vector<u64> predicted_set(const FormLabel& label, Mode mode = Mode::Exclusive);

// Ground-truth path: enumerate divisors, filter, test the progression.
LargeDivisorSet oracle_classify(u64 n, Mode mode);

struct ClassificationResult {
    u64 n = 1;
    FormLabel exclusive_form;
    FormLabel inclusive_form;
    LargeDivisorSet exclusive_set;
    LargeDivisorSet inclusive_set;
    bool oracle_agrees = true;
};

// Runs classifier and oracle in both modes and cross-checks them.
ClassificationResult classify(u64 n);

struct VerifyReport {
    u64 limit = 0;
    u64 checked = 0;
    u64 classifier_mismatches = 0;   // classifier verdict != oracle verdict
    u64 long_ap_sets = 0;            // AP exclusive sets with >= 4 elements
    u64 tau_identity_violations = 0; // tau(n) vs |L_n| relation broken
    bool ok() const {
        return classifier_mismatches == 0 && long_ap_sets == 0 &&
               tau_identity_violations == 0;
    }
};

struct ScanOptions {
    std::size_t segment_size = std::size_t{1} << 22;
    unsigned threads = 1;
};

// Exhaustive scan of every n <= limit: oracle vs classifier in both modes,
// the tau identity, and the |L_n| <= 3 bound. Throws resource_error above
// the budget (10^9).
VerifyReport verify_scan(u64 limit, const ScanOptions& options = {});

}  // namespace apdiv
