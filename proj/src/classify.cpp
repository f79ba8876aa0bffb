#include "apdiv/classify.hpp"

#include <cassert>

namespace apdiv {

std::string_view to_string(Form form) {
    switch (form) {
        case Form::One: return "One";
        case Form::Prime: return "Prime";
        case Form::PrimeSquare: return "PrimeSquare";
        case Form::PrimeCube: return "PrimeCube";
        case Form::Semiprime: return "Semiprime";
        case Form::PrimeFourth: return "PrimeFourth";
        case Form::PrimeFifth: return "PrimeFifth";
        case Form::PSquareQ: return "PSquareQ";
        case Form::PQSquare: return "PQSquare";
        case Form::PQRConstrained: return "PQRConstrained";
        case Form::PCubeQConstrained: return "PCubeQConstrained";
        case Form::NotAP: return "NotAP";
    }
    return "NotAP";
}

Form exclusive_form(std::span<const PrimePower> factors) {
    switch (factors.size()) {
        case 0:
            return Form::One;
        case 1:
            switch (factors[0].exponent) {
                case 1: return Form::Prime;
                case 2: return Form::PrimeSquare;
                case 3: return Form::PrimeCube;
                case 4: return Form::PrimeFourth;
                case 5: return Form::PrimeFifth;
                default: return Form::NotAP;  // p^6 and beyond
            }
        case 2: {
            const auto& [p, ep] = factors[0];
            const auto& [q, eq] = factors[1];  // p < q
            if (ep == 1 && eq == 1) return Form::Semiprime;
            if (ep == 2 && eq == 1) return Form::PSquareQ;
            if (ep == 1 && eq == 2) return Form::PQSquare;
            // n = c^3 * s with the cubed prime c: AP only when c > s and
            // 2s = c + 1.
            if (ep == 1 && eq == 3) return 2 * p == q + 1 ? Form::PCubeQConstrained : Form::NotAP;
            return Form::NotAP;  // includes (3,1): cubed prime below q
        }
        case 3: {
            if (factors[0].exponent != 1 || factors[1].exponent != 1 ||
                factors[2].exponent != 1) {
                return Form::NotAP;
            }
            u64 p = factors[0].prime, q = factors[1].prime, r = factors[2].prime;
            if (u128{p} * q < r && 2 * p == q + 1) return Form::PQRConstrained;
            return Form::NotAP;
        }
        default:
            return Form::NotAP;
    }
}

Form inclusive_form(std::span<const PrimePower> factors) {
    switch (factors.size()) {
        case 0:
            return Form::One;
        case 1:
            switch (factors[0].exponent) {
                case 1: return Form::Prime;
                case 2: return Form::PrimeSquare;
                case 3: return Form::PrimeCube;
                default: return Form::NotAP;
            }
        case 2:
            if (factors[0].exponent == 1 && factors[1].exponent == 1) return Form::Semiprime;
            return Form::NotAP;
        default:
            return Form::NotAP;
    }
}

namespace {

FormLabel with_witnesses(Form variant, std::span<const PrimePower> factors) {
    FormLabel label{variant, {}};
    switch (variant) {
        case Form::One:
        case Form::NotAP:
            break;
        case Form::Prime:
        case Form::PrimeSquare:
        case Form::PrimeCube:
        case Form::PrimeFourth:
        case Form::PrimeFifth:
            label.witnesses = {factors[0].prime};
            break;
        case Form::Semiprime:
        case Form::PSquareQ:
            label.witnesses = {factors[0].prime, factors[1].prime};
            assert(factors[1].prime != factors[0].prime * factors[0].prime);
            break;
        case Form::PQSquare:
            label.witnesses = {factors[0].prime, factors[1].prime};
            assert(factors[1].prime != factors[0].prime * factors[0].prime);
            break;
        case Form::PQRConstrained:
            label.witnesses = {factors[0].prime, factors[1].prime, factors[2].prime};
            break;
        case Form::PCubeQConstrained:
            // witnesses (p, q) with n = p^3 q and p > q
            label.witnesses = {factors[1].prime, factors[0].prime};
            break;
    }
    return label;
}

}  // namespace

FormLabel form_label(std::span<const PrimePower> factors, Mode mode) {
    Form variant = mode == Mode::Exclusive ? exclusive_form(factors) : inclusive_form(factors);
    return with_witnesses(variant, factors);
}

FormLabel form_of(const Factorization& f) {
    return with_witnesses(exclusive_form(f.factors), f.factors);
}

FormLabel form_of_inclusive(const Factorization& f) {
    return with_witnesses(inclusive_form(f.factors), f.factors);
}

std::vector<u64> predicted_set(const FormLabel& label, Mode mode) {
    const auto& w = label.witnesses;
    std::vector<u64> set;
    u64 n = 1;
    switch (label.variant) {
        case Form::NotAP:
            throw std::invalid_argument("predicted_set: NotAP has no predicted set");
        case Form::One:
            n = 1;
            break;
        case Form::Prime:
            n = w[0];
            break;
        case Form::PrimeSquare:
            n = w[0] * w[0];
            set = {w[0]};
            break;
        case Form::PrimeCube:
            n = w[0] * w[0] * w[0];
            set = {w[0] * w[0]};
            break;
        case Form::Semiprime:
            n = w[0] * w[1];
            set = {w[1]};
            break;
        case Form::PrimeFourth:
            n = w[0] * w[0] * w[0] * w[0];
            set = {w[0] * w[0], w[0] * w[0] * w[0]};
            break;
        case Form::PrimeFifth:
            n = w[0] * w[0] * w[0] * w[0] * w[0];
            set = {w[0] * w[0] * w[0], w[0] * w[0] * w[0] * w[0]};
            break;
        case Form::PSquareQ: {
            u64 p = w[0], q = w[1];
            n = p * p * q;
            set = q < p * p ? std::vector<u64>{p * p, p * q} : std::vector<u64>{q, p * q};
            break;
        }
        case Form::PQSquare: {
            u64 p = w[0], q = w[1];
            n = p * q * q;
            set = {p * q, q * q};
            break;
        }
        case Form::PQRConstrained: {
            u64 p = w[0], q = w[1], r = w[2];
            n = p * q * r;
            set = {r, p * r, q * r};
            break;
        }
        case Form::PCubeQConstrained: {
            u64 p = w[0], q = w[1];  // p > q
            n = p * p * p * q;
            set = {p * p, p * p * q, p * p * p};
            break;
        }
    }
    if (mode == Mode::Inclusive) set.push_back(n);
    return set;
}

LargeDivisorSet oracle_classify(u64 n, Mode mode) { return large_divisors(n, mode); }

ClassificationResult classify(u64 n) {
    ClassificationResult res;
    res.n = n;
    Factorization f = factorize(n);
    res.exclusive_form = form_of(f);
    res.inclusive_form = form_of_inclusive(f);
    res.exclusive_set = large_divisors(n, Mode::Exclusive);
    res.inclusive_set = large_divisors(n, Mode::Inclusive);

    auto agrees = [](const FormLabel& label, const LargeDivisorSet& set, Mode mode) {
        if ((label.variant != Form::NotAP) != set.is_ap) return false;
        if (label.variant != Form::NotAP && predicted_set(label, mode) != set.divisors) return false;
        return true;
    };
    res.oracle_agrees = agrees(res.exclusive_form, res.exclusive_set, Mode::Exclusive) &&
                        agrees(res.inclusive_form, res.inclusive_set, Mode::Inclusive);
    return res;
}

}  // namespace apdiv
