#pragma once

// Classical post-processing for the compiled order-finding routine: order
// candidates from phase readouts, order validation, Euclid's gcd factor
// extraction, outcome classification, and repeat-success analytics.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace shorchip {

/// Greatest common divisor by Euclid's algorithm. gcd(0, 0) is rejected.
inline std::uint64_t gcd(std::uint64_t u, std::uint64_t v) {
    if (u == 0 && v == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (v != 0) {
        const std::uint64_t r = u % v;
        u = v;
        v = r;
    }
    return u;
}

/// a^z mod N by square-and-multiply. Requires N < 2^31 so products fit in 64
/// bits; larger moduli are rejected rather than silently overflowing.
inline std::uint64_t modexp(std::uint64_t a, std::uint64_t z, std::uint64_t N) {
    if (N < 2) throw std::invalid_argument("modulus must be >= 2");
    if (N > (std::uint64_t{1} << 31))
        throw std::overflow_error("modulus above 2^31 not supported");
    std::uint64_t result = 1 % N;
    std::uint64_t base = a % N;
    while (z > 0) {
        if (z & 1) result = result * base % N;
        base = base * base % N;
        z >>= 1;
    }
    return result;
}

/// The number to factor, the chosen coprime base, and the readout register
/// width m (including the redundant low bit).
struct FactoringInstance {
    std::uint64_t N;
    std::uint64_t a;
    int argument_bits;

    FactoringInstance(std::uint64_t N_, std::uint64_t a_, int argument_bits_)
        : N(N_), a(a_), argument_bits(argument_bits_) {
        if (N > (std::uint64_t{1} << 31))
            throw std::overflow_error("N above 2^31 not supported");
        if (!(1 < a && a < N)) throw std::invalid_argument("base must satisfy 1 < a < N");
        if (gcd(a, N) != 1) throw std::invalid_argument("base must be coprime to N");
        if (argument_bits < 1 || argument_bits > 62)
            throw std::invalid_argument("argument register width out of range");
    }

    static FactoringInstance shor15() { return FactoringInstance(15, 2, 3); }
};

/// Least r >= 1 with a^r = 1 mod N; exists whenever gcd(a, N) = 1.
inline std::uint64_t find_order_bruteforce(const FactoringInstance& inst) {
    std::uint64_t power = inst.a % inst.N;
    std::uint64_t r = 1;
    while (power != 1) {
        power = power * (inst.a % inst.N) % inst.N;
        ++r;
    }
    return r;
}

/// Reverse a readout bit string; applied exactly once between measurement and
/// phase extraction to turn the detector-order readout into the numeric label.
inline std::string invert_bit_order(const std::string& raw) {
    return std::string(raw.rbegin(), raw.rend());
}

/// Order candidate from the phase readout k out of 2^m, by the continued
/// fraction expansion of k/2^m: the last convergent whose denominator stays
/// below `denominator_bound` (0 = unbounded, giving the denominator of k/2^m
/// in lowest terms). k = 0 carries no phase information and yields nothing.
inline std::optional<std::uint64_t> order_candidate(std::uint64_t k, int m,
                                                    std::uint64_t denominator_bound = 0) {
    if (m < 1 || m > 62) throw std::invalid_argument("register width out of range");
    const std::uint64_t q = std::uint64_t{1} << m;
    if (k >= q) throw std::invalid_argument("phase numerator must satisfy k < 2^m");
    if (k == 0) return std::nullopt;

    // Convergent denominators of k/q via the Euclidean quotient sequence.
    std::uint64_t num = k, den = q;
    std::uint64_t d_prev = 0, d_curr = 1;  // denominators of convergents -1 and 0
    std::uint64_t best = 0;
    bool first = true;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t r = num % den;
        const std::uint64_t d_next = first ? 1 : a * d_curr + d_prev;
        // The first quotient is the integer part; its convergent denominator is 1.
        if (!first) {
            d_prev = d_curr;
            d_curr = d_next;
        }
        if (denominator_bound == 0 || d_next < denominator_bound) best = d_next;
        num = den;
        den = r;
        first = false;
    }
    return best == 0 ? std::nullopt : std::optional<std::uint64_t>{best};
}

enum class OutcomeClass { success, trivial_or_invalid_order, inherent_failure };

inline const char* to_string(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::success: return "success";
        case OutcomeClass::trivial_or_invalid_order: return "trivial_or_invalid_order";
        case OutcomeClass::inherent_failure: return "inherent_failure";
    }
    return "?";
}

/// One classified run: the readout label, the phase numerator it encodes, the
/// continued-fraction order candidate, and the extracted factors on success.
struct ShorRunResult {
    std::string raw_outcome;  // numeric-order label, e.g. "010" for k = 2
    std::uint64_t phase_numerator = 0;
    std::optional<std::uint64_t> candidate_order;
    OutcomeClass classification = OutcomeClass::inherent_failure;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
};

/// Full classical pipeline for one measurement outcome. The outcome string is
/// the readout label after bit-order inversion (MSB first), width m.
///
/// A candidate order is only used if it passes the strict order test
/// a^r = 1 mod N; this is what makes the k=4 readout (candidate r=2,
/// 2^2 = 4 != 1 mod 15) classify as trivial rather than feeding bogus gcds.
inline ShorRunResult classify_and_factor(const FactoringInstance& inst,
                                         const std::string& raw_outcome) {
    if (static_cast<int>(raw_outcome.size()) != inst.argument_bits)
        throw std::invalid_argument("outcome width does not match the argument register");
    std::uint64_t k = 0;
    for (char c : raw_outcome) {
        if (c != '0' && c != '1') throw std::invalid_argument("outcome must be a bit string");
        k = (k << 1) | static_cast<std::uint64_t>(c - '0');
    }

    ShorRunResult result;
    result.raw_outcome = raw_outcome;
    result.phase_numerator = k;
    if (k == 0) {
        result.classification = OutcomeClass::inherent_failure;
        return result;
    }

    result.candidate_order = order_candidate(k, inst.argument_bits, inst.N);
    result.classification = OutcomeClass::trivial_or_invalid_order;
    if (!result.candidate_order) return result;

    const std::uint64_t r = *result.candidate_order;
    if (modexp(inst.a, r, inst.N) != 1 || r % 2 != 0) return result;
    const std::uint64_t half = modexp(inst.a, r / 2, inst.N);
    if (half == inst.N - 1) return result;  // a^(r/2) = -1 mod N gives nothing

    const std::uint64_t g1 = gcd(inst.N, half - 1);  // gcd(N, 0) = N, safely trivial
    const std::uint64_t g2 = gcd(inst.N, half + 1);
    if (g1 > 1 && g1 < inst.N && g2 > 1 && g2 < inst.N) {
        // Report a pair that multiplies back to N. (g1, g2) itself can
        // overshoot when both gcds share a factor of 2, e.g. N = 12, half = 5.
        const std::uint64_t f = g1;
        result.classification = OutcomeClass::success;
        result.factors = std::make_pair(std::min(f, inst.N / f), std::max(f, inst.N / f));
    }
    return result;
}

/// Probability that at least one of n independent runs succeeds.
inline double repeat_success_rate(std::uint64_t n, double single_run_success) {
    if (n < 1) throw std::invalid_argument("need at least one run");
    if (!(single_run_success >= 0.0 && single_run_success <= 1.0))
        throw std::invalid_argument("success probability must lie in [0, 1]");
    // (1 - p)^n by binary exponentiation; exact for dyadic p like 1/2.
    double fail = 1.0 - single_run_success;
    double pow_fail = 1.0;
    while (n > 0) {
        if (n & 1) pow_fail *= fail;
        fail *= fail;
        n >>= 1;
    }
    return 1.0 - pow_fail;
}

}  // namespace shorchip
