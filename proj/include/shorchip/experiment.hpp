#pragma once

// End-to-end pipeline: exact chip simulation, counting statistics, fidelity
// against the ideal distribution, and per-outcome classification.

#include "shorchip/compiler.hpp"
#include "shorchip/distribution.hpp"
#include "shorchip/qubit_oracle.hpp"
#include "shorchip/shor_classical.hpp"

#include <random>

namespace shorchip {

// 100 Hz coincidence rate integrated for 30 s.
constexpr std::uint64_t kDefaultShots = 3000;
constexpr std::uint64_t kDefaultSeed = 0;

struct SampledCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
    std::uint64_t seed = 0;

    OutcomeDistribution frequencies() const {
        OutcomeDistribution f;
        for (const auto& [outcome, n] : counts)
            f.probabilities[outcome] = static_cast<double>(n) / static_cast<double>(total_shots);
        return f;
    }
};

struct ExperimentReport {
    OutcomeDistribution exact_distribution;
    double postselection_probability = 0.0;
    SampledCounts sampled;
    double fidelity = 0.0;
    std::map<std::string, ShorRunResult> classifications;
};

/// Run the chip exactly: compile the circuit, evolve the four-photon input,
/// post-select, marginalize onto the argument register, synthesize the
/// redundant x0 = 0 bit and invert the detector-order readout into the
/// numeric labels (000, 010, 100, 110). Returns the outcome distribution and
/// the overall post-selection probability.
inline std::pair<OutcomeDistribution, double> exact_chip_distribution(
    CouplerConvention convention = CouplerConvention::real_signed) {
    const QubitCircuit circuit = shor15_circuit();
    const LoweringReport lowered = lower(circuit, convention);
    const PhotonicState evolved =
        apply_unitary(network_unitary(lowered.network), input_state(circuit, lowered.network));
    const PostselectedResult post = postselect(evolved, lowered.network);

    OutcomeDistribution dist;
    for (const auto& [bits, amp] : post.logical_state) {
        // bits is (x1, x2, f1, f2); sum out the function register.
        const std::string readout = {'0', bits[0], bits[1]};  // detector order x0 x1 x2
        dist.probabilities[invert_bit_order(readout)] += std::norm(amp);
    }
    return {dist, post.success_probability};
}

/// Multinomial draw with a seeded mt19937_64; only raw engine output is used
/// (no library distribution adapters), so identical seeds give identical
/// counts on every platform.
inline SampledCounts sample_counts(const OutcomeDistribution& dist, std::uint64_t shots,
                                   std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("need at least one shot");
    std::vector<std::pair<double, const std::string*>> cumulative;
    double acc = 0.0;
    for (const auto& [outcome, p] : dist.probabilities) {
        acc += p;
        cumulative.push_back({acc, &outcome});
    }
    if (cumulative.empty()) throw std::invalid_argument("cannot sample an empty distribution");

    SampledCounts sampled;
    sampled.total_shots = shots;
    sampled.seed = seed;
    for (const auto& [outcome, p] : dist.probabilities) sampled.counts[outcome] = 0;

    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        std::size_t lo = 0, hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < cumulative[mid].first)
                hi = mid;
            else
                lo = mid + 1;
        }
        ++sampled.counts[*cumulative[lo].second];
    }
    return sampled;
}

/// Bhattacharyya fidelity (sum_i sqrt(p_i q_i))^2 between two distributions
/// over the same outcome space; missing keys count as probability zero.
inline double classical_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    double overlap = 0.0;
    for (const auto& [outcome, pp] : p.probabilities)
        overlap += std::sqrt(pp * q.probability(outcome));
    return overlap * overlap;
}

inline ExperimentReport run_full_report(std::uint64_t shots = kDefaultShots,
                                        std::uint64_t seed = kDefaultSeed) {
    ExperimentReport report;
    auto [dist, postselection] = exact_chip_distribution();
    report.exact_distribution = std::move(dist);
    report.postselection_probability = postselection;
    report.sampled = sample_counts(report.exact_distribution, shots, seed);
    report.fidelity = classical_fidelity(report.exact_distribution, report.sampled.frequencies());
    const FactoringInstance inst = FactoringInstance::shor15();
    for (const auto& [outcome, p] : report.exact_distribution.probabilities)
        report.classifications[outcome] = classify_and_factor(inst, outcome);
    return report;
}

}  // namespace shorchip
