// Acceptance gate: ten end-to-end criteria with hard numeric tolerances and
// runtime budgets. Prints exactly one PASS/FAIL line per criterion; exit code
// is the number of failures. Optional arguments select criterion numbers.

#include "shorchip/shorchip.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace shorchip;
namespace th = shorchip::testing;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

// 1. Bell-pair output of the full photonic pipeline, each amplitude within
//    1e-9 up to one global phase.
void criterion_bell_pair() {
    const QubitCircuit circuit = shor15_circuit();
    const LoweringReport lowered = lower(circuit);
    const PostselectedResult post = postselect(
        apply_unitary(network_unitary(lowered.network), input_state(circuit, lowered.network)),
        lowered.network);
    require(!post.empty(), "post-selection produced an empty state");

    // Keys are (x1, x2, f1, f2); the Bell-pair product has four terms of 1/2.
    std::map<std::string, Complex> ideal;
    ideal["0001"] = ideal["0100"] = ideal["1011"] = ideal["1110"] = Complex(0.5, 0.0);

    Complex phase(1.0, 0.0);
    const auto anchor = post.logical_state.find("0001");
    require(anchor != post.logical_state.end() && std::abs(anchor->second) > 0.0,
            "anchor amplitude 0001 missing");
    phase = Complex(0.5, 0.0) / anchor->second;
    require(std::abs(std::abs(phase) - 1.0) < 1e-9, "anchor amplitude has wrong magnitude");

    for (int idx = 0; idx < 16; ++idx) {
        std::string key(4, '0');
        for (int b = 0; b < 4; ++b)
            if (idx & (1 << b)) key[b] = '1';
        const Complex want = ideal.count(key) ? ideal[key] : Complex(0.0, 0.0);
        const auto it = post.logical_state.find(key);
        const Complex got = it == post.logical_state.end() ? Complex(0.0, 0.0) : it->second;
        require(std::abs(phase * got - want) < 1e-9,
                "amplitude mismatch on " + key + " (|delta| = " +
                    std::to_string(std::abs(phase * got - want)) + ")");
    }
}

// 2. CZ gadget map = (1/3) diag(1,1,1,-1) up to global phase within 1e-10;
//    success probability 1/9 +- 1e-12 per basis input.
void criterion_cz_gadget() {
    QubitCircuit circuit;
    circuit.qubit_labels = {"c", "t"};
    circuit.initial_bits = {0, 0};
    circuit.gates = {{GateKind::CZ, {"c", "t"}}};
    const LoweringReport lowered = lower(circuit);
    const Eigen::Matrix4cd table = cz_truth_table(lowered.network);

    const Complex phase = (1.0 / 3.0) / table(0, 0);
    require(std::abs(std::abs(phase) - 1.0) < 1e-10, "|00> amplitude magnitude is not 1/3");
    Eigen::Matrix4cd ideal = Eigen::Matrix4cd::Identity() / 3.0;
    ideal(3, 3) = -1.0 / 3.0;
    const double defect = (phase * table - ideal).cwiseAbs().maxCoeff();
    require(defect < 1e-10, "gadget map off by " + std::to_string(defect));

    const ModeUnitary u = network_unitary(lowered.network);
    for (int in = 0; in < 4; ++in) {
        circuit.initial_bits = {(in >> 1) & 1, in & 1};
        const PostselectedResult post = postselect(
            apply_unitary(u, input_state(circuit, lowered.network)), lowered.network);
        require(std::abs(post.success_probability - 1.0 / 9.0) < 1e-12,
                "success probability for basis input " + std::to_string(in) + " is " +
                    std::to_string(post.success_probability));
    }
}

// 3. Full-chip post-selection probability 1/81 +- 1e-12.
void criterion_postselection_probability() {
    const auto [dist, postselection] = exact_chip_distribution();
    require(std::abs(postselection - 1.0 / 81.0) < 1e-12,
            "post-selection probability is " + std::to_string(postselection));
    (void)dist;
}

// 4. Outcome distribution uniform on {000, 010, 100, 110} within 1e-10; all
//    other outcomes below 1e-12.
void criterion_outcome_distribution() {
    const auto [dist, postselection] = exact_chip_distribution();
    for (const std::string key : {"000", "010", "100", "110"})
        require(std::abs(dist.probability(key) - 0.25) < 1e-10,
                "probability of " + key + " is " + std::to_string(dist.probability(key)));
    for (const std::string key : {"001", "011", "101", "111"})
        require(dist.probability(key) < 1e-12, "unexpected mass on " + key);
    (void)postselection;
}

// 5. Classification of the four outcomes and aggregate success mass 1/2.
void criterion_classification() {
    const FactoringInstance inst = FactoringInstance::shor15();
    const auto expect_factors = std::make_pair(std::uint64_t{3}, std::uint64_t{5});
    for (const std::string key : {"010", "110"}) {
        const ShorRunResult res = classify_and_factor(inst, key);
        require(res.classification == OutcomeClass::success, key + " did not classify as success");
        require(res.factors.has_value() && *res.factors == expect_factors,
                key + " produced wrong factors");
    }
    require(classify_and_factor(inst, "100").classification ==
                OutcomeClass::trivial_or_invalid_order,
            "100 did not classify as trivial_or_invalid_order");
    require(classify_and_factor(inst, "000").classification == OutcomeClass::inherent_failure,
            "000 did not classify as inherent_failure");

    const auto [dist, postselection] = exact_chip_distribution();
    double success_mass = 0.0;
    for (const auto& [key, p] : dist.probabilities)
        if (classify_and_factor(inst, key).classification == OutcomeClass::success)
            success_mass += p;
    require(std::abs(success_mass - 0.5) < 1e-10,
            "aggregate success mass is " + std::to_string(success_mass));
    (void)postselection;
}

// 6. Fidelity statistics over 100 seeds of 3000 shots: mean >= 0.99 and at
//    least 95 seeds >= 0.98.
void criterion_fidelity_statistics() {
    const auto [dist, postselection] = exact_chip_distribution();
    double mean = 0.0;
    int good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SampledCounts counts = sample_counts(dist, 3000, seed);
        const double f = classical_fidelity(dist, counts.frequencies());
        mean += f;
        good += (f >= 0.98);
    }
    mean /= 100.0;
    require(mean >= 0.99, "mean fidelity is " + std::to_string(mean));
    require(good >= 95, "only " + std::to_string(good) + " seeds reached fidelity 0.98");
    (void)postselection;
}

// 7. Oracle equivalence for 200 random H/CZ circuits (<= 4 qubits, <= 3 CZ):
//    per-outcome match within 1e-9 and success probability (1/9)^#CZ within
//    1e-10.
void criterion_oracle_equivalence() {
    std::mt19937_64 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        const QubitCircuit circuit = th::random_forest_circuit(rng);
        const LoweringReport lowered = lower(circuit);
        const PostselectedResult post = postselect(
            apply_unitary(network_unitary(lowered.network), input_state(circuit, lowered.network)),
            lowered.network);
        require(std::abs(post.success_probability - lowered.expected_success_probability) < 1e-10,
                "trial " + std::to_string(trial) + ": success probability " +
                    std::to_string(post.success_probability) + " != (1/9)^" +
                    std::to_string(lowered.gadget_count));

        const QubitState oracle = statevector_run(circuit);
        const std::size_t dim = std::size_t{1} << circuit.qubit_count();
        for (std::size_t i = 0; i < dim; ++i) {
            std::string key(circuit.qubit_count(), '0');
            for (int b = 0; b < circuit.qubit_count(); ++b)
                if (i & (std::size_t{1} << b)) key[b] = '1';
            const auto it = post.logical_state.find(key);
            const double photonic = it == post.logical_state.end() ? 0.0 : std::norm(it->second);
            const double ideal = std::norm(oracle.amplitudes[i]);
            require(std::abs(photonic - ideal) < 1e-9,
                    "trial " + std::to_string(trial) + ": outcome " + key + " probability " +
                        std::to_string(photonic) + " vs oracle " + std::to_string(ideal));
        }
    }
}

// 8. Number-theory sweep over all coprime (a, N), N <= 200, with synthetic
//    exact phase readouts k = 2^m s / r whenever r divides a power of two.
void criterion_number_theory() {
    for (std::uint64_t N = 3; N <= 200; ++N) {
        for (std::uint64_t a = 2; a < N; ++a) {
            if (gcd(a, N) != 1) continue;
            int width = 1;
            while ((std::uint64_t{1} << width) < N) ++width;
            const FactoringInstance inst(N, a, width);
            const std::uint64_t r = find_order_bruteforce(inst);
            require(modexp(a, r, N) == 1, "brute-force order is not an order");
            for (std::uint64_t d = 1; d < r; ++d)
                if (r % d == 0)
                    require(modexp(a, d, N) != 1, "brute-force order is not minimal");

            if ((r & (r - 1)) != 0) continue;  // synthetic dyadic readout needs r | 2^m
            int m = width;
            while ((std::uint64_t{1} << m) % r != 0) ++m;
            const FactoringInstance dyadic(N, a, m);
            const std::uint64_t scale = (std::uint64_t{1} << m) / r;
            const bool order_splits_n = (r % 2 == 0) && (modexp(a, r / 2, N) != N - 1);
            for (std::uint64_t s = 0; s < r; ++s) {
                const std::uint64_t k = scale * s;
                std::string outcome(m, '0');
                for (int b = 0; b < m; ++b)
                    if (k & (std::uint64_t{1} << b)) outcome[m - 1 - b] = '1';
                const ShorRunResult res = classify_and_factor(dyadic, outcome);
                if (s == 0) {
                    require(res.classification == OutcomeClass::inherent_failure,
                            "k = 0 must be an inherent failure");
                } else if (gcd(s, r) == 1) {
                    require(res.candidate_order == std::optional<std::uint64_t>(r),
                            "coprime numerator did not recover the order");
                    if (order_splits_n) {
                        require(res.classification == OutcomeClass::success,
                                "N=" + std::to_string(N) + " a=" + std::to_string(a) +
                                    " s=" + std::to_string(s) + ": expected success");
                        require(res.factors && res.factors->first > 1 &&
                                    res.factors->second < N &&
                                    res.factors->first * res.factors->second == N,
                                "factors are not a nontrivial split of N");
                    } else {
                        require(res.classification == OutcomeClass::trivial_or_invalid_order,
                                "N=" + std::to_string(N) + " a=" + std::to_string(a) +
                                    " s=" + std::to_string(s) + ": expected trivial");
                    }
                } else {
                    require(res.classification == OutcomeClass::trivial_or_invalid_order,
                            "non-coprime numerator must fail order validation");
                }
            }
        }
    }
}

// 9. permanent vs permutation-sum oracle (100 matrices, n <= 5, 1e-12) and
//    norm preservation across 100 random unitaries (1e-10).
void criterion_numerical_kernel() {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Eigen::MatrixXcd a = th::random_complex_matrix(n, rng);
        const double delta = std::abs(permanent(a) - th::naive_permanent(a));
        require(delta < 1e-12, "permanent deviates by " + std::to_string(delta));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int modes = 2 + static_cast<int>(rng() % 4);
        const int photons = 1 + static_cast<int>(rng() % 3);
        const ModeUnitary u{th::random_unitary(modes, rng)};
        const PhotonicState state = th::random_state(modes, photons, rng);
        const double norm = apply_unitary(u, state).norm();
        require(std::abs(norm - 1.0) < 1e-10, "evolved norm is " + std::to_string(norm));
    }
}

// 10. repeat_success_rate exactness for n <= 30 at p = 1/2.
void criterion_repeat_success() {
    require(repeat_success_rate(1, 0.5) == 0.5, "repeat_success_rate(1, 1/2) != 0.5");
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const double expected = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
        require(repeat_success_rate(n, 0.5) == expected,
                "repeat_success_rate(" + std::to_string(n) + ", 1/2) inexact");
    }
}

struct Criterion {
    int number;
    const char* summary;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "Bell-pair output of the photonic pipeline", 1.0, criterion_bell_pair},
        {2, "CZ gadget map and 1/9 success probability", 0.1, criterion_cz_gadget},
        {3, "full-chip post-selection probability 1/81", 5.0, criterion_postselection_probability},
        {4, "uniform outcome distribution", 5.0, criterion_outcome_distribution},
        {5, "outcome classification and success mass 1/2", 5.0, criterion_classification},
        {6, "fidelity statistics over 100 seeds", 5.0, criterion_fidelity_statistics},
        {7, "photonic/oracle equivalence on 200 random circuits", 60.0,
         criterion_oracle_equivalence},
        {8, "number-theory sweep N <= 200", 10.0, criterion_number_theory},
        {9, "permanent oracle and norm preservation", 30.0, criterion_numerical_kernel},
        {10, "repeat success rate exactness", 1.0, criterion_repeat_success},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.number) == selected.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(seconds) + " s exceeds budget of " +
                     std::to_string(c.budget_seconds) + " s";
        }
        std::printf("%s criterion %2d: %s [%.3f s]\n", ok ? "PASS" : "FAIL", c.number, c.summary,
                    seconds);
        if (!ok) {
            std::fprintf(stderr, "  criterion %d detail: %s\n", c.number, detail.c_str());
            ++failures;
        }
    }
    return failures;
}
