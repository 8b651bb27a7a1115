#pragma once

// Independent dense state-vector simulator for small H/CZ circuits, used as
// ground truth for the photonic engine.
//
// Bit order: the qubit listed first in the circuit is the least significant
// bit of basis indices and of outcome strings (so strings print MSB-first with
// the last-listed qubit leftmost).

#include "shorchip/compiler.hpp"
#include "shorchip/distribution.hpp"

namespace shorchip {

struct QubitState {
    int qubit_count = 0;
    Eigen::VectorXcd amplitudes;  // length 2^qubit_count

    double norm() const { return amplitudes.norm(); }
};

constexpr int kMaxOracleQubits = 12;

inline QubitState statevector_run(const QubitCircuit& circuit) {
    validate(circuit);
    const int q = circuit.qubit_count();
    if (q > kMaxOracleQubits)
        throw std::invalid_argument("state-vector oracle limited to 12 qubits");

    QubitState state;
    state.qubit_count = q;
    state.amplitudes = Eigen::VectorXcd::Zero(std::size_t{1} << q);
    std::size_t init = 0;
    for (int i = 0; i < q; ++i)
        if (circuit.initial_bits[i]) init |= std::size_t{1} << i;
    state.amplitudes[init] = Complex(1.0, 0.0);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t dim = state.amplitudes.size();
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::H) {
            const std::size_t bit = std::size_t{1} << circuit.qubit_index(g.targets[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) continue;
                const Complex a0 = state.amplitudes[i];
                const Complex a1 = state.amplitudes[i | bit];
                state.amplitudes[i] = inv_sqrt2 * (a0 + a1);
                state.amplitudes[i | bit] = inv_sqrt2 * (a0 - a1);
            }
        } else {
            const std::size_t b1 = std::size_t{1} << circuit.qubit_index(g.targets[0]);
            const std::size_t b2 = std::size_t{1} << circuit.qubit_index(g.targets[1]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & b1) && (i & b2)) state.amplitudes[i] = -state.amplitudes[i];
        }
    }
    return state;
}

/// Probabilities over the measured subset, summing out the rest. Outcome keys
/// are bit strings of width |measured_qubits|, where measured_qubits[i] is bit
/// i of the outcome (so the first-listed measured qubit is rightmost).
inline OutcomeDistribution marginal_distribution(const QubitState& state,
                                                 const std::vector<int>& measured_qubits) {
    if (measured_qubits.empty())
        throw std::invalid_argument("marginal over an empty subset is not defined");
    for (int q : measured_qubits)
        if (q < 0 || q >= state.qubit_count)
            throw std::invalid_argument("measured qubit index out of range");

    const std::size_t keys = std::size_t{1} << measured_qubits.size();
    std::vector<double> prob(keys, 0.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(state.amplitudes.size()); ++i) {
        std::size_t key = 0;
        for (std::size_t b = 0; b < measured_qubits.size(); ++b)
            if (i & (std::size_t{1} << measured_qubits[b])) key |= std::size_t{1} << b;
        prob[key] += std::norm(state.amplitudes[i]);
    }

    OutcomeDistribution dist;
    for (std::size_t key = 0; key < keys; ++key) {
        std::string bits(measured_qubits.size(), '0');
        for (std::size_t b = 0; b < measured_qubits.size(); ++b)
            if (key & (std::size_t{1} << b)) bits[measured_qubits.size() - 1 - b] = '1';
        dist.probabilities[bits] = prob[key];
    }
    return dist;
}

}  // namespace shorchip
