#pragma once

// Lowering of abstract H/CZ qubit circuits to directional-coupler networks
// under dual-rail encoding.
//
// Layout: qubit i owns modes (2i, 2i+1) = (rail "0", rail "1"); each CZ gate
// appends two fresh vacuum ancilla modes after all rails, in gate order.
//
// Gate translation (real_signed convention):
//   H(q)     -> one eta=1/2 coupler on (rail0, rail1); at eta=1/2 the
//               real_signed matrix is exactly the Hadamard.
//   CZ(c, t) -> three eta=1/3 couplers: central on (c rail1, t rail1), one
//               loss coupler (c rail0, ancilla) and one (ancilla, t rail0).
//               The operand orders make the two loss couplers contribute
//               +1/sqrt(3) and -1/sqrt(3) while the central coupler's
//               two-photon amplitude is 1 - 2*eta = +1/3, so the post-selected
//               logical map is -(1/3)*diag(1,1,1,-1): a CZ with success 1/9,
//               up to one global phase. cz_truth_table locks this in tests.

#include "shorchip/photonics.hpp"

namespace shorchip {

enum class GateKind { H, CZ };

struct Gate {
    GateKind kind;
    std::vector<std::string> targets;  // 1 label for H, 2 distinct labels for CZ

    bool operator==(const Gate&) const = default;
};

struct QubitCircuit {
    std::vector<std::string> qubit_labels;
    std::vector<int> initial_bits;  // one classical bit per qubit
    std::vector<Gate> gates;

    bool operator==(const QubitCircuit&) const = default;

    int qubit_count() const { return static_cast<int>(qubit_labels.size()); }

    int qubit_index(const std::string& label) const {
        for (int i = 0; i < qubit_count(); ++i)
            if (qubit_labels[i] == label) return i;
        throw std::invalid_argument("gate references undeclared qubit: " + label);
    }
};

inline void validate(const QubitCircuit& circuit) {
    if (circuit.initial_bits.size() != circuit.qubit_labels.size())
        throw std::invalid_argument("need exactly one initial bit per qubit");
    for (int b : circuit.initial_bits)
        if (b != 0 && b != 1) throw std::invalid_argument("initial bits must be 0 or 1");
    for (std::size_t i = 0; i < circuit.qubit_labels.size(); ++i)
        for (std::size_t j = i + 1; j < circuit.qubit_labels.size(); ++j)
            if (circuit.qubit_labels[i] == circuit.qubit_labels[j])
                throw std::invalid_argument("duplicate qubit label: " + circuit.qubit_labels[i]);
    for (const Gate& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
                if (g.targets.size() != 1)
                    throw std::invalid_argument("H takes exactly one target");
                break;
            case GateKind::CZ:
                if (g.targets.size() != 2 || g.targets[0] == g.targets[1])
                    throw std::invalid_argument("CZ takes two distinct targets");
                break;
            default:
                throw std::invalid_argument("unsupported gate kind");
        }
        for (const std::string& t : g.targets) circuit.qubit_index(t);
    }
}

/// The compiled order-finding circuit for N=15, a=2: qubits (x1, x2, f1, f2)
/// prepared as |0 0 0 1>, six Hadamards and two CZ gates arranged so the
/// output is the Bell-pair product
///   (|00> + |11>)_{x1 f1} (x) (|01> + |10>)_{x2 f2} / 2.
inline QubitCircuit shor15_circuit() {
    QubitCircuit c;
    c.qubit_labels = {"x1", "x2", "f1", "f2"};
    c.initial_bits = {0, 0, 0, 1};
    c.gates = {
        {GateKind::H, {"x1"}},  {GateKind::H, {"f1"}}, {GateKind::CZ, {"x1", "f1"}},
        {GateKind::H, {"f1"}},  {GateKind::H, {"x2"}}, {GateKind::H, {"f2"}},
        {GateKind::CZ, {"x2", "f2"}}, {GateKind::H, {"f2"}},
    };
    return c;
}

struct LoweringReport {
    CouplerNetwork network;
    double expected_success_probability = 1.0;  // (1/9)^gadget_count
    int gadget_count = 0;
};

inline LoweringReport lower(const QubitCircuit& circuit,
                            CouplerConvention convention = CouplerConvention::real_signed) {
    validate(circuit);
    const int qubits = circuit.qubit_count();
    int cz_count = 0;
    for (const Gate& g : circuit.gates)
        if (g.kind == GateKind::CZ) ++cz_count;

    CouplerNetwork net;
    net.mode_count = 2 * qubits + 2 * cz_count;
    for (int q = 0; q < qubits; ++q)
        net.rail_map.push_back({circuit.qubit_labels[q], {2 * q, 2 * q + 1}});
    for (int m = 2 * qubits; m < net.mode_count; ++m) net.ancilla_modes.push_back(m);

    int next_ancilla = 2 * qubits;
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::H) {
            const auto [r0, r1] = net.rails(g.targets[0]);
            net.couplers.push_back({r0, r1, 0.5, convention});
        } else {
            const auto [c0, c1] = net.rails(g.targets[0]);
            const auto [t0, t1] = net.rails(g.targets[1]);
            const int anc_c = next_ancilla++;
            const int anc_t = next_ancilla++;
            net.couplers.push_back({c0, anc_c, 1.0 / 3.0, convention});
            net.couplers.push_back({c1, t1, 1.0 / 3.0, convention});
            net.couplers.push_back({anc_t, t0, 1.0 / 3.0, convention});
        }
    }

    LoweringReport report;
    report.network = std::move(net);
    report.gadget_count = cz_count;
    for (int g = 0; g < cz_count; ++g) report.expected_success_probability /= 9.0;
    return report;
}

/// One photon in rail initial_bits[q] of each qubit, vacuum elsewhere;
/// a single basis term with amplitude 1.
inline PhotonicState input_state(const QubitCircuit& circuit, const CouplerNetwork& net) {
    if (circuit.initial_bits.size() != circuit.qubit_labels.size())
        throw std::invalid_argument("need exactly one initial bit per qubit");
    OccupationVector occ;
    occ.counts.assign(net.mode_count, 0);
    for (int q = 0; q < circuit.qubit_count(); ++q) {
        const auto& [r0, r1] = net.rails(circuit.qubit_labels[q]);  // throws on mismatch
        occ.counts[circuit.initial_bits[q] ? r1 : r0] = 1;
    }
    return PhotonicState::basis_state(occ);
}

/// Post-selected logical map of a single lowered CZ gadget: entry (out, in)
/// is the raw (unnormalized) kept amplitude for computational-basis input
/// `in`, with index bits (control, target) read MSB-first.
inline Eigen::Matrix4cd cz_truth_table(const CouplerNetwork& net) {
    if (net.qubit_count() != 2)
        throw std::invalid_argument("cz_truth_table expects a two-qubit gadget network");
    const ModeUnitary u = network_unitary(net);
    Eigen::Matrix4cd table = Eigen::Matrix4cd::Zero();
    for (int in = 0; in < 4; ++in) {
        OccupationVector occ;
        occ.counts.assign(net.mode_count, 0);
        for (int q = 0; q < 2; ++q) {
            const auto& [r0, r1] = net.rail_map[q].second;
            const int bit = (in >> (1 - q)) & 1;
            occ.counts[bit ? r1 : r0] = 1;
        }
        const PostselectedResult post = postselect(apply_unitary(u, PhotonicState::basis_state(occ)), net);
        for (const auto& [occ_out, amp] : post.raw_state.amplitudes) {
            int out = 0;
            for (int q = 0; q < 2; ++q) {
                const auto& [r0, r1] = net.rail_map[q].second;
                out = (out << 1) | (occ_out.counts[r1] ? 1 : 0);
            }
            table(out, in) = amp;
        }
    }
    return table;
}

}  // namespace shorchip
