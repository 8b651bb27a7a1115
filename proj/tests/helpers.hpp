#pragma once

// Shared test utilities: independent brute-force oracles (permutation-sum
// permanent, polynomial-expansion multi-photon evolution), random inputs, and
// phase-insensitive comparisons. None of these reuse the library's permanent
// or apply_unitary internals, so agreement is meaningful evidence.

#include "shorchip/compiler.hpp"
#include "shorchip/qubit_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace shorchip::testing {

/// Permanent as a literal sum over all n! permutations.
inline Complex naive_permanent(const Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Complex(1.0, 0.0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total(0.0, 0.0);
    do {
        Complex prod(1.0, 0.0);
        for (int i = 0; i < n; ++i) prod *= a(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Multi-photon evolution by direct polynomial expansion of the creation
/// operators: apply a_j^dag -> sum_i U(i,j) a_i^dag for each input photon and
/// collect monomial coefficients. The |T> amplitude is the coefficient times
/// sqrt(prod T_i!) / sqrt(prod S_j!). No permanents anywhere.
inline PhotonicState naive_evolve(const ModeUnitary& u, const PhotonicState& state) {
    const int modes = state.mode_count;
    PhotonicState out;
    out.mode_count = modes;
    out.photon_number = state.photon_number;

    for (const auto& [source, source_amp] : state.amplitudes) {
        std::map<OccupationVector, Complex> poly;
        OccupationVector vacuum;
        vacuum.counts.assign(modes, 0);
        poly[vacuum] = Complex(1.0, 0.0);
        for (int j = 0; j < modes; ++j) {
            for (int photon = 0; photon < source.counts[j]; ++photon) {
                std::map<OccupationVector, Complex> next;
                for (const auto& [occ, coeff] : poly) {
                    for (int i = 0; i < modes; ++i) {
                        if (u.entries(i, j) == Complex(0.0, 0.0)) continue;
                        OccupationVector bumped = occ;
                        ++bumped.counts[i];
                        next[bumped] += coeff * u.entries(i, j);
                    }
                }
                poly = std::move(next);
            }
        }
        const double source_fact = detail::occupation_factorial(source);
        for (const auto& [target, coeff] : poly) {
            const double target_fact = detail::occupation_factorial(target);
            out.amplitudes[target] += source_amp * coeff * std::sqrt(target_fact / source_fact);
        }
    }
    out.prune(1e-15);
    return out;
}

/// Haar-ish random unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal absorbed into Q.
inline Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
        const Complex d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

inline Eigen::MatrixXcd random_complex_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
    return a;
}

/// Random normalized superposition over the whole (modes, photons) sector.
inline PhotonicState random_state(int modes, int photons, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    PhotonicState state;
    state.mode_count = modes;
    state.photon_number = photons;
    for (const OccupationVector& occ : enumerate_basis(modes, photons))
        state.amplitudes[occ] = Complex(gauss(rng), gauss(rng));
    const double n = state.norm();
    for (auto& [occ, amp] : state.amplitudes) amp /= n;
    return state;
}

/// Largest absolute difference between the two states after rotating `b` by
/// the phase that aligns it with `a` on a's largest-magnitude amplitude.
inline double state_distance_up_to_phase(const PhotonicState& a, const PhotonicState& b) {
    const OccupationVector* anchor = nullptr;
    double best = 0.0;
    for (const auto& [occ, amp] : a.amplitudes) {
        if (std::abs(amp) > best) {
            best = std::abs(amp);
            anchor = &occ;
        }
    }
    Complex phase(1.0, 0.0);
    if (anchor != nullptr) {
        const Complex bb = b.amplitude(*anchor);
        if (std::abs(bb) > 0.0) phase = (a.amplitude(*anchor) / best) * (std::abs(bb) / bb);
    }
    double dist = 0.0;
    auto visit = [&](const OccupationVector& occ) {
        dist = std::max(dist, std::abs(a.amplitude(occ) - phase * b.amplitude(occ)));
    };
    for (const auto& [occ, amp] : a.amplitudes) visit(occ);
    for (const auto& [occ, amp] : b.amplitudes) visit(occ);
    return dist;
}

/// Compare a post-selected logical state with a qubit-oracle state vector,
/// allowing one global phase. Logical key character q is qubit q; oracle bit q
/// of the index is qubit q.
inline double logical_distance_up_to_phase(const std::map<std::string, Complex>& logical,
                                           const QubitState& oracle) {
    const int q = oracle.qubit_count;
    auto logical_amp = [&](std::size_t index) {
        std::string key(q, '0');
        for (int b = 0; b < q; ++b)
            if (index & (std::size_t{1} << b)) key[b] = '1';
        auto it = logical.find(key);
        return it == logical.end() ? Complex(0.0, 0.0) : it->second;
    };
    std::size_t anchor = 0;
    double best = 0.0;
    const std::size_t dim = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(oracle.amplitudes[i]) > best) {
            best = std::abs(oracle.amplitudes[i]);
            anchor = i;
        }
    }
    Complex phase(1.0, 0.0);
    const Complex la = logical_amp(anchor);
    if (best > 0.0 && std::abs(la) > 0.0)
        phase = (oracle.amplitudes[anchor] / best) * (std::abs(la) / la);
    double dist = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        dist = std::max(dist, std::abs(oracle.amplitudes[i] - phase * logical_amp(i)));
    return dist;
}

/// Random H/CZ circuit with at most `max_qubits` qubits and at most `max_cz`
/// CZ gates whose interaction graph is a forest (no repeated pair, no cycle).
/// Post-selected gadget composition is exact precisely for such circuits: a
/// cycle (or a repeated pair) lets a photon leave one rail pair through one
/// central coupler and return through another, opening interference paths
/// between different gadgets' failure modes.
inline QubitCircuit random_forest_circuit(std::mt19937_64& rng, int max_qubits = 4,
                                          int max_cz = 3, int max_h = 6) {
    std::uniform_int_distribution<int> qubit_dist(1, max_qubits);
    const int qubits = qubit_dist(rng);

    QubitCircuit circuit;
    for (int q = 0; q < qubits; ++q) circuit.qubit_labels.push_back("q" + std::to_string(q));
    std::uniform_int_distribution<int> bit(0, 1);
    for (int q = 0; q < qubits; ++q) circuit.initial_bits.push_back(bit(rng));

    const int cz_cap = std::min(max_cz, qubits - 1);  // forest bound
    const int cz_count = cz_cap > 0 ? std::uniform_int_distribution<int>(0, cz_cap)(rng) : 0;
    const int h_count = std::uniform_int_distribution<int>(0, max_h)(rng);

    // Union-find keeps the CZ edge set acyclic.
    std::vector<int> parent(qubits);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<Gate> gates;
    std::uniform_int_distribution<int> pick(0, qubits - 1);
    for (int h = 0; h < h_count; ++h)
        gates.push_back({GateKind::H, {circuit.qubit_labels[pick(rng)]}});
    for (int e = 0; e < cz_count; ++e) {
        int a = pick(rng), b = pick(rng);
        while (a == b || find(a) == find(b)) {  // rejection; an acyclic edge always exists
            a = pick(rng);
            b = pick(rng);
        }
        parent[find(a)] = find(b);
        gates.push_back({GateKind::CZ, {circuit.qubit_labels[a], circuit.qubit_labels[b]}});
    }

    std::shuffle(gates.begin(), gates.end(), rng);
    circuit.gates = std::move(gates);
    return circuit;
}

}  // namespace shorchip::testing
