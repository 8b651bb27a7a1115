#pragma once

// Directional couplers, their composition into the chip's mode network, and
// post-selected measurement of dual-rail qubits.

#include "shorchip/fock.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shorchip {

enum class CouplerConvention {
    real_signed,      // [[ sqrt(eta),  sqrt(1-eta)], [sqrt(1-eta), -sqrt(eta)]]
    symmetric_phase,  // [[ sqrt(eta), i sqrt(1-eta)], [i sqrt(1-eta), sqrt(eta)]]
};

/// A two-mode directional coupler with reflectivity eta. Under real_signed the
/// operand order carries sign meaning: mode_a keeps +sqrt(eta) on its diagonal,
/// mode_b gets -sqrt(eta).
struct Coupler {
    int mode_a = 0;
    int mode_b = 1;
    double reflectivity = 0.5;
    CouplerConvention convention = CouplerConvention::real_signed;

    bool operator==(const Coupler&) const = default;
};

/// 2x2 transfer matrix of a coupler, rows/columns ordered (mode_a, mode_b).
inline Eigen::Matrix2cd coupler_unitary(const Coupler& c) {
    if (!(c.reflectivity >= 0.0 && c.reflectivity <= 1.0))
        throw std::invalid_argument("coupler reflectivity must lie in [0, 1]");
    const double t = std::sqrt(c.reflectivity);
    const double r = std::sqrt(1.0 - c.reflectivity);
    Eigen::Matrix2cd m;
    if (c.convention == CouplerConvention::real_signed) {
        m << Complex(t, 0), Complex(r, 0), Complex(r, 0), Complex(-t, 0);
    } else {
        m << Complex(t, 0), Complex(0, r), Complex(0, r), Complex(t, 0);
    }
    return m;
}

/// Ordered coupler sequence over `mode_count` modes together with the dual-rail
/// layout: rail_map assigns each qubit label its (rail "0", rail "1") modes, in
/// qubit declaration order; ancilla_modes are required empty on detection.
struct CouplerNetwork {
    int mode_count = 0;
    std::vector<Coupler> couplers;
    std::vector<std::pair<std::string, std::pair<int, int>>> rail_map;
    std::vector<int> ancilla_modes;
    std::string metadata;

    bool operator==(const CouplerNetwork&) const = default;

    int qubit_count() const { return static_cast<int>(rail_map.size()); }

    const std::pair<int, int>& rails(const std::string& qubit) const {
        for (const auto& [label, rails] : rail_map)
            if (label == qubit) return rails;
        throw std::invalid_argument("no such qubit in rail map: " + qubit);
    }
};

/// Check the structural invariants: every coupler references valid distinct
/// modes, and rails plus ancillas partition [0, mode_count).
inline void validate(const CouplerNetwork& net) {
    if (net.mode_count < 1) throw std::invalid_argument("network must have at least one mode");
    std::vector<int> seen(net.mode_count, 0);
    auto claim = [&](int m, const char* what) {
        if (m < 0 || m >= net.mode_count)
            throw std::invalid_argument(std::string(what) + " mode index out of range");
        if (seen[m]++)
            throw std::invalid_argument(std::string(what) + " mode claimed twice");
    };
    for (const auto& [label, rails] : net.rail_map) {
        claim(rails.first, "rail");
        claim(rails.second, "rail");
    }
    for (int m : net.ancilla_modes) claim(m, "ancilla");
    for (int m = 0; m < net.mode_count; ++m)
        if (!seen[m])
            throw std::invalid_argument("mode " + std::to_string(m) +
                                        " is neither a rail nor an ancilla");
    for (const Coupler& c : net.couplers) {
        if (c.mode_a == c.mode_b) throw std::invalid_argument("coupler must join distinct modes");
        if (c.mode_a < 0 || c.mode_a >= net.mode_count || c.mode_b < 0 ||
            c.mode_b >= net.mode_count)
            throw std::invalid_argument("coupler references an invalid mode");
    }
}

/// Identity on all modes except the coupler's 2x2 block.
inline ModeUnitary embed(const Coupler& c, int mode_count) {
    if (c.mode_a < 0 || c.mode_a >= mode_count || c.mode_b < 0 || c.mode_b >= mode_count)
        throw std::invalid_argument("coupler mode index out of range");
    if (c.mode_a == c.mode_b) throw std::invalid_argument("coupler must join distinct modes");
    Eigen::Matrix2cd block = coupler_unitary(c);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(mode_count, mode_count);
    u(c.mode_a, c.mode_a) = block(0, 0);
    u(c.mode_a, c.mode_b) = block(0, 1);
    u(c.mode_b, c.mode_a) = block(1, 0);
    u(c.mode_b, c.mode_b) = block(1, 1);
    return ModeUnitary{std::move(u)};
}

/// Ordered product of the embedded couplers; later couplers act later, i.e.
/// multiply on the left.
inline ModeUnitary network_unitary(const CouplerNetwork& net) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(net.mode_count, net.mode_count);
    for (const Coupler& c : net.couplers) u = embed(c, net.mode_count).entries * u;
    return ModeUnitary{std::move(u)};
}

/// Detection pattern: exactly one photon across each qubit's rail pair, zero
/// photons in every ancilla mode.
struct PostselectionPattern {
    std::vector<std::pair<int, int>> rail_pairs;
    std::vector<int> ancilla_modes;

    static PostselectionPattern for_network(const CouplerNetwork& net) {
        PostselectionPattern p;
        for (const auto& [label, rails] : net.rail_map) p.rail_pairs.push_back(rails);
        p.ancilla_modes = net.ancilla_modes;
        return p;
    }

    int required_photons() const { return static_cast<int>(rail_pairs.size()); }

    bool accepts(const OccupationVector& occ) const {
        for (int m : ancilla_modes)
            if (occ.counts[m] != 0) return false;
        for (const auto& [r0, r1] : rail_pairs)
            if (occ.counts[r0] + occ.counts[r1] != 1) return false;
        return true;
    }
};

/// Outcome of post-selecting a state evolved through a network.
///
/// logical_state maps qubit bit strings (character q = qubit q in rail-map
/// order, photon in rail "1" means '1') to renormalized amplitudes, with the
/// overall phase canonicalized so the first nonzero amplitude in key order is
/// real positive — making the result independent of the input's global phase.
/// raw_state keeps the accepted terms with their physical (attenuated,
/// unrotated) amplitudes.
struct PostselectedResult {
    double success_probability = 0.0;
    std::map<std::string, Complex> logical_state;
    PhotonicState raw_state;

    /// Empty-result marker: nothing survived the detection pattern.
    bool empty() const { return success_probability == 0.0; }
};

inline PostselectedResult postselect(const PhotonicState& state, const CouplerNetwork& net) {
    if (state.mode_count != net.mode_count)
        throw std::invalid_argument("state mode count does not match network");
    if (state.photon_number != net.qubit_count())
        throw std::invalid_argument("postselection requires one photon per qubit");

    const PostselectionPattern pattern = PostselectionPattern::for_network(net);
    PostselectedResult result;
    result.raw_state.mode_count = state.mode_count;
    result.raw_state.photon_number = state.photon_number;

    double kept = 0.0;
    for (const auto& [occ, amp] : state.amplitudes) {
        if (!pattern.accepts(occ)) continue;
        result.raw_state.amplitudes[occ] = amp;
        kept += std::norm(amp);
        std::string bits;
        bits.reserve(pattern.rail_pairs.size());
        for (const auto& [r0, r1] : pattern.rail_pairs) bits += occ.counts[r1] ? '1' : '0';
        result.logical_state[bits] += amp;
    }
    result.success_probability = kept;
    if (kept == 0.0) {
        result.logical_state.clear();
        return result;  // explicit empty result, no renormalization attempted
    }

    const double scale = 1.0 / std::sqrt(kept);
    Complex phase(1.0, 0.0);
    for (const auto& [bits, amp] : result.logical_state) {
        if (std::abs(amp) > 0.0) {
            phase = std::conj(amp) / std::abs(amp);
            break;
        }
    }
    for (auto& [bits, amp] : result.logical_state) amp *= scale * phase;
    return result;
}

}  // namespace shorchip
