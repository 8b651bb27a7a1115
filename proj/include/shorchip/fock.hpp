#pragma once

// Exact bosonic Fock-space representation and evolution of photons through
// an M-mode linear-optical unitary.
//
// Conventions used throughout:
//   - A mode unitary U is the single-photon transfer matrix: a photon entering
//     mode j leaves in the superposition given by column j, i.e. creation
//     operators map as  a_j^dag  ->  sum_i U(i,j) a_i^dag.
//   - The amplitude to go from occupation S to occupation T is
//       Per(U[T|S]) / sqrt(prod_i T_i! * prod_j S_j!)
//     where U[T|S] repeats row i of U T_i times and column j S_j times.

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shorchip {

using Complex = std::complex<double>;

/// Photon count per waveguide mode; the Fock basis label.
struct OccupationVector {
    std::vector<int> counts;

    int modes() const { return static_cast<int>(counts.size()); }

    int total() const {
        int n = 0;
        for (int c : counts) n += c;
        return n;
    }

    // Lexicographic order; this is the order used everywhere a deterministic
    // traversal matters (sparse maps, serialization).
    auto operator<=>(const OccupationVector&) const = default;
};

inline std::string to_string(const OccupationVector& occ) {
    std::string s;
    for (std::size_t i = 0; i < occ.counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(occ.counts[i]);
    }
    return s;
}

/// Sparse superposition over fixed-photon-number occupation vectors.
struct PhotonicState {
    int mode_count = 0;
    int photon_number = 0;
    std::map<OccupationVector, Complex> amplitudes;

    static PhotonicState basis_state(const OccupationVector& occ) {
        PhotonicState s;
        s.mode_count = occ.modes();
        s.photon_number = occ.total();
        s.amplitudes[occ] = Complex(1.0, 0.0);
        return s;
    }

    Complex amplitude(const OccupationVector& occ) const {
        auto it = amplitudes.find(occ);
        return it == amplitudes.end() ? Complex(0.0, 0.0) : it->second;
    }

    void set_amplitude(const OccupationVector& occ, Complex amp) {
        if (occ.modes() != mode_count)
            throw std::invalid_argument("occupation vector length does not match mode count");
        if (occ.total() != photon_number)
            throw std::invalid_argument("occupation vector photon number mismatch");
        amplitudes[occ] = amp;
    }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& [occ, amp] : amplitudes) s += std::norm(amp);
        return s;
    }

    double norm() const { return std::sqrt(norm_squared()); }

    /// Drop amplitudes below `eps` in magnitude; keeps the sparse map small.
    void prune(double eps = 1e-14) {
        for (auto it = amplitudes.begin(); it != amplitudes.end();) {
            if (std::abs(it->second) < eps)
                it = amplitudes.erase(it);
            else
                ++it;
        }
    }
};

/// M x M single-photon transfer matrix of a linear-optical network.
struct ModeUnitary {
    Eigen::MatrixXcd entries;

    int modes() const { return static_cast<int>(entries.rows()); }

    static ModeUnitary identity(int mode_count) {
        return ModeUnitary{Eigen::MatrixXcd::Identity(mode_count, mode_count)};
    }
};

/// Max-norm of (U^dag U - I); zero for an exact unitary.
inline double unitarity_defect(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

constexpr std::uint64_t kDefaultBasisCap = 10'000'000;

/// C(photon_number + mode_count - 1, photon_number), the Fock sector size.
/// Throws std::overflow_error if the count exceeds `cap` (or uint64 range).
inline std::uint64_t basis_size(int mode_count, int photon_number,
                                std::uint64_t cap = kDefaultBasisCap) {
    if (mode_count < 1) throw std::invalid_argument("mode_count must be >= 1");
    if (photon_number < 0) throw std::invalid_argument("photon_number must be >= 0");
    // C(n+M-1, n) by the exact multiplicative formula.
    const std::uint64_t n = static_cast<std::uint64_t>(photon_number);
    const std::uint64_t top = n + static_cast<std::uint64_t>(mode_count) - 1;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        unsigned __int128 next = static_cast<unsigned __int128>(result) * (top - n + i);
        next /= i;  // exact: C(top-n+i, i) is an integer
        if (next > cap)
            throw std::overflow_error("Fock basis size exceeds cap (" + std::to_string(cap) + ")");
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

/// All occupation vectors of the (mode_count, photon_number) sector in
/// lexicographically decreasing order: (n,0,...,0) first, (0,...,0,n) last.
inline std::vector<OccupationVector> enumerate_basis(int mode_count, int photon_number,
                                                     std::uint64_t cap = kDefaultBasisCap) {
    const std::uint64_t count = basis_size(mode_count, photon_number, cap);
    std::vector<OccupationVector> basis;
    basis.reserve(count);

    std::vector<int> occ(mode_count, 0);
    occ[0] = photon_number;
    basis.push_back(OccupationVector{occ});
    while (occ[mode_count - 1] != photon_number) {
        // Decrement the rightmost nonzero count left of the last mode and move
        // everything to its right (plus one) into the next slot.
        int i = mode_count - 2;
        while (occ[i] == 0) --i;
        int moved = 1;
        for (int j = i + 1; j < mode_count; ++j) {
            moved += occ[j];
            occ[j] = 0;
        }
        --occ[i];
        occ[i + 1] = moved;
        basis.push_back(OccupationVector{occ});
    }
    return basis;
}

/// Permanent of a square complex matrix by Ryser's inclusion-exclusion formula
/// with Gray-code subset updates; O(2^n * n).
inline Complex permanent(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("permanent requires a square matrix");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Complex(1.0, 0.0);
    if (n > 20) throw std::invalid_argument("permanent limited to n <= 20");

    std::vector<Complex> row_sum(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint32_t prev_gray = 0;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t g = 1; g < subsets; ++g) {
        const std::uint32_t gray = g ^ (g >> 1);
        const std::uint32_t changed = gray ^ prev_gray;
        const int col = std::countr_zero(changed);
        if (gray & changed) {
            for (int i = 0; i < n; ++i) row_sum[i] += a(i, col);
        } else {
            for (int i = 0; i < n; ++i) row_sum[i] -= a(i, col);
        }
        Complex prod(1.0, 0.0);
        for (int i = 0; i < n; ++i) prod *= row_sum[i];
        const int missing = n - std::popcount(gray);
        total += (missing % 2 == 0) ? prod : -prod;
        prev_gray = gray;
    }
    return total;
}

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline double occupation_factorial(const OccupationVector& occ) {
    double f = 1.0;
    for (int c : occ.counts) f *= factorial(c);
    return f;
}

// Mode index repeated once per photon, e.g. (1,0,2) -> [0, 2, 2].
inline std::vector<int> photon_modes(const OccupationVector& occ) {
    std::vector<int> modes;
    modes.reserve(occ.total());
    for (int m = 0; m < occ.modes(); ++m)
        for (int k = 0; k < occ.counts[m]; ++k) modes.push_back(m);
    return modes;
}

}  // namespace detail

/// Evolve `state` through the network described by `u`. Photon number is
/// conserved; the output is pruned of amplitudes below 1e-14. Summation order
/// per output element is fixed (map order over sources), so results do not
/// depend on how the outer loop is scheduled.
inline PhotonicState apply_unitary(const ModeUnitary& u, const PhotonicState& state) {
    if (u.modes() != state.mode_count)
        throw std::invalid_argument("unitary dimension does not match state mode count");

    const int n = state.photon_number;
    PhotonicState out;
    out.mode_count = state.mode_count;
    out.photon_number = n;
    if (state.amplitudes.empty()) return out;

    // Cache each source's photon-mode list and normalization once.
    struct Source {
        const OccupationVector* occ;
        Complex amp;
        std::vector<int> modes;
        double factorial;
    };
    std::vector<Source> sources;
    sources.reserve(state.amplitudes.size());
    for (const auto& [occ, amp] : state.amplitudes)
        sources.push_back({&occ, amp, detail::photon_modes(occ), detail::occupation_factorial(occ)});

    Eigen::MatrixXcd sub(n, n);
    for (const OccupationVector& target : enumerate_basis(state.mode_count, n)) {
        const std::vector<int> target_modes = detail::photon_modes(target);
        const double target_fact = detail::occupation_factorial(target);
        Complex amp(0.0, 0.0);
        for (const Source& src : sources) {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) sub(r, c) = u.entries(target_modes[r], src.modes[c]);
            amp += src.amp * permanent(sub) / std::sqrt(target_fact * src.factorial);
        }
        if (amp != Complex(0.0, 0.0)) out.amplitudes[target] = amp;
    }
    out.prune();
    return out;
}

}  // namespace shorchip
