// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bell states, Pauli encodings, Werner-family states and Bell-basis
// measurement. Basis order is |00>, |01>, |10>, |11> with Alice's qubit as
// the leading tensor factor.

#ifndef QSWITCH_STATES_HPP
#define QSWITCH_STATES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/rng.hpp"

namespace qswitch {

/// Bell state label: j is the parity bit, k the phase bit.
///   (0,0) = Phi+   (0,1) = Phi-   (1,0) = Psi+   (1,1) = Psi-
struct BellIndex {
    std::uint8_t j = 0;
    std::uint8_t k = 0;

    constexpr BellIndex() = default;
    constexpr BellIndex(unsigned parity, unsigned phase)
        : j(static_cast<std::uint8_t>(parity & 1U)), k(static_cast<std::uint8_t>(phase & 1U)) {}

    /// 2*j + k, in [0, 4).
    constexpr unsigned ordinal() const { return 2U * j + k; }
    static constexpr BellIndex from_ordinal(unsigned o) { return {(o >> 1) & 1U, o & 1U}; }

    friend constexpr bool operator==(BellIndex, BellIndex) = default;
};

/// Alice's two-bit dense-coding message. (a,b) = (0,0),(0,1),(1,0),(1,1)
/// selects I, Z, X, Y.
struct PauliCode {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    constexpr PauliCode() = default;
    constexpr PauliCode(unsigned a_bit, unsigned b_bit)
        : a(static_cast<std::uint8_t>(a_bit & 1U)), b(static_cast<std::uint8_t>(b_bit & 1U)) {}

    constexpr unsigned ordinal() const { return 2U * a + b; }
    static constexpr PauliCode from_ordinal(unsigned o) { return {(o >> 1) & 1U, o & 1U}; }

    friend constexpr bool operator==(PauliCode, PauliCode) = default;
};

inline constexpr std::array<BellIndex, 4> kAllBellIndices{BellIndex{0, 0}, BellIndex{0, 1}, BellIndex{1, 0},
                                                          BellIndex{1, 1}};
inline constexpr std::array<PauliCode, 4> kAllPauliCodes{PauliCode{0, 0}, PauliCode{0, 1}, PauliCode{1, 0},
                                                         PauliCode{1, 1}};

inline std::string to_string(BellIndex idx) { return {char('0' + idx.j), char('0' + idx.k)}; }
inline std::string to_string(PauliCode code) { return {char('0' + code.a), char('0' + code.b)}; }

/// Angle psi in [0, pi/2] selecting a Werner-family state with Bell weights
/// (w_a, w_b, w_b, w_b).
class WernerParam {
   public:
    explicit WernerParam(double psi) : psi_(psi) {
        if (!(psi >= 0.0 && psi <= std::numbers::pi / 2)) {
            throw DomainError("Werner angle psi must lie in [0, pi/2], got " + std::to_string(psi));
        }
        weight_a_ = 0.25 + 0.75 * std::sin(psi);
        weight_b_ = (1.0 - weight_a_) / 3.0;
    }

    double psi() const { return psi_; }
    /// Weight of the centre Bell state, in [0.25, 1].
    double weight_a() const { return weight_a_; }
    /// Weight of each of the other three Bell states.
    double weight_b() const { return weight_b_; }

   private:
    double psi_;
    double weight_a_;
    double weight_b_;
};

/// Single-qubit Pauli for a dense-coding message.
inline Matrix2 pauli_matrix(PauliCode code) {
    using namespace std::complex_literals;
    switch (code.ordinal()) {
        case 0:
            return Matrix2::identity();
        case 1:
            return Matrix2{{1, 0}, {0, -1}};
        case 2:
            return Matrix2{{0, 1}, {1, 0}};
        default:
            return Matrix2{{0, -1i}, {1i, 0}};
    }
}

/// Amplitude vector of the Bell state B_{j,k}.
inline std::array<Complex, 4> bell_vector(BellIndex idx) {
    const double h = std::numbers::sqrt2 / 2;
    const double sign = idx.k ? -1.0 : 1.0;
    if (idx.j == 0) {
        return {h, 0, 0, sign * h};
    }
    return {0, h, sign * h, 0};
}

/// Rank-one projector onto B_{j,k}.
inline TwoQubitState bell_projector(BellIndex idx) {
    // Entries are exactly +-0.5 or 0; build them directly instead of via
    // outer(bell_vector) to keep them bit-exact.
    Matrix4 m;
    const double sign = idx.k ? -0.5 : 0.5;
    const std::size_t lo = idx.j == 0 ? 0 : 1;
    const std::size_t hi = idx.j == 0 ? 3 : 2;
    m(lo, lo) = 0.5;
    m(hi, hi) = 0.5;
    m(lo, hi) = sign;
    m(hi, lo) = sign;
    return TwoQubitState::trusted(m);
}

/// Applies Alice's Pauli to her (first) qubit: (P (x) I) rho (P (x) I)^dagger.
inline TwoQubitState dense_encode(const TwoQubitState &rho, PauliCode code) {
    const Matrix4 u = embed(pauli_matrix(code), Subsystem::first);
    return TwoQubitState::trusted(u * rho.matrix() * u.adjoint());
}

/// Bell-diagonal state w_a Pi_center + w_b sum_{others} Pi.
inline TwoQubitState werner_state(const WernerParam &param, BellIndex center = {0, 0}) {
    Matrix4 m;
    for (const BellIndex idx : kAllBellIndices) {
        const double w = idx == center ? param.weight_a() : param.weight_b();
        m += bell_projector(idx).matrix() * w;
    }
    return TwoQubitState::trusted(m);
}

/// Outcome distribution of a Bell-basis measurement, indexed by BellIndex::ordinal().
struct BellDistribution {
    std::array<double, 4> p{};

    double operator[](BellIndex idx) const { return p[idx.ordinal()]; }

    BellIndex most_likely() const {
        unsigned best = 0;
        for (unsigned o = 1; o < 4; ++o) {
            if (p[o] > p[best]) {
                best = o;
            }
        }
        return BellIndex::from_ordinal(best);
    }
};

/// p(j,k) = tr(Pi_{j,k} rho).
inline BellDistribution bell_measure(const TwoQubitState &rho) {
    BellDistribution d;
    const Matrix4 &m = rho.matrix();
    // <B|rho|B> for each Bell vector.
    for (const BellIndex idx : kAllBellIndices) {
        const auto v = bell_vector(idx);
        Complex acc = 0.0;
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                acc += std::conj(v[r]) * m(r, c) * v[c];
            }
        }
        d.p[idx.ordinal()] = acc.real();
    }
    return d;
}

/// Draws a Bell outcome by inverse CDF. Tiny negative probabilities from
/// rounding count as zero.
inline BellIndex sample_bell_outcome(const BellDistribution &dist, Rng &rng) {
    std::array<double, 4> w{};
    double total = 0.0;
    for (unsigned o = 0; o < 4; ++o) {
        w[o] = std::max(0.0, dist.p[o]);
        total += w[o];
    }
    const double u = uniform_unit(rng) * total;
    double acc = 0.0;
    unsigned last_positive = 0;
    for (unsigned o = 0; o < 4; ++o) {
        if (w[o] <= 0.0) {
            continue;
        }
        last_positive = o;
        acc += w[o];
        if (u < acc) {
            return BellIndex::from_ordinal(o);
        }
    }
    return BellIndex::from_ordinal(last_positive);
}

/// Inverse of the dense-coding map B_{j,k} -> B_{j^a, k^b}.
constexpr PauliCode decode_message(BellIndex measured, BellIndex revealed_initial) {
    return {static_cast<unsigned>(measured.j ^ revealed_initial.j),
            static_cast<unsigned>(measured.k ^ revealed_initial.k)};
}

/// Forward map on labels: the Bell state Alice's encoding produces.
constexpr BellIndex encoded_index(BellIndex initial, PauliCode code) {
    return {static_cast<unsigned>(initial.j ^ code.a), static_cast<unsigned>(initial.k ^ code.b)};
}

}  // namespace qswitch

#endif  // QSWITCH_STATES_HPP
