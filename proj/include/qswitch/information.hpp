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

// Entropies (in bits), key information released by the controller, the
// dense-coding signal ensemble and its Holevo quantity.

#ifndef QSWITCH_INFORMATION_HPP
#define QSWITCH_INFORMATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/states.hpp"

namespace qswitch {

/// -sum p log2 p, with 0 log 0 = 0. Throws NotADistributionError for negative
/// entries or a total further than 1e-9 from one.
inline double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    for (const double x : p) {
        if (!(x >= 0.0)) {
            throw NotADistributionError("probability " + std::to_string(x) + " is negative or NaN");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw NotADistributionError("probabilities sum to " + std::to_string(total));
    }
    double h = 0.0;
    for (const double x : p) {
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

inline double shannon_entropy(std::initializer_list<double> p) {
    return shannon_entropy(std::span<const double>(p.begin(), p.size()));
}

/// Eigenvalues in [-1e-10, 0) are clamped to zero before taking logs.
template <std::size_t N>
double von_neumann_entropy(const DensityMatrix<N> &rho) {
    auto eig = hermitian_eigenvalues(rho.matrix());
    double h = 0.0;
    for (double &x : eig) {
        if (x < -DensityMatrix<N>::kTolerance) {
            throw InvalidStateError("negative eigenvalue " + std::to_string(x) + " in entropy");
        }
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

inline constexpr double kMaxKeyInformation = 2.0;

/// Bits of key information c in [0, 2].
struct KeyInfo {
    double c = 0.0;
};

/// c = 2 - H(w_a, w_b, w_b, w_b).
inline KeyInfo key_information(const WernerParam &param) {
    const double wb = param.weight_b();
    const std::array<double, 4> w{param.weight_a(), wb, wb, wb};
    const double c = kMaxKeyInformation - shannon_entropy(w);
    return {std::clamp(c, 0.0, kMaxKeyInformation)};
}

/// Werner angle that releases `c` bits of key information. c is strictly
/// increasing in psi, so this bisects; the endpoints are exact.
inline WernerParam werner_param_for_key(double c) {
    if (!(c >= 0.0 && c <= kMaxKeyInformation)) {
        throw DomainError("key information must lie in [0, 2], got " + std::to_string(c));
    }
    constexpr double kHalfPi = std::numbers::pi / 2;
    if (c == 0.0) {
        return WernerParam(0.0);
    }
    if (c == kMaxKeyInformation) {
        return WernerParam(kHalfPi);
    }
    double lo = 0.0;
    double hi = kHalfPi;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (key_information(WernerParam(mid)).c < c ? lo : hi) = mid;
    }
    return WernerParam(0.5 * (lo + hi));
}

/// Weighted set of states {(p_i, rho_i)}.
template <std::size_t N>
class Ensemble {
   public:
    struct Member {
        double prior;
        DensityMatrix<N> state;
    };

    explicit Ensemble(std::vector<Member> members) : members_(std::move(members)) {
        if (members_.empty()) {
            throw NotADistributionError("ensemble must have at least one member");
        }
        double total = 0.0;
        for (const auto &m : members_) {
            if (!(m.prior >= 0.0)) {
                throw NotADistributionError("ensemble prior " + std::to_string(m.prior) + " is negative");
            }
            total += m.prior;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw NotADistributionError("ensemble priors sum to " + std::to_string(total));
        }
    }

    const std::vector<Member> &members() const { return members_; }

    DensityMatrix<N> average() const {
        Matrix<N> avg;
        for (const auto &m : members_) {
            avg += m.state.matrix() * m.prior;
        }
        return DensityMatrix<N>::trusted(avg);
    }

   private:
    std::vector<Member> members_;
};

using TwoQubitEnsemble = Ensemble<4>;

/// Bob's ensemble: Alice's four messages with uniform priors, each encoded on
/// the Werner state and (optionally) sent through the channel on her qubit.
/// Member order follows kAllPauliCodes.
inline TwoQubitEnsemble signal_ensemble(const WernerParam &param, const std::optional<KrausSet> &channel,
                                        BellIndex center = {0, 0}) {
    if (channel) {
        require_complete(*channel);
    }
    const TwoQubitState shared = werner_state(param, center);
    std::vector<TwoQubitEnsemble::Member> members;
    members.reserve(4);
    for (const PauliCode code : kAllPauliCodes) {
        TwoQubitState s = dense_encode(shared, code);
        if (channel) {
            s = apply_channel(s, *channel, Subsystem::first);
        }
        members.push_back({0.25, s});
    }
    return TwoQubitEnsemble(std::move(members));
}

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i), clamped at zero.
template <std::size_t N>
double holevo(const Ensemble<N> &e) {
    double mean_entropy = 0.0;
    for (const auto &m : e.members()) {
        mean_entropy += m.prior * von_neumann_entropy(m.state);
    }
    return std::max(0.0, von_neumann_entropy(e.average()) - mean_entropy);
}

/// Mutual information (bits) between the member label and the outcome of a
/// Bell-basis measurement. This is what Bob's actual measurement achieves;
/// it never exceeds the Holevo quantity.
inline double bell_mutual_information(const TwoQubitEnsemble &e) {
    std::array<double, 4> marginal{};
    double conditional = 0.0;
    for (const auto &m : e.members()) {
        const BellDistribution d = bell_measure(m.state);
        std::array<double, 4> p{};
        for (unsigned o = 0; o < 4; ++o) {
            p[o] = std::max(0.0, d.p[o]);
        }
        for (unsigned o = 0; o < 4; ++o) {
            marginal[o] += m.prior * p[o];
        }
        conditional += m.prior * shannon_entropy(p);
    }
    return std::max(0.0, shannon_entropy(marginal) - conditional);
}

}  // namespace qswitch

#endif  // QSWITCH_INFORMATION_HPP
