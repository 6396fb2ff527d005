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

// Bath-to-SGAD parameter providers.
//
// The shipped provider models a qubit of frequency omega coupled to a
// squeezed thermal bath in the Born-Markov and rotating-wave approximations:
//
//   d rho/dt = g0 (N+1) D[s-] rho + g0 N D[s+] rho - g0 M s+ rho s+ - g0 M* s- rho s-
//
//   N_th = 1 / (exp(omega / T) - 1)
//   N    = N_th (cosh^2 r + sinh^2 r) + sinh^2 r
//   M    = -1/2 sinh(2r) (2 N_th + 1) e^{i Phi}
//
// with s- = |g><e|. Its solution is the DampingMap below. That map is then
// written in the four-operator SGAD form; the operator set is not unique,
// and the provider returns the decomposition with the largest p1.

#ifndef QSWITCH_SGAD_PROVIDER_HPP
#define QSWITCH_SGAD_PROVIDER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

/// Bath seen by Alice's qubit in transit. Natural units (hbar = k_B = 1).
struct BathConfig {
    double r = 0.0;       ///< bath squeezing parameter
    double T = 0.0;       ///< temperature, >= 0
    double t = 0.0;       ///< evolution time, >= 0
    double gamma0 = 1.0;  ///< spontaneous decay rate, > 0
};

/// Single-qubit map in the (excited, ground) basis:
///   rho_ee' = (1 - loss) rho_ee + gain rho_gg
///   rho_eg' = coherence rho_eg + cross rho_ge
struct DampingMap {
    double loss = 0.0;
    double gain = 0.0;
    double coherence = 1.0;
    Complex cross = 0.0;

    Matrix2 apply(const Matrix2 &rho) const {
        const Complex ee = (1.0 - loss) * rho(0, 0) + gain * rho(1, 1);
        const Complex eg = coherence * rho(0, 1) + cross * rho(1, 0);
        const Complex ge = coherence * rho(1, 0) + std::conj(cross) * rho(0, 1);
        const Complex gg = loss * rho(0, 0) + (1.0 - gain) * rho(1, 1);
        return Matrix2{{ee, eg}, {ge, gg}};
    }
};

/// Maps a bath configuration to SGAD operator parameters. Implementations
/// must be stateless.
class SgadParameterProvider {
   public:
    virtual ~SgadParameterProvider() = default;
    virtual SGADParams params(const BathConfig &cfg) const = 0;
};

inline SGADParams sgad_params_from_bath(const BathConfig &cfg, const SgadParameterProvider &provider) {
    return provider.params(cfg);
}

namespace detail {

/// Principal square root of a 2x2 Hermitian PSD matrix:
/// sqrt(M) = (M + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
inline Matrix2 psd_sqrt2(const Matrix2 &m) {
    const double det = std::max(0.0, (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real());
    const double sdet = std::sqrt(det);
    const double denom = m.trace().real() + 2.0 * sdet;
    if (denom <= 0.0) {
        return Matrix2{};
    }
    return (m + Matrix2::identity() * sdet) * (1.0 / std::sqrt(denom));
}

struct Eigen2 {
    std::array<double, 2> values;          // ascending
    std::array<std::array<Complex, 2>, 2> vectors;  // vectors[i] belongs to values[i]
};

inline Eigen2 hermitian_eigensystem2(const Matrix2 &h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const Complex b = h(0, 1);
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    Eigen2 out;
    out.values = {mean - radius, mean + radius};
    if (std::abs(b) <= 1e-300) {
        if (a <= d) {
            out.vectors = {{{1.0, 0.0}, {0.0, 1.0}}};
        } else {
            out.vectors = {{{0.0, 1.0}, {1.0, 0.0}}};
        }
        return out;
    }
    for (int i = 0; i < 2; ++i) {
        // (H - lambda) v = 0 with v = (b, lambda - a), or (lambda - d, conj b).
        const double lambda = out.values[i];
        std::array<Complex, 2> v1{b, lambda - a};
        std::array<Complex, 2> v2{lambda - d, std::conj(b)};
        auto norm = [](const std::array<Complex, 2> &v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); };
        auto &v = norm(v1) >= norm(v2) ? v1 : v2;
        const double n = norm(v);
        out.vectors[i] = {v[0] / n, v[1] / n};
    }
    return out;
}

inline std::array<Complex, 2> mul(const Matrix2 &m, const std::array<Complex, 2> &v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

inline double norm2(const std::array<Complex, 2> &v) { return std::norm(v[0]) + std::norm(v[1]); }

/// One SGAD operator pair: diagonal (d0, d1) and off-diagonal (lower f10, upper f01).
struct KrausPair {
    std::array<double, 2> diag{};
    std::array<Complex, 2> off{};
    double weight() const { return 0.5 * (diag[0] * diag[0] + diag[1] * diag[1] + norm2(off)); }
};

struct PairCandidate {
    KrausPair first;
    KrausPair second;
};

}  // namespace detail

/// Writes a DampingMap as SGAD parameters.
///
/// The map's Choi matrix splits into a diagonal block C_D = [[1-loss, coh],
/// [coh, 1-gain]] and an off-diagonal block C_F = [[loss, conj(cross)],
/// [cross, gain]]. Each operator pair takes one column of C_D^{1/2} O and
/// one of C_F^{1/2} U for rotations O, U; the SGAD form additionally needs
/// d0^2 + |f10|^2 = d1^2 + |f01|^2 within a pair and a sign-definite
/// diagonal. The rotation angle of O is scanned (plus the C_D eigen- and
/// sign-boundary directions), U is solved in closed form, and the candidate
/// with the largest p1 wins. Throws ProviderDomainError if none exists.
inline SGADParams sgad_params_from_map(const DampingMap &map) {
    using detail::KrausPair;
    const Matrix2 cd{{1.0 - map.loss, map.coherence}, {map.coherence, 1.0 - map.gain}};
    const Matrix2 cf{{map.loss, std::conj(map.cross)}, {map.cross, map.gain}};
    const Matrix2 rd = detail::psd_sqrt2(cd);
    const Matrix2 rf = detail::psd_sqrt2(cf);
    const Matrix2 z{{1, 0}, {0, -1}};
    const auto sf = detail::hermitian_eigensystem2(rf.adjoint() * z * rf);
    const double lo = sf.values[0];
    const double hi = sf.values[1];
    constexpr double kTol = 1e-12;

    std::optional<detail::PairCandidate> best;
    double best_p1 = -1.0;

    auto consider = [&](double omega) {
        const std::array<Complex, 2> o{std::cos(omega), std::sin(omega)};
        const std::array<Complex, 2> o_perp{-std::sin(omega), std::cos(omega)};
        const auto v1 = detail::mul(rd, o);
        const auto v2 = detail::mul(rd, o_perp);
        for (const auto &v : {v1, v2}) {
            if (v[0].real() * v[1].real() < -kTol) {
                return;
            }
        }
        // Pair condition for the first pair: <v1|Z|v1> + <w1|Z|w1> = 0.
        const double target = -(std::norm(v1[0]) - std::norm(v1[1]));
        if (target < lo - kTol || target > hi + kTol) {
            return;
        }
        const double s2 = hi - lo > 1e-15 ? std::clamp((target - lo) / (hi - lo), 0.0, 1.0) : 0.0;
        const double ct = std::sqrt(1.0 - s2);
        const double st = std::sqrt(s2);
        for (const double sign : {1.0, -1.0}) {
            const std::array<Complex, 2> u{ct * sf.vectors[0][0] + sign * st * sf.vectors[1][0],
                                           ct * sf.vectors[0][1] + sign * st * sf.vectors[1][1]};
            const std::array<Complex, 2> u_perp{-sign * st * sf.vectors[0][0] + ct * sf.vectors[1][0],
                                                -sign * st * sf.vectors[0][1] + ct * sf.vectors[1][1]};
            detail::PairCandidate cand;
            cand.first.diag = {std::abs(v1[0].real()), std::abs(v1[1].real())};
            cand.second.diag = {std::abs(v2[0].real()), std::abs(v2[1].real())};
            cand.first.off = detail::mul(rf, u);
            cand.second.off = detail::mul(rf, u_perp);
            if (cand.second.weight() > cand.first.weight()) {
                std::swap(cand.first, cand.second);
            }
            const double p1 = cand.first.weight();
            if (p1 > best_p1 + 1e-15) {
                best_p1 = p1;
                best = cand;
            }
        }
    };

    constexpr int kGrid = 2048;
    constexpr double kQuarter = std::numbers::pi / 2;
    for (int i = 0; i <= kGrid; ++i) {
        consider(kQuarter * i / kGrid);
    }
    auto consider_direction = [&](double x, double y) {
        if (x == 0.0 && y == 0.0) {
            return;
        }
        double angle = std::atan2(y, x);
        // o and -o describe the same decomposition; fold into [0, pi/2].
        while (angle < 0.0) {
            angle += std::numbers::pi / 2;
        }
        while (angle > kQuarter) {
            angle -= std::numbers::pi / 2;
        }
        consider(angle);
    };
    const auto cd_eig = detail::hermitian_eigensystem2(cd);
    for (const auto &v : cd_eig.vectors) {
        consider_direction(v[0].real(), v[1].real());
    }
    // Directions where a component of C_D^{1/2} o_perp vanishes.
    consider_direction(rd(0, 0).real(), rd(0, 1).real());
    consider_direction(rd(0, 1).real(), rd(1, 1).real());

    if (!best) {
        throw ProviderDomainError("damping map has no SGAD operator decomposition");
    }

    // Rotate each off-diagonal pair so the upper entry (f01) is real and
    // non-negative; the lower entry then carries the phase e^{-i phi}.
    auto phase_of = [](std::array<Complex, 2> &off) {
        double rot = 0.0;
        if (std::abs(off[1]) > 0.0) {
            rot = -std::arg(off[1]);
        } else if (std::abs(off[0]) > 0.0) {
            rot = -std::arg(off[0]);
        }
        const Complex ph = std::polar(1.0, rot);
        off = {off[0] * ph, off[1] * ph};
        return std::abs(off[0]) > 0.0 ? -std::arg(off[0]) : 0.0;
    };

    SGADParams p;
    p.phi = phase_of(best->first.off);
    p.theta = phase_of(best->second.off);
    p.p1 = std::clamp(best->first.weight(), 0.0, 1.0);
    p.p2 = 1.0 - p.p1;
    auto ratio = [](double num, double den) { return den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0; };
    p.alpha = ratio(std::norm(best->first.off[0]), p.p1);
    p.beta = ratio(std::norm(best->first.off[1]), p.p1);
    p.mu = ratio(std::norm(best->second.off[0]), p.p2);
    p.nu = ratio(std::norm(best->second.off[1]), p.p2);
    if (p.p2 == 0.0) {
        p.theta = p.phi;
    }
    return p;
}

/// Provider for a squeezed thermal bath (see the file comment).
class SqueezedBathProvider final : public SgadParameterProvider {
   public:
    struct Options {
        double omega = 1.0;          ///< qubit transition frequency
        double squeeze_phase = 0.0;  ///< bath squeezing angle Phi
    };

    /// |r| above this overflows nothing yet but is far outside any
    /// physically meaningful squeezing; reject it.
    static constexpr double kMaxSqueezing = 10.0;

    SqueezedBathProvider() = default;
    explicit SqueezedBathProvider(Options opts) : opts_(opts) {
        if (!(opts_.omega > 0.0) || !std::isfinite(opts_.omega) || !std::isfinite(opts_.squeeze_phase)) {
            throw DomainError("squeezed bath provider needs omega > 0 and a finite squeezing phase");
        }
    }

    const Options &options() const { return opts_; }

    void check_domain(const BathConfig &cfg) const {
        if (!std::isfinite(cfg.r) || std::abs(cfg.r) > kMaxSqueezing) {
            throw ProviderDomainError("squeezing r must be finite with |r| <= 10, got " + std::to_string(cfg.r));
        }
        if (!(cfg.T >= 0.0) || !std::isfinite(cfg.T)) {
            throw ProviderDomainError("temperature must be finite and >= 0, got " + std::to_string(cfg.T));
        }
        if (!(cfg.t >= 0.0) || !std::isfinite(cfg.t)) {
            throw ProviderDomainError("time must be finite and >= 0, got " + std::to_string(cfg.t));
        }
        if (!(cfg.gamma0 > 0.0) || !std::isfinite(cfg.gamma0)) {
            throw ProviderDomainError("gamma0 must be finite and > 0, got " + std::to_string(cfg.gamma0));
        }
    }

    double thermal_occupation(double T) const { return T == 0.0 ? 0.0 : 1.0 / std::expm1(opts_.omega / T); }

    /// Effective occupation N of the squeezed bath.
    double occupation(const BathConfig &cfg) const {
        const double nth = thermal_occupation(cfg.T);
        const double sh = std::sinh(cfg.r);
        return nth * std::cosh(2.0 * cfg.r) + sh * sh;
    }

    /// Squeezing correlation M.
    Complex correlation(const BathConfig &cfg) const {
        const double nth = thermal_occupation(cfg.T);
        return -0.5 * std::sinh(2.0 * cfg.r) * (2.0 * nth + 1.0) * std::polar(1.0, opts_.squeeze_phase);
    }

    /// Closed-form solution of the master equation after time t.
    DampingMap damping_map(const BathConfig &cfg) const {
        check_domain(cfg);
        const double n = occupation(cfg);
        const Complex m = correlation(cfg);
        const double m_abs = std::abs(m);
        const double rate = cfg.gamma0 * (2.0 * n + 1.0);
        const double relaxed = -std::expm1(-rate * cfg.t);
        // Coherences: one quadrature decays at rate/2 - g0|M|, the other at
        // rate/2 + g0|M|.
        const double slow = std::exp(-(rate - 2.0 * cfg.gamma0 * m_abs) * cfg.t / 2.0);
        const double fast = std::exp(-(rate + 2.0 * cfg.gamma0 * m_abs) * cfg.t / 2.0);
        DampingMap map;
        map.loss = (n + 1.0) / (2.0 * n + 1.0) * relaxed;
        map.gain = n / (2.0 * n + 1.0) * relaxed;
        map.coherence = 0.5 * (slow + fast);
        map.cross = m_abs > 0.0 ? -(m / m_abs) * (0.5 * (slow - fast)) : Complex{};
        if (!std::isfinite(map.loss) || !std::isfinite(map.gain) || !std::isfinite(map.coherence)) {
            throw ProviderDomainError("bath configuration overflows the damping map");
        }
        return map;
    }

    SGADParams params(const BathConfig &cfg) const override { return sgad_params_from_map(damping_map(cfg)); }

   private:
    Options opts_{};
};

}  // namespace qswitch

#endif  // QSWITCH_SGAD_PROVIDER_HPP
