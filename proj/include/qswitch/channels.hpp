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

// Kraus-operator channels on one qubit, and the squeezed generalized
// amplitude damping (SGAD) operator set.
//
// Convention for SGAD: basis vector 0 is the excited level and basis vector 1
// the ground level, so alpha is the excited -> ground transfer weight of the
// first operator pair.

#ifndef QSWITCH_CHANNELS_HPP
#define QSWITCH_CHANNELS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch {

/// Single-qubit channel rho -> sum_j E_j rho E_j^dagger.
struct KrausSet {
    std::vector<Matrix2> operators;

    static KrausSet identity() { return KrausSet{{Matrix2::identity()}}; }
};

/// Completeness residual ||sum_j E_j^dagger E_j - I||_max.
inline double verify_completeness(const KrausSet &ks) {
    Matrix2 sum;
    for (const auto &e : ks.operators) {
        sum += e.adjoint() * e;
    }
    return max_abs_diff(sum, Matrix2::identity());
}

inline Matrix2 completeness_matrix(const KrausSet &ks) {
    Matrix2 sum;
    for (const auto &e : ks.operators) {
        sum += e.adjoint() * e;
    }
    return sum;
}

/// Thrown when a Kraus set is not trace preserving. Carries sum E^dagger E.
class CompletenessViolation : public Error {
   public:
    CompletenessViolation(const Matrix2 &sum, double residual)
        : Error("Kraus completeness violated: residual " + std::to_string(residual) + ", sum E^dagger E =\n" +
                sum.to_string()),
          sum_(sum),
          residual_(residual) {}

    const Matrix2 &sum() const { return sum_; }
    double residual() const { return residual_; }

   private:
    Matrix2 sum_;
    double residual_;
};

inline constexpr double kCompletenessTolerance = 1e-9;

inline void require_complete(const KrausSet &ks, double tol = kCompletenessTolerance) {
    const double residual = verify_completeness(ks);
    if (!(residual <= tol)) {
        throw CompletenessViolation(completeness_matrix(ks), residual);
    }
}

/// Raw Kraus sum on one factor of a two-qubit operator. No checks.
inline Matrix4 apply_kraus(const Matrix4 &rho, const KrausSet &ks, Subsystem target) {
    Matrix4 out;
    for (const auto &e : ks.operators) {
        const Matrix4 lifted = embed(e, target);
        out += lifted * rho * lifted.adjoint();
    }
    return out;
}

inline Matrix2 apply_kraus(const Matrix2 &rho, const KrausSet &ks) {
    Matrix2 out;
    for (const auto &e : ks.operators) {
        out += e * rho * e.adjoint();
    }
    return out;
}

/// Applies the channel to one qubit of a two-qubit state. Throws
/// CompletenessViolation instead of renormalizing when the set is not
/// trace preserving.
inline TwoQubitState apply_channel(const TwoQubitState &rho, const KrausSet &ks, Subsystem target) {
    require_complete(ks);
    return TwoQubitState::trusted(apply_kraus(rho.matrix(), ks, target));
}

inline QubitState apply_channel(const QubitState &rho, const KrausSet &ks) {
    require_complete(ks);
    return QubitState::trusted(apply_kraus(rho.matrix(), ks));
}

/// Kraus set of `second` after `first`: {F_j E_i}.
inline KrausSet compose(const KrausSet &first, const KrausSet &second) {
    KrausSet out;
    out.operators.reserve(first.operators.size() * second.operators.size());
    for (const auto &f : second.operators) {
        for (const auto &e : first.operators) {
            out.operators.push_back(f * e);
        }
    }
    return out;
}

/// Stable 64-bit FNV-1a digest of the operator entries, printed at 17
/// significant digits so the value is platform independent.
inline std::string digest(const KrausSet &ks) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const char *s) {
        for (; *s; ++s) {
            h ^= static_cast<unsigned char>(*s);
            h *= 1099511628211ULL;
        }
    };
    char buf[64];
    for (const auto &e : ks.operators) {
        for (const auto &v : e.entries()) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g;", v.real(), v.imag());
            mix(buf);
        }
        mix("|");
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Parameters of the four SGAD Kraus operators.
///
/// E0 = sqrt(p1) diag(sqrt(1-alpha), sqrt(1-beta))
/// E1 = sqrt(p1) [[0, sqrt(beta)], [sqrt(alpha) e^{-i phi}, 0]]
/// E2 = sqrt(p2) diag(sqrt(1-mu), sqrt(1-nu))
/// E3 = sqrt(p2) [[0, sqrt(nu)], [sqrt(mu) e^{-i theta}, 0]]
///
/// The set is trace preserving iff p1 + p2 = 1.
struct SGADParams {
    double p1 = 1.0;
    double p2 = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double phi = 0.0;
    double theta = 0.0;
};

namespace detail {
inline bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }
}  // namespace detail

/// The four operators exactly as parametrized, without any checks. Useful
/// for diagnosing inconsistent parameter sets via verify_completeness.
inline KrausSet build_sgad_operators(const SGADParams &p) {
    using std::sqrt;
    const double s1 = sqrt(std::max(0.0, p.p1));
    const double s2 = sqrt(std::max(0.0, p.p2));
    const Complex phase_phi = std::polar(1.0, -p.phi);
    const Complex phase_theta = std::polar(1.0, -p.theta);
    KrausSet ks;
    ks.operators.push_back(Matrix2{{s1 * sqrt(1 - p.alpha), 0}, {0, s1 * sqrt(1 - p.beta)}});
    ks.operators.push_back(Matrix2{{0, s1 * sqrt(p.beta)}, {s1 * sqrt(p.alpha) * phase_phi, 0}});
    ks.operators.push_back(Matrix2{{s2 * sqrt(1 - p.mu), 0}, {0, s2 * sqrt(1 - p.nu)}});
    ks.operators.push_back(Matrix2{{0, s2 * sqrt(p.nu)}, {s2 * sqrt(p.mu) * phase_theta, 0}});
    return ks;
}

/// Validated SGAD Kraus set.
///
/// Throws DomainError when a probability or damping weight is outside
/// [0, 1] or an angle is not finite, and CompletenessViolation when the
/// operators are not trace preserving within 1e-9 (i.e. p1 + p2 != 1).
inline KrausSet sgad_kraus(const SGADParams &p) {
    const std::pair<const char *, double> unit_params[] = {{"p1", p.p1},       {"p2", p.p2}, {"alpha", p.alpha},
                                                           {"beta", p.beta}, {"mu", p.mu}, {"nu", p.nu}};
    for (const auto &[name, value] : unit_params) {
        if (!detail::in_unit_interval(value)) {
            throw DomainError(std::string("SGAD parameter ") + name + " must lie in [0, 1], got " +
                              std::to_string(value));
        }
    }
    if (!std::isfinite(p.phi) || !std::isfinite(p.theta)) {
        throw DomainError("SGAD phases must be finite");
    }
    KrausSet ks = build_sgad_operators(p);
    require_complete(ks);
    return ks;
}

}  // namespace qswitch

#endif  // QSWITCH_CHANNELS_HPP
