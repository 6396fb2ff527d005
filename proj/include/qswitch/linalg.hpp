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

// Small fixed-dimension complex linear algebra. Every operator and state in
// the simulator is a 2x2 (one qubit) or 4x4 (two qubits) matrix, so the
// dimension is a template parameter and mismatches are compile errors.

#ifndef QSWITCH_LINALG_HPP
#define QSWITCH_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>

#include "qswitch/errors.hpp"

namespace qswitch {

using Complex = std::complex<double>;

/// Dense row-major N x N complex matrix with value semantics.
template <std::size_t N>
class Matrix {
    static_assert(N > 0, "matrix dimension must be positive");

   public:
    static constexpr std::size_t dim = N;

    constexpr Matrix() = default;

    explicit constexpr Matrix(const std::array<Complex, N * N> &entries) : entries_(entries) {}

    /// Row-wise literal, e.g. `Matrix<2>{{0, 1}, {1, 0}}`. Missing entries are zero.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        std::size_t r = 0;
        for (const auto &row : rows) {
            if (r >= N) {
                break;
            }
            std::size_t c = 0;
            for (const auto &v : row) {
                if (c >= N) {
                    break;
                }
                (*this)(r, c++) = v;
            }
            ++r;
        }
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(const std::array<Complex, N> &d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    /// |v><v| for a (not necessarily normalized) column vector v.
    static Matrix outer(const std::array<Complex, N> &v) {
        Matrix m;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                m(r, c) = v[r] * std::conj(v[c]);
            }
        }
        return m;
    }

    constexpr Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
    constexpr const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * N + c]; }

    std::span<const Complex, N * N> entries() const { return entries_; }

    Matrix adjoint() const {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < N; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    Matrix &operator+=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            entries_[i] += o.entries_[i];
        }
        return *this;
    }

    Matrix &operator-=(const Matrix &o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            entries_[i] -= o.entries_[i];
        }
        return *this;
    }

    Matrix &operator*=(Complex s) {
        for (auto &e : entries_) {
            e *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, double s) { return a *= Complex(s); }
    friend Matrix operator*(double s, Matrix a) { return a *= Complex(s); }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix out;
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t k = 0; k < N; ++k) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < N; ++c) {
                    out(r, c) += ark * b(k, c);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

    std::string to_string() const {
        std::ostringstream os;
        os.precision(6);
        for (std::size_t r = 0; r < N; ++r) {
            os << (r == 0 ? "[" : " ");
            for (std::size_t c = 0; c < N; ++c) {
                const Complex v = (*this)(r, c);
                os << (c == 0 ? "" : ", ") << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
            }
            os << (r + 1 == N ? "]" : "\n");
        }
        return os.str();
    }

   private:
    std::array<Complex, N * N> entries_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// max_{ij} |a_ij - b_ij|
template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

template <std::size_t N>
double hermiticity_error(const Matrix<N> &m) {
    return max_abs_diff(m, m.adjoint());
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N> &a, const Matrix<N> &b) {
    return a * b - b * a;
}

/// Kronecker product; entry (i*B + k, j*B + l) = a(i, j) * b(k, l).
template <std::size_t A, std::size_t B>
Matrix<A * B> tensor_product(const Matrix<A> &a, const Matrix<B> &b) {
    Matrix<A * B> out;
    for (std::size_t i = 0; i < A; ++i) {
        for (std::size_t j = 0; j < A; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < B; ++k) {
                for (std::size_t l = 0; l < B; ++l) {
                    out(i * B + k, j * B + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

/// Which factor of a two-qubit product space. Alice's qubit is `first`.
enum class Subsystem { first, second };

/// Reduced state of the kept qubit of a 4x4 operator.
inline Matrix2 partial_trace(const Matrix4 &m, Subsystem keep) {
    Matrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t s = 0; s < 2; ++s) {
                out(r, c) += keep == Subsystem::first ? m(r * 2 + s, c * 2 + s) : m(s * 2 + r, s * 2 + c);
            }
        }
    }
    return out;
}

/// Lifts a single-qubit operator onto the chosen factor of a two-qubit space.
inline Matrix4 embed(const Matrix2 &op, Subsystem target) {
    return target == Subsystem::first ? tensor_product(op, Matrix2::identity())
                                      : tensor_product(Matrix2::identity(), op);
}

namespace detail {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

template <std::size_t N>
double off_diagonal_norm(const Matrix<N> &m) {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) {
            if (r != c) {
                s += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const Matrix<N> &m) {
    double s = 0.0;
    for (const auto &e : m.entries()) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

/// Cyclic complex Jacobi. Each rotation J zeroes a(p, q) of J^dagger A J:
/// with a(p, q) = |a| e, J = [[c, s e], [-s conj(e), c]] and t = s / c the
/// smaller root of t^2 + 2 tau t - 1 = 0, tau = (a_qq - a_pp) / (2 |a|).
template <std::size_t N>
std::array<double, N> jacobi_eigenvalues(Matrix<N> a) {
    const double threshold = kJacobiThreshold * std::max(1.0, frobenius_norm(a));
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) {
                    continue;
                }
                const Complex e = a(p, q) / mag;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // A <- A J (columns p, q)
                for (std::size_t k = 0; k < N; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(e) * akq;
                    a(k, q) = s * e * akp + c * akq;
                }
                // A <- J^dagger A (rows p, q)
                for (std::size_t k = 0; k < N; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * std::conj(e) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = a(i, i).real();
    }
    return out;
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// The input is symmetrized as (M + M^dagger) / 2 first. Throws
/// NotHermitianError when ||M - M^dagger||_max exceeds 1e-10. Dimension 2 is
/// solved in closed form, larger dimensions by cyclic Jacobi rotations.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N> &m) {
    const double herr = hermiticity_error(m);
    if (!(herr <= detail::kHermitianTolerance)) {
        throw NotHermitianError("matrix is not Hermitian: max |M - M^dagger| = " + std::to_string(herr));
    }
    const Matrix<N> h = 0.5 * (m + m.adjoint());
    std::array<double, N> out{};
    if constexpr (N == 1) {
        out[0] = h(0, 0).real();
    } else if constexpr (N == 2) {
        const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
        const double half_gap = 0.5 * (h(0, 0).real() - h(1, 1).real());
        const double radius = std::hypot(half_gap, std::abs(h(0, 1)));
        out = {mean + radius, mean - radius};
    } else {
        out = detail::jacobi_eigenvalues(h);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// `validated` enforces the invariants (tolerance 1e-10 each). `trusted`
/// skips the checks and is meant for results of operations that preserve
/// them exactly (unitary conjugation, convex mixtures of valid states).
template <std::size_t N>
class DensityMatrix {
   public:
    static constexpr std::size_t dim = N;
    static constexpr double kTolerance = 1e-10;

    static DensityMatrix validated(const Matrix<N> &m) {
        const double herr = hermiticity_error(m);
        if (!(herr <= kTolerance)) {
            throw InvalidStateError("density matrix is not Hermitian (error " + std::to_string(herr) + ")");
        }
        const double terr = std::abs(m.trace() - 1.0);
        if (!(terr <= kTolerance)) {
            throw InvalidStateError("density matrix trace differs from 1 by " + std::to_string(terr));
        }
        const auto eig = hermitian_eigenvalues(m);
        if (eig.back() < -kTolerance) {
            throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(eig.back()));
        }
        return DensityMatrix(m);
    }

    static DensityMatrix trusted(const Matrix<N> &m) { return DensityMatrix(m); }

    static DensityMatrix maximally_mixed() { return DensityMatrix(Matrix<N>::identity() * (1.0 / N)); }

    const Matrix<N> &matrix() const & { return m_; }
    // By value on temporaries so `const auto &m = f().matrix()` cannot dangle.
    Matrix<N> matrix() const && { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    friend bool operator==(const DensityMatrix &, const DensityMatrix &) = default;

   private:
    explicit DensityMatrix(const Matrix<N> &m) : m_(m) {}
    Matrix<N> m_;
};

using QubitState = DensityMatrix<2>;
using TwoQubitState = DensityMatrix<4>;

/// Reduced state of the kept qubit; trace and positivity carry over.
inline QubitState partial_trace(const TwoQubitState &rho, Subsystem keep) {
    return QubitState::trusted(partial_trace(rho.matrix(), keep));
}

inline TwoQubitState tensor_product(const QubitState &a, const QubitState &b) {
    return TwoQubitState::trusted(tensor_product(a.matrix(), b.matrix()));
}

}  // namespace qswitch

#endif  // QSWITCH_LINALG_HPP
