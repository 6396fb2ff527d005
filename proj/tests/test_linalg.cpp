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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/states.hpp"
#include "test_util.hpp"

namespace {

using namespace qswitch;
using testutil::from_oracle;
using testutil::max_diff;
using testutil::to_oracle;

const Matrix2 kX{{0, 1}, {1, 0}};
const Matrix2 kZ{{1, 0}, {0, -1}};

TEST(TensorProduct, IdentityTimesIdentity) {
    EXPECT_EQ(tensor_product(Matrix2::identity(), Matrix2::identity()), Matrix4::identity());
}

TEST(TensorProduct, ZTensorIdentityIsDiagonal) {
    EXPECT_EQ(tensor_product(kZ, Matrix2::identity()), Matrix4::diagonal({1, 1, -1, -1}));
}

TEST(TensorProduct, XXFixesPhiPlus) {
    const Matrix4 xx = tensor_product(kX, kX);
    const Matrix4 phi = bell_projector({0, 0}).matrix();
    const auto ref = oracle::mul(oracle::mul(to_oracle(xx), to_oracle(phi)), oracle::dagger(to_oracle(xx)));
    EXPECT_LE(max_diff(phi, ref), 1e-15);
    EXPECT_LE(max_abs_diff(xx * phi * xx.adjoint(), phi), 1e-15);
}

TEST(TensorProduct, MatchesIndexOracleOnRandomInputs) {
    std::mt19937_64 g(11);
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_hermitian<2>(g);
        const auto b = oracle::random_hermitian<2>(g);
        EXPECT_LE(max_diff(tensor_product(from_oracle(a), from_oracle(b)), oracle::kron(a, b)), 1e-14);
    }
}

TEST(TensorProduct, BlockStructure) {
    // (A (x) B) equals the block matrix [a_ij B].
    std::mt19937_64 g(12);
    const Matrix2 a = from_oracle(oracle::random_hermitian<2>(g));
    const Matrix2 b = from_oracle(oracle::random_hermitian<2>(g));
    const Matrix4 ab = tensor_product(a, b);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    EXPECT_LE(std::abs(ab(2 * i + k, 2 * j + l) - a(i, j) * b(k, l)), 1e-14);
}

TEST(TensorProduct, MixedProductAssociativity) {
    std::mt19937_64 g(13);
    const Matrix2 a = from_oracle(oracle::random_hermitian<2>(g));
    const Matrix2 b = from_oracle(oracle::random_hermitian<2>(g));
    const Matrix2 c = from_oracle(oracle::random_hermitian<2>(g));
    const auto left = tensor_product(tensor_product(a, b), c);
    const auto right = tensor_product(a, tensor_product(b, c));
    EXPECT_LE(max_abs_diff(left, right), 1e-14);
}

TEST(PartialTrace, BellStateReducesToMaximallyMixed) {
    const auto reduced = partial_trace(bell_projector({0, 0}), Subsystem::first);
    EXPECT_LE(max_abs_diff(reduced.matrix(), Matrix2::identity() * 0.5), 1e-15);
}

TEST(PartialTrace, ProductStateKeepSecond) {
    const Matrix4 zz = Matrix4::diagonal({1, 0, 0, 0});
    EXPECT_EQ(partial_trace(zz, Subsystem::second), Matrix2::diagonal({1, 0}));
}

TEST(PartialTrace, WernerReducesToMaximallyMixed) {
    const auto rho = werner_state(WernerParam(std::numbers::pi / 6));
    // Direct summation over the traced index.
    for (const auto keep : {Subsystem::first, Subsystem::second}) {
        Matrix2 ref;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t s = 0; s < 2; ++s)
                    ref(r, c) += keep == Subsystem::first ? rho(2 * r + s, 2 * c + s) : rho(2 * s + r, 2 * s + c);
        EXPECT_LE(max_abs_diff(partial_trace(rho, keep).matrix(), ref), 1e-15);
        EXPECT_LE(max_abs_diff(ref, Matrix2::identity() * 0.5), 1e-12);
    }
}

TEST(PartialTrace, InvertsTensorProductOfRandomStates) {
    std::mt19937_64 g(14);
    for (int i = 0; i < 200; ++i) {
        const auto a = testutil::random_state<2>(g);
        const auto b = testutil::random_state<2>(g);
        const auto ab = tensor_product(a, b);
        EXPECT_LE(max_abs_diff(partial_trace(ab, Subsystem::first).matrix(), a.matrix()), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(ab, Subsystem::second).matrix(), b.matrix()), 1e-12);
    }
}

TEST(PartialTrace, PreservesTrace) {
    std::mt19937_64 g(15);
    for (int i = 0; i < 100; ++i) {
        const auto rho = testutil::random_state<4>(g);
        for (const auto keep : {Subsystem::first, Subsystem::second}) {
            EXPECT_NEAR(partial_trace(rho, keep).matrix().trace().real(), 1.0, 1e-12);
        }
    }
}

TEST(Eigenvalues, Diagonal) {
    const auto eig = hermitian_eigenvalues(Matrix4::identity() * 0.25);
    for (double v : eig) {
        EXPECT_DOUBLE_EQ(v, 0.25);
    }
}

TEST(Eigenvalues, RankOneProjector) {
    const auto eig = hermitian_eigenvalues(bell_projector({0, 0}).matrix());
    EXPECT_NEAR(eig[0], 1.0, 1e-14);
    for (int i = 1; i < 4; ++i) {
        EXPECT_NEAR(eig[i], 0.0, 1e-14);
    }
}

TEST(Eigenvalues, WernerPiOverSix) {
    const auto rho = werner_state(WernerParam(std::numbers::pi / 6));
    const auto eig = hermitian_eigenvalues(rho.matrix());
    const auto ref = oracle::eigenvalues<4>(to_oracle(rho.matrix()));
    const std::array<double, 4> expected{0.625, 0.125, 0.125, 0.125};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(eig[i], expected[i], 1e-12);
        // Newton on a triple root only converges to about eps^(1/3).
        EXPECT_NEAR(ref[i], expected[i], 1e-6);
    }
}

TEST(Eigenvalues, OracleSelfCheckOnKnownSpectrum) {
    // sum_i d_i |B_i><B_i| over the Bell basis has spectrum d.
    const std::array<double, 4> d{3.5, 1.25, -0.5, -2.0};
    oracle::Mat<4> a = oracle::zero<4>();
    for (int i = 0; i < 4; ++i) {
        a = oracle::add(a, oracle::projector(oracle::bell(i >> 1, i & 1)), d[i]);
    }
    const auto ref = oracle::eigenvalues<4>(a);
    const auto lib = hermitian_eigenvalues(from_oracle(a));
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(ref[i], d[i], 1e-12);
        EXPECT_NEAR(lib[i], d[i], 1e-12);
    }
}

TEST(Eigenvalues, MatchesCharacteristicPolynomialOracle) {
    std::mt19937_64 g(17);
    for (int i = 0; i < 300; ++i) {
        const auto h = oracle::random_hermitian<4>(g);
        const auto lib = hermitian_eigenvalues(from_oracle(h));
        const auto ref = oracle::eigenvalues<4>(h);
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(lib[k], ref[k], 1e-8) << "matrix " << i;
        }
    }
}

TEST(Eigenvalues, SumEqualsTrace) {
    std::mt19937_64 g(18);
    for (int i = 0; i < 500; ++i) {
        const Matrix4 h = from_oracle(oracle::random_hermitian<4>(g));
        const auto eig = hermitian_eigenvalues(h);
        EXPECT_NEAR(eig[0] + eig[1] + eig[2] + eig[3], h.trace().real(), 1e-10);
        EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end(), std::greater<>()));
    }
}

TEST(Eigenvalues, TwoByTwoClosedForm) {
    std::mt19937_64 g(19);
    for (int i = 0; i < 200; ++i) {
        const auto h = oracle::random_hermitian<2>(g);
        const auto lib = hermitian_eigenvalues(from_oracle(h));
        const auto ref = oracle::eigenvalues<2>(h);
        EXPECT_NEAR(lib[0], ref[0], 1e-10);
        EXPECT_NEAR(lib[1], ref[1], 1e-10);
    }
}

TEST(Eigenvalues, DegenerateAndNearlyDiagonal) {
    const auto eig = hermitian_eigenvalues(Matrix4::diagonal({2, 2, -1, 2}) + Matrix4::identity() * 1e-13);
    EXPECT_NEAR(eig[0], 2.0, 1e-12);
    EXPECT_NEAR(eig[2], 2.0, 1e-12);
    EXPECT_NEAR(eig[3], -1.0, 1e-12);
}

TEST(Eigenvalues, RejectsNonHermitian) {
    Matrix4 m = Matrix4::identity();
    m(0, 1) = 1e-6;
    EXPECT_THROW(hermitian_eigenvalues(m), NotHermitianError);
}

TEST(Eigenvalues, SymmetrizesTinyAsymmetry) {
    Matrix2 m{{1, 0.5}, {0.5 + 1e-12, 0}};
    EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(DensityMatrix, ValidatesInvariants) {
    EXPECT_NO_THROW(TwoQubitState::validated(Matrix4::identity() * 0.25));
    EXPECT_THROW(TwoQubitState::validated(Matrix4::identity() * 0.3), InvalidStateError);
    EXPECT_THROW(QubitState::validated(Matrix2::diagonal({1.5, -0.5})), InvalidStateError);
    Matrix2 asym{{0.5, 0.1}, {0.2, 0.5}};
    EXPECT_THROW(QubitState::validated(asym), InvalidStateError);
}

TEST(DensityMatrix, ToleratesRoundoff) {
    EXPECT_NO_THROW(QubitState::validated(Matrix2::diagonal({1.0 + 5e-11, -5e-11})));
}

TEST(Matrix, ArithmeticAndAdjoint) {
    using namespace std::complex_literals;
    const Matrix2 y{{0, -1i}, {1i, 0}};
    EXPECT_EQ(y.adjoint(), y);
    EXPECT_LE(max_abs_diff(y * y, Matrix2::identity()), 1e-15);
    EXPECT_LE(max_abs_diff(commutator(kX, kZ), Matrix2{{0, -2}, {2, 0}}), 1e-15);
    EXPECT_EQ(kX.trace(), Complex(0.0));
}

}  // namespace
