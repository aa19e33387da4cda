// Copyright 2026 The qca Authors
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

#include "qca/star_algebra.h"

#include <functional>

#include "gtest/gtest.h"

#include "oracles.h"
#include "qca/error.h"
#include "qca/random.h"

using namespace qca;

namespace {

// The algebra H (M_p (x) I_q) H^dagger for a random unitary H.
GeneratedAlgebra hidden_factor(int p, int q, Rng &rng, CMatrix *h_out = nullptr, bool second = false) {
    CMatrix h = haar_unitary(p * q, rng);
    if (h_out) {
        *h_out = h;
    }
    std::vector<CMatrix> units = oracle::conjugated_factor_units(h, p, q, second);
    return close(units, p * q);
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const QcaError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no QcaError raised";
    return ErrorKind::NumericalFailure;
}

}  // namespace

TEST(star_algebra, closure_of_pauli_x_is_two_dimensional) {
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    GeneratedAlgebra alg = close({x}, 2);
    ASSERT_EQ(alg.dimension(), 2);
    ASSERT_TRUE(alg.contains(CMatrix::Identity(2, 2)));
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    ASSERT_FALSE(alg.contains(z));
}

TEST(star_algebra, closure_of_shift_generates_everything) {
    // The raising operator of a qutrit generates M_3.
    CMatrix e = oracle::unit(3, 0, 1) + oracle::unit(3, 1, 2);
    ASSERT_EQ(close({e}, 3).dimension(), 9);
}

TEST(star_algebra, closure_basis_is_orthonormal_and_closed) {
    Rng rng(21);
    GeneratedAlgebra alg = hidden_factor(2, 3, rng);
    ASSERT_EQ(alg.dimension(), 4);
    for (size_t i = 0; i < alg.basis.size(); i++) {
        for (size_t j = 0; j < alg.basis.size(); j++) {
            cd ip = hs_inner(alg.basis[i], alg.basis[j]);
            ASSERT_LT(std::abs(ip - (i == j ? 1.0 : 0.0)), 1e-10);
            ASSERT_TRUE(alg.contains(alg.basis[i] * alg.basis[j]));
        }
        ASSERT_TRUE(alg.contains(alg.basis[i].adjoint()));
    }
}

TEST(star_algebra, generator_dimension_mismatch) {
    ASSERT_EQ(kind_of([] { close({CMatrix::Identity(2, 2)}, 3); }), ErrorKind::DimensionMismatch);
}

TEST(star_algebra, center_of_factor_is_trivial) {
    Rng rng(22);
    GeneratedAlgebra alg = hidden_factor(3, 2, rng);
    std::vector<CMatrix> z = center(alg);
    ASSERT_EQ(z.size(), 1u);
    // Proportional to the identity.
    CMatrix c = z[0] / z[0].trace() * 6.0;
    ASSERT_LT(max_abs(c - CMatrix::Identity(6, 6)), 1e-9);
}

TEST(star_algebra, center_of_diagonal_algebra) {
    std::vector<CMatrix> gens = {oracle::unit(3, 0, 0), oracle::unit(3, 1, 1)};
    GeneratedAlgebra alg = close(gens, 3);
    ASSERT_EQ(alg.dimension(), 3);
    ASSERT_EQ(center(alg).size(), 3u);
    ASSERT_EQ(kind_of([&] { factor_one(alg, 1); }), ErrorKind::NontrivialCenter);
}

TEST(star_algebra, center_of_block_sum) {
    // M_2 (+) C on C^3 has a two-dimensional center.
    std::vector<CMatrix> gens = {oracle::unit(3, 0, 1), oracle::unit(3, 1, 0)};
    GeneratedAlgebra alg = close(gens, 3);
    ASSERT_EQ(alg.dimension(), 5);
    ASSERT_EQ(center(alg).size(), 2u);
}

TEST(star_algebra, center_of_full_matrix_algebra) {
    Rng rng(23);
    GeneratedAlgebra alg = close({random_gaussian(4, 4, rng)}, 4);
    ASSERT_EQ(alg.dimension(), 16);
    ASSERT_EQ(center(alg).size(), 1u);
}

TEST(star_algebra, projector_family_properties) {
    Rng rng(24);
    for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 1}}) {
        GeneratedAlgebra alg = hidden_factor(p, q, rng);
        ProjectorFamily fam = maximal_projector_family(alg, 7);
        ASSERT_EQ((int)fam.projectors.size(), p);
        CMatrix sum = CMatrix::Zero(p * q, p * q);
        for (const CMatrix &pr : fam.projectors) {
            ASSERT_LT(max_abs(pr * pr - pr), 1e-9);
            ASSERT_LT(max_abs(pr - pr.adjoint()), 1e-9);
            ASSERT_NEAR(pr.trace().real(), q, 1e-9);
            ASSERT_TRUE(alg.contains(pr, 1e-8));
            sum += pr;
        }
        ASSERT_LT(max_abs(sum - CMatrix::Identity(p * q, p * q)), 1e-9);
    }
}

TEST(star_algebra, projector_refinement_handles_antihermitian_compressions) {
    // An algebra where a random Hermitian element is already diagonal: refinement
    // must still reach rank-one projectors for M_3 (x) I_1.
    std::vector<CMatrix> gens;
    for (int k = 0; k < 3; k++) {
        for (int l = 0; l < 3; l++) {
            gens.push_back(oracle::unit(3, k, l));
        }
    }
    GeneratedAlgebra alg = close(gens, 3);
    ProjectorFamily fam = maximal_projector_family(alg, 3);
    ASSERT_EQ(fam.projectors.size(), 3u);
}

TEST(star_algebra, factor_one_recovers_hidden_split) {
    Rng rng(25);
    for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 4}, {2, 6}, {6, 2}, {1, 5}, {5, 1}}) {
        GeneratedAlgebra alg = hidden_factor(p, q, rng);
        Factorization f = factor_one(alg, 11);
        ASSERT_EQ(f.p, p);
        ASSERT_EQ(f.q, q);
        ASSERT_TRUE(is_unitary(f.w, 1e-9));
        ASSERT_LT(factorization_residual(alg, f), 1e-8);
        // Independent check: every conjugated element commutes with I_p (x) M_q.
        FactorShape shape({p, q});
        for (const CMatrix &b : alg.basis) {
            CMatrix m = f.w * b * f.w.adjoint();
            ASSERT_TRUE(oracle::localized_by_commutant(m, shape.dims, {0}, 1e-8));
        }
    }
}

TEST(star_algebra, factor_one_gauge) {
    Rng rng(26);
    GeneratedAlgebra alg = hidden_factor(2, 2, rng);
    Factorization f = factor_one(alg, 5);
    int k = 0;
    while (std::abs(f.w(k, 0)) <= 1e-12) {
        k++;
    }
    ASSERT_NEAR(f.w(k, 0).imag(), 0.0, 1e-12);
    ASSERT_GT(f.w(k, 0).real(), 0.0);
}

TEST(star_algebra, factor_one_is_deterministic) {
    Rng rng(27);
    GeneratedAlgebra alg = hidden_factor(3, 2, rng);
    Factorization a = factor_one(alg, 42);
    Factorization b = factor_one(alg, 42);
    ASSERT_EQ(a.w, b.w);
}

TEST(star_algebra, factor_pair_commutant) {
    Rng rng(28);
    for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        CMatrix h = haar_unitary(p * q, rng);
        GeneratedAlgebra a = close(oracle::conjugated_factor_units(h, p, q, false), p * q);
        GeneratedAlgebra b = close(oracle::conjugated_factor_units(h, p, q, true), p * q);
        Factorization f = factor_pair(a, b, 9);
        ASSERT_LT(factorization_residual(a, f), 1e-8);
        ASSERT_LT(factorization_residual(b, f, true), 1e-8);
    }
}

TEST(star_algebra, factor_pair_rejects_noncommuting) {
    Rng rng(29);
    GeneratedAlgebra a = hidden_factor(2, 2, rng);
    GeneratedAlgebra b = hidden_factor(2, 2, rng);
    ASSERT_EQ(kind_of([&] { factor_pair(a, b, 1); }), ErrorKind::NotCommuting);
}

TEST(star_algebra, factor_pair_rejects_non_generating) {
    // M_2 (x) I_3 and I_2 (x) (M_2 (+) C): commuting, but products miss M_6.
    std::vector<CMatrix> ga, gb;
    for (int k = 0; k < 2; k++) {
        for (int l = 0; l < 2; l++) {
            ga.push_back(oracle::kron(oracle::unit(2, k, l), CMatrix::Identity(3, 3)));
            gb.push_back(oracle::kron(CMatrix::Identity(2, 2), oracle::unit(3, k, l)));
        }
    }
    GeneratedAlgebra a = close(ga, 6);
    GeneratedAlgebra b = close(gb, 6);
    ASSERT_EQ(kind_of([&] { factor_pair(a, b, 1); }), ErrorKind::NotGenerating);
}

TEST(star_algebra, restrict_to_factor) {
    Rng rng(30);
    // Product algebra M_2 (x) I_2 (x) I_2 restricted to factor 0 is M_2.
    std::vector<CMatrix> gens;
    for (int k = 0; k < 2; k++) {
        for (int l = 0; l < 2; l++) {
            gens.push_back(oracle::kron_all({oracle::unit(2, k, l), CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)}));
        }
    }
    GeneratedAlgebra alg = close(gens, 8);
    FactorShape shape({2, 2, 2});
    ASSERT_EQ(restrict(alg, shape, {0}).dimension(), 4);
    ASSERT_EQ(restrict(alg, shape, {1}).dimension(), 1);
    ASSERT_EQ(kind_of([&] { restrict(alg, FactorShape({2, 2}), {0}); }), ErrorKind::DimensionMismatch);
}

TEST(star_algebra, from_closed_span_orthogonal) {
    std::vector<CMatrix> span = {2.0 * oracle::unit(2, 0, 0), 3.0 * oracle::unit(2, 1, 1)};
    GeneratedAlgebra alg = from_closed_span({}, span, 2, true);
    ASSERT_EQ(alg.dimension(), 2);
    ASSERT_NEAR(alg.basis[0].norm(), 1.0, 1e-15);
    ASSERT_TRUE(alg.contains(CMatrix::Identity(2, 2)));
}
