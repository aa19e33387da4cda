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

#ifndef QCA_STAR_ALGEBRA_H
#define QCA_STAR_ALGEBRA_H

#include <cstdint>
#include <vector>

#include "qca/tensor_core.h"

namespace qca {

inline constexpr double kRankTol = 1e-8;

/// A unital *-subalgebra of M_n, kept as its generators plus a basis that is
/// orthonormal for the Hilbert-Schmidt inner product.
struct GeneratedAlgebra {
    int n = 0;
    std::vector<CMatrix> generators;
    std::vector<CMatrix> basis;

    int dimension() const {
        return (int)basis.size();
    }
    /// Distance (HS norm) from `m` to the span of the basis.
    double distance_to_span(const CMatrix &m) const;
    bool contains(const CMatrix &m, double tol = kDefaultTol) const;
};

/// Orthogonal projectors summing to the identity.
struct ProjectorFamily {
    std::vector<CMatrix> projectors;
};

/// W with W alg W^dagger = M_p tensor I_q.
struct Factorization {
    CMatrix w;
    int p = 0;
    int q = 0;
};

/// Smallest *-algebra containing the identity and `generators`.
GeneratedAlgebra close(const std::vector<CMatrix> &generators, int n, double rank_tol = kRankTol);

/// Wraps a spanning set already known to be closed under products and adjoints
/// (for instance the image of a full matrix algebra under a *-homomorphism).
/// The set is orthonormalized but no products are formed. With `orthogonal`
/// the caller vouches that the span elements are already pairwise orthogonal
/// and nonzero, and they are only normalized.
GeneratedAlgebra from_closed_span(
    const std::vector<CMatrix> &generators,
    const std::vector<CMatrix> &span,
    int n,
    bool orthogonal = false,
    double rank_tol = kRankTol);

/// Orthonormal basis of the center.
std::vector<CMatrix> center(const GeneratedAlgebra &alg, double rank_tol = kRankTol);

ProjectorFamily maximal_projector_family(const GeneratedAlgebra &alg, uint64_t seed, double tol = kDefaultTol);

Factorization factor_one(const GeneratedAlgebra &alg, uint64_t seed, double tol = kDefaultTol);

Factorization factor_pair(
    const GeneratedAlgebra &a, const GeneratedAlgebra &b, uint64_t seed, double tol = kDefaultTol);

/// Algebra generated by the partial traces of `alg` onto `keep`.
GeneratedAlgebra restrict(const GeneratedAlgebra &alg, const FactorShape &shape, const IndexSet &keep);

/// Largest max-norm deviation of W b W^dagger from (something) tensor I_q over
/// the basis of `alg`. With `second` set, from I_p tensor (something).
double factorization_residual(const GeneratedAlgebra &alg, const Factorization &f, bool second = false);

}  // namespace qca

#endif
