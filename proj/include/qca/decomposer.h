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

#ifndef QCA_DECOMPOSER_H
#define QCA_DECOMPOSER_H

#include <cstdint>

#include "qca/model.h"
#include "qca/star_algebra.h"

namespace qca {

inline constexpr double kCertifyTol = 1e-7;

/// Images of the single-cell algebras of input cells 1 and 2 under X -> G X G^dagger,
/// reduced to the output cells they live on ({0, 1} and {1, 2}).
/// `a.generators[k]` is the image of E_k0 on cell 1, likewise for `b` and cell 2.
struct CellAlgebraImages {
    GeneratedAlgebra a;
    GeneratedAlgebra b;
    int d = 0;
};

struct Certification {
    double residual = 0;
    int shift = 0;
};

struct Decomposition {
    BlockQCA block;
    Certification certification;
};

CellAlgebraImages cell_algebra_images(const WindowOperator &g, double tol = kDefaultTol);

/// Factorization W = V^dagger splitting the restrictions of the two images to
/// output cell 1 into M_p tensor I_q and I_p tensor M_q.
Factorization derive_v(const CellAlgebraImages &images, uint64_t seed, double tol = kDefaultTol);

/// Recovers u : C^d -> C^q tensor C^p from the cell-1 image and W = V^dagger.
CMatrix derive_u(const CellAlgebraImages &images, const Factorization &v, double tol = kDefaultTol);
CMatrix derive_u(const WindowOperator &g, const Factorization &v, double tol = kDefaultTol);

/// Picks q1, q2 and the phase of u so that the quiescent state is fixed.
/// `v` here is the merge map C^p tensor C^q -> C^d.
BlockQCA fix_quiescent_gauge(const CMatrix &u, const CMatrix &v, int p, int q, const Alphabet &alphabet);

/// Compares window_matrix(block) with g up to a cyclic shift in {-1, 0, 1} and a global phase.
Certification certify(const WindowOperator &g, const BlockQCA &block);

Decomposition decompose(const WindowOperator &g, uint64_t seed, double tol = kDefaultTol);

/// dim(B|_1) * dim(B|_2), which equals dim(B) = d^2 when B sits inside B|_1 tensor B|_2.
int64_t restricted_product_dimension(const CellAlgebraImages &images);

}  // namespace qca

#endif
