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

#include "qca/decomposer.h"

#include <algorithm>
#include <cmath>

#include "qca/error.h"

namespace qca {

namespace {

constexpr double kIsoTol = 1e-7;

GeneratedAlgebra cell_image(const WindowOperator &g, const CellConjugator &conj, int cell, double tol) {
    int d = g.d();
    int w = g.width;
    IndexSet region = {cell - 1 - g.output_offset, cell - g.output_offset};
    if (region[0] < 0 || region[1] >= w) {
        throw QcaError(ErrorKind::WindowTooSmall, "window too small for the probed cells");
    }
    FactorShape shape = g.shape();
    double traced = std::pow((double)d, (double)(w - 2));
    std::vector<CMatrix> gens;
    for (int k = 0; k < d; k++) {
        SparseCMatrix a = conj.image(cell, k, 0);
        double r = localization_residual(a, shape, region);
        if (r > tol) {
            throw QcaError(
                ErrorKind::NotLocal,
                "image of cell " + std::to_string(cell) + " is not localized on two output cells (residual " +
                    std::to_string(r) + ")");
        }
        gens.push_back(partial_trace(a, shape, region) / traced);
    }
    // E_kl = E_k0 E_l0^dagger, and the images of distinct matrix units are
    // orthogonal because conjugation by G preserves the HS inner product.
    // With E_00 = Q Q^dagger (rank d), E_k0 = A_k Q^dagger and E_kl = A_k A_l^dagger.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(((gens[0] + gens[0].adjoint()) / 2.0).eval());
    CMatrix qm = es.eigenvectors().rightCols(d);
    std::vector<CMatrix> factors;
    for (int k = 0; k < d; k++) {
        factors.push_back(gens[k] * qm);
    }
    std::vector<CMatrix> span;
    span.reserve((size_t)d * d);
    for (int k = 0; k < d; k++) {
        for (int l = 0; l < d; l++) {
            span.push_back(factors[k] * factors[l].adjoint());
        }
    }
    return from_closed_span(gens, span, d * d, true);
}

/// Rows of `m` rotated so that output cell i moves to cell i + s.
SparseCMatrix rotate_rows(const SparseCMatrix &m, int d, int width, int s) {
    std::vector<int> dims(width, d);
    int64_t n = m.rows();
    std::vector<Eigen::Triplet<cd>> t;
    t.reserve(n);
    for (int64_t k = 0; k < n; k++) {
        std::vector<int> c = index_digits(k, dims);
        std::vector<int> out(width);
        for (int i = 0; i < width; i++) {
            out[((i + s) % width + width) % width] = c[i];
        }
        t.emplace_back((int)digits_index(out, dims), (int)k, cd(1));
    }
    SparseCMatrix p(n, n);
    p.setFromTriplets(t.begin(), t.end());
    return p * m;
}

}  // namespace

CellAlgebraImages cell_algebra_images(const WindowOperator &g, double tol) {
    if (g.width < 3) {
        throw QcaError(ErrorKind::WindowTooSmall, "decomposition needs a window of at least 3 cells");
    }
    CellConjugator conj(g, true);
    CellAlgebraImages out;
    out.d = g.d();
    out.a = cell_image(g, conj, 1, tol);
    out.b = cell_image(g, conj, 2, tol);
    return out;
}

Factorization derive_v(const CellAlgebraImages &images, uint64_t seed, double tol) {
    FactorShape pair({images.d, images.d});
    GeneratedAlgebra a1 = restrict(images.a, pair, {1});
    GeneratedAlgebra b1 = restrict(images.b, pair, {0});
    return factor_pair(a1, b1, seed, tol);
}

CMatrix derive_u(const CellAlgebraImages &images, const Factorization &v, double /*tol*/) {
    int d = images.d;
    int p = v.p, q = v.q;
    if (p * q != d) {
        throw QcaError(ErrorKind::IsoSolveFailed, "factor dimensions do not multiply to d");
    }
    CMatrix ww = kron(v.w, v.w);
    FactorShape shape({p, q, p, q});
    std::vector<CMatrix> z(d);
    for (int k = 0; k < d; k++) {
        CMatrix y = ww * images.a.generators[k] * ww.adjoint();
        if (localization_residual(y, shape, {1, 2}) > kIsoTol) {
            throw QcaError(ErrorKind::IsoSolveFailed, "cell image does not straddle the two half cells");
        }
        z[k] = partial_trace(y, shape, {1, 2}) / (double)(p * q);
    }
    // z[0] = |u_0><u_0| and z[k] = |u_k><u_0|.
    CMatrix z0 = (z[0] + z[0].adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(z0);
    if (std::abs(es.eigenvalues()(d - 1) - 1.0) > kIsoTol) {
        throw QcaError(ErrorKind::IsoSolveFailed, "image of E_00 is not a rank-one projector");
    }
    CVector u0 = es.eigenvectors().col(d - 1);
    CMatrix u(d, d);
    for (int k = 0; k < d; k++) {
        u.col(k) = z[k] * u0;
    }
    Eigen::JacobiSVD<CMatrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixU() * svd.matrixV().adjoint();
    for (int k = 0; k < d; k++) {
        CMatrix ek = CMatrix::Zero(d, d);
        ek(k, 0) = 1;
        if (max_abs(u * ek * u.adjoint() - z[k]) > kIsoTol) {
            throw QcaError(ErrorKind::IsoSolveFailed, "no unitary reproduces the cell image");
        }
    }
    return u;
}

CMatrix derive_u(const WindowOperator &g, const Factorization &v, double tol) {
    return derive_u(cell_algebra_images(g, tol), v, tol);
}

BlockQCA fix_quiescent_gauge(const CMatrix &u, const CMatrix &v, int p, int q, const Alphabet &alphabet) {
    int d = alphabet.dim();
    if (p * q != d || u.rows() != d || u.cols() != d || v.rows() != d || v.cols() != d) {
        throw QcaError(ErrorKind::DimensionMismatch, "block shapes do not match the alphabet");
    }
    // V^dagger |q> must be a product q1 (x) q2.
    CVector psi = v.row(0).adjoint();
    CMatrix m(p, q);
    for (int i = 0; i < p; i++) {
        for (int j = 0; j < q; j++) {
            m(i, j) = psi(i * q + j);
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    if (sv.size() > 1 && sv(1) > kIsoTol) {
        throw QcaError(ErrorKind::NotSeparable, "merged quiescent state is entangled across the halves");
    }
    BlockQCA g;
    g.d = d;
    g.p = p;
    g.q = q;
    g.alphabet = alphabet;
    g.v = v;
    g.q1 = svd.matrixU().col(0);
    g.q2 = svd.matrixV().col(0).conjugate();
    CVector target = kron(g.q2, g.q1).col(0);
    cd c = target.dot(u.col(0));
    if (std::abs(std::abs(c) - 1.0) > kIsoTol) {
        throw QcaError(ErrorKind::NotSeparable, "split quiescent state is not the expected product");
    }
    g.u = u * (std::conj(c) / std::abs(c));
    g.validate(1e-8);
    return g;
}

Certification certify(const WindowOperator &g, const BlockQCA &block) {
    if (g.boundary != Boundary::Periodic) {
        throw QcaError(ErrorKind::UnsupportedWindow, "certification needs a periodic window");
    }
    WindowOperator r = window_matrix(block, g.width);
    Certification best{std::numeric_limits<double>::infinity(), 0};
    for (int s : {0, -1, 1}) {
        SparseCMatrix cand = rotate_rows(r.matrix, g.d(), g.width, s);
        cd overlap = 0;
        for (int k = 0; k < g.matrix.outerSize(); k++) {
            for (SparseCMatrix::InnerIterator it(g.matrix, k); it; ++it) {
                overlap += std::conj(cand.coeff(it.row(), it.col())) * it.value();
            }
        }
        if (std::abs(overlap) == 0) {
            continue;
        }
        cd phase = overlap / std::abs(overlap);
        SparseCMatrix diff = g.matrix - cand * phase;
        double res = 0;
        for (int k = 0; k < diff.outerSize(); k++) {
            for (SparseCMatrix::InnerIterator it(diff, k); it; ++it) {
                res = std::max(res, std::abs(it.value()));
            }
        }
        if (res < best.residual) {
            best = {res, s};
        }
    }
    return best;
}

Decomposition decompose(const WindowOperator &g, uint64_t seed, double tol) {
    if (g.boundary != Boundary::Periodic) {
        throw QcaError(ErrorKind::UnsupportedWindow, "decomposition needs a periodic window");
    }
    CellAlgebraImages images = cell_algebra_images(g, tol);
    Factorization w = derive_v(images, seed, tol);
    CMatrix u = derive_u(images, w, tol);
    Decomposition out;
    out.block = fix_quiescent_gauge(u, w.w.adjoint(), w.p, w.q, g.alphabet);
    out.certification = certify(g, out.block);
    if (out.certification.residual > kCertifyTol) {
        throw QcaError(
            ErrorKind::ReconstructionMismatch,
            "reconstructed window differs from the input (residual " + std::to_string(out.certification.residual) +
                ")");
    }
    return out;
}

int64_t restricted_product_dimension(const CellAlgebraImages &images) {
    FactorShape pair({images.d, images.d});
    return (int64_t)restrict(images.b, pair, {0}).dimension() * restrict(images.b, pair, {1}).dimension();
}

}  // namespace qca
