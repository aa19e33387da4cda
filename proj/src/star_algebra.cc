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

#include <algorithm>
#include <cmath>

#include "qca/error.h"
#include "qca/random.h"

namespace qca {

namespace {

/// Incrementally grown HS-orthonormal basis of a subspace of M_n.
class SpanBuilder {
   public:
    SpanBuilder(int n, double rank_tol) : n_(n), rank_tol_(rank_tol) {
    }

    /// `scale` is the size below which `m` counts as roundoff; products of
    /// unit-norm basis elements pass 1.
    bool add(const CMatrix &m, double scale = 0.0) {
        double nm = m.norm();
        if (nm == 0 || full()) {
            return false;
        }
        CMatrix r = m / nm;
        // Two Gram-Schmidt passes keep the basis orthonormal to working precision.
        for (int pass = 0; pass < 2; pass++) {
            for (const CMatrix &b : basis_) {
                r -= hs_inner(b, r) * b;
            }
        }
        double rn = r.norm();
        if (rn * nm <= rank_tol_ * std::max(nm, scale)) {
            return false;
        }
        basis_.push_back(r / rn);
        return true;
    }

    bool full() const {
        return (int64_t)basis_.size() >= (int64_t)n_ * n_;
    }
    std::vector<CMatrix> &basis() {
        return basis_;
    }

   private:
    int n_;
    double rank_tol_;
    std::vector<CMatrix> basis_;
};

double struct_tol(double tol) {
    return std::max(tol, kRankTol);
}

void check_generators(const std::vector<CMatrix> &gens, int n) {
    for (const CMatrix &g : gens) {
        if (g.rows() != n || g.cols() != n) {
            throw QcaError(ErrorKind::DimensionMismatch, "generator is not n x n");
        }
    }
}

/// Spectral projectors of the Hermitian `h`, restricted to the range of the
/// isometry `range`. Eigenvalues closer than 1e-6 of the spectral radius merge.
std::vector<CMatrix> spectral_split(const CMatrix &h, const CMatrix &range) {
    CMatrix local = range.adjoint() * h * range;
    local = ((local + local.adjoint()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(local);
    const auto &ev = es.eigenvalues();
    double radius = ev.cwiseAbs().maxCoeff();
    double gap = 1e-6 * radius;
    std::vector<CMatrix> out;
    int start = 0;
    int r = (int)ev.size();
    for (int k = 1; k <= r; k++) {
        if (k == r || ev(k) - ev(k - 1) > gap) {
            CMatrix vecs = range * es.eigenvectors().middleCols(start, k - start);
            out.push_back(vecs * vecs.adjoint());
            start = k;
        }
    }
    return out;
}

/// Orthonormal basis of the range of a projector.
CMatrix projector_range(const CMatrix &proj) {
    CMatrix h = (proj + proj.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    int n = (int)h.rows();
    int first = 0;
    while (first < n && es.eigenvalues()(first) < 0.5) {
        first++;
    }
    return es.eigenvectors().rightCols(n - first);
}

/// Hermitian element of P alg P that is not a multiple of P, if any.
bool find_splitter(const GeneratedAlgebra &alg, const CMatrix &proj, double tol, CMatrix *out) {
    cd tr = proj.trace();
    double best = tol;
    bool found = false;
    for (const CMatrix &b : alg.basis) {
        CMatrix m = proj * b * proj;
        CMatrix parts[2] = {(m + m.adjoint()) / 2.0, (m - m.adjoint()) / cd(0, 2)};
        for (const CMatrix &h : parts) {
            cd c = h.trace() / tr;
            double dev = max_abs(h - c * proj);
            if (dev > best) {
                best = dev;
                *out = h;
                found = true;
            }
        }
    }
    return found;
}

bool projector_family_ok(const GeneratedAlgebra &alg, const std::vector<CMatrix> &family, double tol) {
    int n = alg.n;
    CMatrix sum = CMatrix::Zero(n, n);
    int rank0 = -1;
    for (const CMatrix &p : family) {
        sum += p;
        if (max_abs(p * p - p) > tol || max_abs(p - p.adjoint()) > tol) {
            return false;
        }
        int rank = (int)std::lround(p.trace().real());
        if (rank0 < 0) {
            rank0 = rank;
        } else if (rank != rank0) {
            return false;
        }
        for (const CMatrix &b : alg.basis) {
            CMatrix m = p * b * p;
            if (max_abs(m - (m.trace() / p.trace()) * p) > tol) {
                return false;
            }
        }
    }
    return rank0 > 0 && max_abs(sum - CMatrix::Identity(n, n)) <= tol;
}

uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    return seed * 0x9E3779B97F4A7C15ULL + salt * 0xBF58476D1CE4E5B9ULL + 1;
}

}  // namespace

double GeneratedAlgebra::distance_to_span(const CMatrix &m) const {
    CMatrix r = m;
    for (int pass = 0; pass < 2; pass++) {
        for (const CMatrix &b : basis) {
            r -= hs_inner(b, r) * b;
        }
    }
    return r.norm();
}

bool GeneratedAlgebra::contains(const CMatrix &m, double tol) const {
    return distance_to_span(m) <= tol * std::max(1.0, m.norm());
}

GeneratedAlgebra close(const std::vector<CMatrix> &generators, int n, double rank_tol) {
    check_generators(generators, n);
    SpanBuilder s(n, rank_tol);
    s.add(CMatrix::Identity(n, n));
    // Generators far below the largest one are roundoff (e.g. partial traces of
    // traceless elements).
    double gscale = 0;
    for (const CMatrix &g : generators) {
        gscale = std::max(gscale, g.norm());
    }
    for (const CMatrix &g : generators) {
        s.add(g, gscale);
        s.add(g.adjoint(), gscale);
    }
    // Breadth-first: element t is multiplied with every earlier element once.
    size_t done = 0;
    while (done < s.basis().size() && !s.full()) {
        size_t t = done;
        for (size_t i = 0; i <= t && !s.full(); i++) {
            CMatrix bt = s.basis()[t];
            CMatrix bi = s.basis()[i];
            s.add(bt * bi, 1.0);
            s.add(bi * bt, 1.0);
        }
        CMatrix adj = s.basis()[t].adjoint();
        s.add(adj);
        done++;
    }
    GeneratedAlgebra out;
    out.n = n;
    out.generators = generators;
    out.basis = std::move(s.basis());
    return out;
}

GeneratedAlgebra from_closed_span(
    const std::vector<CMatrix> &generators, const std::vector<CMatrix> &span, int n, bool orthogonal, double rank_tol) {
    check_generators(generators, n);
    check_generators(span, n);
    if (orthogonal) {
        GeneratedAlgebra out;
        out.n = n;
        out.generators = generators;
        for (const CMatrix &m : span) {
            out.basis.push_back(m / m.norm());
        }
        return out;
    }
    SpanBuilder s(n, rank_tol);
    for (const CMatrix &m : span) {
        s.add(m);
    }
    GeneratedAlgebra out;
    out.n = n;
    out.generators = generators;
    out.basis = std::move(s.basis());
    return out;
}

std::vector<CMatrix> center(const GeneratedAlgebra &alg, double rank_tol) {
    int n = alg.n;
    int m = alg.dimension();
    if ((int64_t)m == (int64_t)n * n) {
        return {CMatrix::Identity(n, n) / std::sqrt((double)n)};
    }
    // Commuting with a generating set is enough; use whichever set is smaller.
    std::vector<CMatrix> tests;
    if (2 * alg.generators.size() < alg.basis.size()) {
        for (const CMatrix &g : alg.generators) {
            tests.push_back(g);
            tests.push_back(g.adjoint());
        }
    } else {
        tests = alg.basis;
    }
    int64_t nn = (int64_t)n * n;
    CMatrix k(nn * (int64_t)tests.size(), m);
    for (int i = 0; i < m; i++) {
        for (size_t t = 0; t < tests.size(); t++) {
            CMatrix c = alg.basis[i] * tests[t] - tests[t] * alg.basis[i];
            k.col(i).segment(nn * (int64_t)t, nn) = Eigen::Map<const CVector>(c.data(), nn);
        }
    }
    Eigen::BDCSVD<CMatrix> svd(k, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    double top = sv.size() ? sv(0) : 0.0;
    std::vector<CMatrix> out;
    for (int col = 0; col < m; col++) {
        bool null = col >= sv.size() || sv(col) <= rank_tol * top;
        if (!null) {
            continue;
        }
        CMatrix z = CMatrix::Zero(n, n);
        for (int i = 0; i < m; i++) {
            z += svd.matrixV()(i, col) * alg.basis[i];
        }
        out.push_back(z);
    }
    return out;
}

ProjectorFamily maximal_projector_family(const GeneratedAlgebra &alg, uint64_t seed, double tol) {
    if (center(alg).size() != 1) {
        throw QcaError(ErrorKind::NontrivialCenter, "algebra has a nontrivial center");
    }
    int n = alg.n;
    double check = struct_tol(tol);
    for (int attempt = 0; attempt < 8; attempt++) {
        Rng rng(derive_seed(seed, 17 + attempt));
        CMatrix h = CMatrix::Zero(n, n);
        for (const CMatrix &b : alg.basis) {
            h += rng.complex_normal() * b;
        }
        h = ((h + h.adjoint()) / 2.0).eval();
        std::vector<CMatrix> family = spectral_split(h, CMatrix::Identity(n, n));
        // Split any projector P for which P alg P is larger than C P.
        bool changed = true;
        for (int guard = 0; changed && guard <= n; guard++) {
            changed = false;
            std::vector<CMatrix> next;
            for (const CMatrix &p : family) {
                CMatrix splitter;
                if (find_splitter(alg, p, check, &splitter)) {
                    std::vector<CMatrix> parts = spectral_split(splitter, projector_range(p));
                    if (parts.size() > 1) {
                        changed = true;
                        next.insert(next.end(), parts.begin(), parts.end());
                        continue;
                    }
                }
                next.push_back(p);
            }
            family = std::move(next);
        }
        if (projector_family_ok(alg, family, check)) {
            return ProjectorFamily{std::move(family)};
        }
        // DegenerateSample: draw a new element.
    }
    throw QcaError(ErrorKind::NumericalFailure, "no valid projector family after resampling");
}

double factorization_residual(const GeneratedAlgebra &alg, const Factorization &f, bool second) {
    FactorShape shape({f.p, f.q});
    IndexSet region = {second ? 1 : 0};
    double worst = 0;
    for (const CMatrix &b : alg.basis) {
        CMatrix m = f.w * b * f.w.adjoint();
        worst = std::max(worst, localization_residual(m, shape, region));
    }
    return worst;
}

Factorization factor_one(const GeneratedAlgebra &alg, uint64_t seed, double tol) {
    ProjectorFamily fam = maximal_projector_family(alg, seed, tol);
    int n = alg.n;
    int p = (int)fam.projectors.size();
    if (n % p != 0) {
        throw QcaError(ErrorKind::NumericalFailure, "projector ranks do not divide n");
    }
    int q = n / p;
    CMatrix cols(n, n);
    for (int i = 0; i < p; i++) {
        CMatrix r = projector_range(fam.projectors[i]);
        if (r.cols() != q) {
            throw QcaError(ErrorKind::NumericalFailure, "projector rank mismatch");
        }
        cols.middleCols(i * q, q) = r;
    }
    CMatrix u = cols.adjoint();
    double check = std::max(tol, 1e-7);
    for (int attempt = 0; attempt < 8; attempt++) {
        Rng rng(derive_seed(seed, 101 + attempt));
        CMatrix r = CMatrix::Zero(n, n);
        for (const CMatrix &b : alg.basis) {
            r += rng.complex_normal() * b;
        }
        r = u * r * u.adjoint();
        // Blocks of the first block-row connect cell 0 to every other cell; each
        // is proportional to a unitary.
        CMatrix v = CMatrix::Zero(n, n);
        bool degenerate = false;
        double scale = r.squaredNorm() / n;
        for (int j = 0; j < p; j++) {
            CMatrix blk = r.block(0, j * q, q, q);
            double lambda = blk.squaredNorm() / q;
            if (lambda <= 1e-12 * scale) {
                degenerate = true;
                break;
            }
            v.block(j * q, j * q, q, q) = blk / std::sqrt(lambda);
        }
        if (degenerate) {
            continue;
        }
        Factorization f{v * u, p, q};
        for (int k = 0; k < n; k++) {
            cd x = f.w(k, 0);
            if (std::abs(x) > 1e-12) {
                f.w *= std::conj(x) / std::abs(x);
                break;
            }
        }
        if (is_unitary(f.w, check) && factorization_residual(alg, f) <= check) {
            return f;
        }
    }
    throw QcaError(ErrorKind::NumericalFailure, "factorization did not converge");
}

Factorization factor_pair(const GeneratedAlgebra &a, const GeneratedAlgebra &b, uint64_t seed, double tol) {
    if (a.n != b.n) {
        throw QcaError(ErrorKind::DimensionMismatch, "algebras act on different spaces");
    }
    int n = a.n;
    double check = struct_tol(tol);
    for (const CMatrix &x : a.basis) {
        for (const CMatrix &y : b.basis) {
            if (max_abs(x * y - y * x) > check) {
                throw QcaError(ErrorKind::NotCommuting, "algebras do not commute");
            }
        }
    }
    // Commuting algebras generate span{x y}.
    SpanBuilder s(n, kRankTol);
    for (const CMatrix &x : a.basis) {
        for (const CMatrix &y : b.basis) {
            s.add(x * y, 1.0);
            if (s.full()) {
                break;
            }
        }
        if (s.full()) {
            break;
        }
    }
    if (!s.full()) {
        throw QcaError(ErrorKind::NotGenerating, "algebras do not generate M_n");
    }
    Factorization f = factor_one(a, seed, tol);
    if (factorization_residual(b, f, true) > std::max(tol, 1e-7)) {
        throw QcaError(ErrorKind::NumericalFailure, "second algebra does not land in I_p tensor M_q");
    }
    return f;
}

GeneratedAlgebra restrict(const GeneratedAlgebra &alg, const FactorShape &shape, const IndexSet &keep) {
    if (shape.total() != alg.n) {
        throw QcaError(ErrorKind::DimensionMismatch, "shape does not match algebra");
    }
    std::vector<CMatrix> gens;
    gens.reserve(alg.basis.size());
    for (const CMatrix &b : alg.basis) {
        gens.push_back(partial_trace(b, shape, keep));
    }
    return close(gens, (int)shape.dim_of(normalized_region(shape, keep)));
}

}  // namespace qca
