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

#include "qca/tensor_core.h"

#include <algorithm>
#include <cmath>

#include "qca/error.h"

namespace qca {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::NontrivialCenter:
            return "NontrivialCenter";
        case ErrorKind::DegenerateSample:
            return "DegenerateSample";
        case ErrorKind::NumericalFailure:
            return "NumericalFailure";
        case ErrorKind::NotCommuting:
            return "NotCommuting";
        case ErrorKind::NotGenerating:
            return "NotGenerating";
        case ErrorKind::IndivisibleWidth:
            return "IndivisibleWidth";
        case ErrorKind::InvalidRule:
            return "InvalidRule";
        case ErrorKind::WindowTooSmall:
            return "WindowTooSmall";
        case ErrorKind::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorKind::NotLocal:
            return "NotLocal";
        case ErrorKind::IsoSolveFailed:
            return "IsoSolveFailed";
        case ErrorKind::NotSeparable:
            return "NotSeparable";
        case ErrorKind::ReconstructionMismatch:
            return "ReconstructionMismatch";
        case ErrorKind::UnsupportedWindow:
            return "UnsupportedWindow";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

FactorShape::FactorShape(std::vector<int> d) : dims(std::move(d)) {
    for (int x : dims) {
        if (x <= 0) {
            throw QcaError(ErrorKind::DimensionMismatch, "factor dimensions must be positive");
        }
    }
}

FactorShape FactorShape::uniform(int dim, int count) {
    return FactorShape(std::vector<int>(count, dim));
}

int64_t FactorShape::total() const {
    int64_t t = 1;
    for (int x : dims) {
        t *= x;
    }
    return t;
}

int64_t FactorShape::dim_of(const IndexSet &factors) const {
    int64_t t = 1;
    for (int f : factors) {
        t *= dims.at(f);
    }
    return t;
}

IndexSet FactorShape::complement(const IndexSet &factors) const {
    IndexSet out;
    for (int f = 0; f < size(); f++) {
        if (std::find(factors.begin(), factors.end(), f) == factors.end()) {
            out.push_back(f);
        }
    }
    return out;
}

IndexSet normalized_region(const FactorShape &shape, const IndexSet &region) {
    IndexSet r = region;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) {
        throw QcaError(ErrorKind::DimensionMismatch, "duplicate factor index in region");
    }
    for (int f : r) {
        if (f < 0 || f >= shape.size()) {
            throw QcaError(ErrorKind::DimensionMismatch, "factor index out of range");
        }
    }
    return r;
}

FactorSplit::FactorSplit(const FactorShape &shape, const IndexSet &keep) {
    IndexSet k = normalized_region(shape, keep);
    int nf = shape.size();
    std::vector<bool> is_kept(nf, false);
    for (int f : k) {
        is_kept[f] = true;
    }
    // Strides of each factor inside the kept or the traced sub-index.
    std::vector<int64_t> stride(nf, 0);
    for (int f = nf - 1; f >= 0; f--) {
        if (is_kept[f]) {
            stride[f] = kept_dim_;
            kept_dim_ *= shape.dims[f];
        } else {
            stride[f] = rest_dim_;
            rest_dim_ *= shape.dims[f];
        }
    }
    int64_t n = shape.total();
    kept_.resize(n);
    rest_.resize(n);
    join_.resize(n);
    std::vector<int> digit(nf, 0);
    int64_t ki = 0, ri = 0;
    for (int64_t i = 0; i < n; i++) {
        kept_[i] = ki;
        rest_[i] = ri;
        join_[ki * rest_dim_ + ri] = i;
        for (int f = nf - 1; f >= 0; f--) {
            int64_t &acc = is_kept[f] ? ki : ri;
            if (++digit[f] < shape.dims[f]) {
                acc += stride[f];
                break;
            }
            acc -= stride[f] * (shape.dims[f] - 1);
            digit[f] = 0;
        }
    }
}

std::vector<int> index_digits(int64_t index, const std::vector<int> &dims) {
    std::vector<int> out(dims.size());
    for (int f = (int)dims.size() - 1; f >= 0; f--) {
        out[f] = (int)(index % dims[f]);
        index /= dims[f];
    }
    return out;
}

int64_t digits_index(const std::vector<int> &digits, const std::vector<int> &dims) {
    int64_t out = 0;
    for (size_t f = 0; f < dims.size(); f++) {
        out = out * dims[f] + digits[f];
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix dagger(const CMatrix &m) {
    return m.adjoint();
}

cd hs_inner(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw QcaError(ErrorKind::DimensionMismatch, "hs_inner of differently shaped matrices");
    }
    return (a.conjugate().cwiseProduct(b)).sum();
}

double max_abs(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const CMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw QcaError(ErrorKind::DimensionMismatch, "is_unitary needs a square matrix");
    }
    CMatrix p = m.adjoint() * m;
    p -= CMatrix::Identity(m.rows(), m.cols());
    return max_abs(p) <= tol;
}

bool is_unitary(const SparseCMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw QcaError(ErrorKind::DimensionMismatch, "is_unitary needs a square matrix");
    }
    double n = (double)m.rows();
    if ((double)m.nonZeros() > 0.05 * n * n) {
        return is_unitary(CMatrix(m), tol);
    }
    SparseCMatrix id(m.rows(), m.cols());
    id.setIdentity();
    SparseCMatrix p = SparseCMatrix(m.adjoint()) * m;
    p -= id;
    double worst = 0;
    for (int k = 0; k < p.outerSize(); k++) {
        for (SparseCMatrix::InnerIterator it(p, k); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    return worst <= tol;
}

static void check_square(int64_t rows, int64_t cols, const FactorShape &shape) {
    if (rows != cols || rows != shape.total()) {
        throw QcaError(ErrorKind::DimensionMismatch, "matrix does not match factor shape");
    }
}

CMatrix partial_trace(const CMatrix &m, const FactorShape &shape, const IndexSet &keep) {
    check_square(m.rows(), m.cols(), shape);
    FactorSplit s(shape, keep);
    CMatrix out = CMatrix::Zero(s.kept_dim(), s.kept_dim());
    for (int64_t j = 0; j < s.total(); j++) {
        int64_t r = s.rest(j), kj = s.kept(j);
        for (int64_t ki = 0; ki < s.kept_dim(); ki++) {
            out(ki, kj) += m(s.join(ki, r), j);
        }
    }
    return out;
}

CMatrix partial_trace(const SparseCMatrix &m, const FactorShape &shape, const IndexSet &keep) {
    check_square(m.rows(), m.cols(), shape);
    FactorSplit s(shape, keep);
    CMatrix out = CMatrix::Zero(s.kept_dim(), s.kept_dim());
    for (int k = 0; k < m.outerSize(); k++) {
        for (SparseCMatrix::InnerIterator it(m, k); it; ++it) {
            if (s.rest(it.row()) == s.rest(it.col())) {
                out(s.kept(it.row()), s.kept(it.col())) += it.value();
            }
        }
    }
    return out;
}

CMatrix embed(const CMatrix &local, const FactorShape &shape, const IndexSet &region) {
    FactorSplit s(shape, region);
    if (local.rows() != s.kept_dim() || local.cols() != s.kept_dim()) {
        throw QcaError(ErrorKind::DimensionMismatch, "local operator does not match region");
    }
    CMatrix out = CMatrix::Zero(s.total(), s.total());
    for (int64_t r = 0; r < s.rest_dim(); r++) {
        for (int64_t b = 0; b < s.kept_dim(); b++) {
            for (int64_t a = 0; a < s.kept_dim(); a++) {
                out(s.join(a, r), s.join(b, r)) = local(a, b);
            }
        }
    }
    return out;
}

double localization_residual(const CMatrix &a, const FactorShape &shape, const IndexSet &region) {
    check_square(a.rows(), a.cols(), shape);
    FactorSplit s(shape, region);
    CMatrix x = partial_trace(a, shape, region) / (double)s.rest_dim();
    double worst = 0;
    for (int64_t j = 0; j < s.total(); j++) {
        int64_t rj = s.rest(j), kj = s.kept(j);
        for (int64_t i = 0; i < s.total(); i++) {
            cd expected = s.rest(i) == rj ? x(s.kept(i), kj) : cd(0);
            worst = std::max(worst, std::abs(a(i, j) - expected));
        }
    }
    return worst;
}

double localization_residual(const SparseCMatrix &a, const FactorShape &shape, const IndexSet &region) {
    check_square(a.rows(), a.cols(), shape);
    FactorSplit s(shape, region);
    CMatrix x = partial_trace(a, shape, region) / (double)s.rest_dim();
    double worst = 0;
    // Entries stored in `a`.
    for (int k = 0; k < a.outerSize(); k++) {
        for (SparseCMatrix::InnerIterator it(a, k); it; ++it) {
            cd expected = s.rest(it.row()) == s.rest(it.col()) ? x(s.kept(it.row()), s.kept(it.col())) : cd(0);
            worst = std::max(worst, std::abs(it.value() - expected));
        }
    }
    // Entries of x tensor identity that `a` might not store.
    for (int64_t b = 0; b < s.kept_dim(); b++) {
        for (int64_t c = 0; c < s.kept_dim(); c++) {
            cd v = x(c, b);
            if (v == cd(0)) {
                continue;
            }
            for (int64_t r = 0; r < s.rest_dim(); r++) {
                worst = std::max(worst, std::abs(a.coeff(s.join(c, r), s.join(b, r)) - v));
            }
        }
    }
    return worst;
}

bool is_localized(const CMatrix &a, const FactorShape &shape, const IndexSet &region, double tol) {
    return localization_residual(a, shape, region) <= tol;
}

bool is_localized(const SparseCMatrix &a, const FactorShape &shape, const IndexSet &region, double tol) {
    return localization_residual(a, shape, region) <= tol;
}

CMatrix apply_on_factor(const CMatrix &m, const std::vector<int> &row_dims, int factor, const CMatrix &op) {
    using RowMajor = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    int64_t left = 1, right = 1;
    for (int f = 0; f < factor; f++) {
        left *= row_dims[f];
    }
    for (int f = factor + 1; f < (int)row_dims.size(); f++) {
        right *= row_dims[f];
    }
    int64_t od = row_dims[factor];
    int64_t nd = op.rows();
    if (op.cols() != od || left * od * right != m.rows()) {
        throw QcaError(ErrorKind::DimensionMismatch, "operator does not fit the factor");
    }
    CMatrix out(left * nd * right, m.cols());
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        const cd *src = m.data() + c * m.rows();
        cd *dst = out.data() + c * out.rows();
        if (right == 1) {
            Eigen::Map<const CMatrix> in(src, od, left);
            Eigen::Map<CMatrix> o(dst, nd, left);
            o.noalias() = op * in;
            continue;
        }
        for (int64_t l = 0; l < left; l++) {
            Eigen::Map<const RowMajor> in(src + l * od * right, od, right);
            Eigen::Map<RowMajor> o(dst + l * nd * right, nd, right);
            o.noalias() = op * in;
        }
    }
    return out;
}

double trace_distance(const CMatrix &rho, const CMatrix &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw QcaError(ErrorKind::DimensionMismatch, "trace_distance of differently shaped matrices");
    }
    CMatrix d = rho - sigma;
    CMatrix h = (d + d.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum() / 2.0;
}

SparseCMatrix to_sparse(const CMatrix &m, double prune) {
    std::vector<Eigen::Triplet<cd>> t;
    for (Eigen::Index j = 0; j < m.cols(); j++) {
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            if (std::abs(m(i, j)) > prune) {
                t.emplace_back((int)i, (int)j, m(i, j));
            }
        }
    }
    SparseCMatrix out(m.rows(), m.cols());
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

}  // namespace qca
