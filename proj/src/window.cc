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

#include <algorithm>
#include <cmath>

#include "qca/error.h"
#include "qca/model.h"

namespace qca {

namespace {

// Largest dense window we are willing to build (a d^w x d^w complex matrix).
constexpr int64_t kMaxDenseWindow = 4096;
constexpr int64_t kMaxSparseWindow = int64_t(1) << 22;

int64_t window_dim(int d, int width) {
    if (width < 1) {
        throw QcaError(ErrorKind::WindowTooSmall, "window width must be positive");
    }
    double est = std::pow((double)d, (double)width);
    if (est > (double)kMaxSparseWindow) {
        throw QcaError(ErrorKind::DimensionMismatch, "window dimension too large");
    }
    return FactorShape::uniform(d, width).total();
}

}  // namespace

WindowOperator quantize(const ClassicalRule &rule, int width, QuantizeBoundary boundary) {
    int d = rule.alphabet.dim();
    int64_t n = window_dim(d, width);
    if (boundary == QuantizeBoundary::Auto) {
        bool absorbing = true;
        for (int x = 0; x < d; x++) {
            absorbing = absorbing && rule(x, 0) == 0;
        }
        boundary = absorbing ? QuantizeBoundary::Open : QuantizeBoundary::Periodic;
    }
    bool open = boundary == QuantizeBoundary::Open;
    std::vector<int> dims(width, d);
    std::vector<Eigen::Triplet<cd>> trips;
    trips.reserve(n);
    std::vector<int> out(width);
    for (int64_t col = 0; col < n; col++) {
        std::vector<int> c = index_digits(col, dims);
        for (int j = 0; j < width; j++) {
            if (open) {
                out[j] = rule(j ? c[j - 1] : 0, c[j]);
            } else {
                out[j] = rule(c[j], c[(j + 1) % width]);
            }
        }
        trips.emplace_back((int)digits_index(out, dims), (int)col, cd(1));
    }
    WindowOperator w;
    w.alphabet = rule.alphabet;
    w.width = width;
    w.matrix = SparseCMatrix(n, n);
    w.matrix.setFromTriplets(trips.begin(), trips.end());
    w.boundary = open ? Boundary::Open : Boundary::Periodic;
    w.output_offset = open ? -1 : 0;
    return w;
}

WindowOperator window_matrix(const BlockQCA &g, int width) {
    g.validate();
    int d = g.d;
    int64_t n = window_dim(d, width);
    if (n > kMaxDenseWindow) {
        throw QcaError(ErrorKind::DimensionMismatch, "window too large for a dense block presentation");
    }
    std::vector<int> cell_dims(width, d);
    CMatrix m = CMatrix::Identity(n, n);
    for (int i = 0; i < width; i++) {
        m = apply_on_factor(m, cell_dims, i, g.u);
    }
    // Half-cell digits are (a_0, b_0, a_1, b_1, ...). Rotate a_0 to the end so
    // that consecutive pairs (b_i, a_{i+1}) form the output cells.
    std::vector<int> half_old, half_new;
    for (int i = 0; i < width; i++) {
        half_old.push_back(g.q);
        half_old.push_back(g.p);
        half_new.push_back(g.p);
        half_new.push_back(g.q);
    }
    std::vector<int64_t> target(n);
    for (int64_t r = 0; r < n; r++) {
        std::vector<int> h = index_digits(r, half_old);
        std::rotate(h.begin(), h.begin() + 1, h.end());
        target[r] = digits_index(h, half_new);
    }
    CMatrix rotated(n, n);
    for (int64_t c = 0; c < n; c++) {
        for (int64_t r = 0; r < n; r++) {
            rotated(target[r], c) = m(r, c);
        }
    }
    m = std::move(rotated);
    for (int i = 0; i < width; i++) {
        m = apply_on_factor(m, cell_dims, i, g.v);
    }
    WindowOperator w;
    w.alphabet = g.alphabet;
    w.width = width;
    w.matrix = to_sparse(m, kPruneTol);
    w.boundary = Boundary::Periodic;
    w.output_offset = 0;
    return w;
}

WindowOperator group_cells(const WindowOperator &x, int s) {
    if (s < 1 || x.width % s != 0 || x.output_offset % s != 0) {
        throw QcaError(ErrorKind::IndivisibleWidth, "window width not divisible by the group size");
    }
    // The lexicographic basis of s consecutive cells is the grouped basis.
    WindowOperator out = x;
    out.alphabet = x.alphabet.grouped(s);
    out.width = x.width / s;
    out.output_offset = x.output_offset / s;
    return out;
}

CellConjugator::CellConjugator(const WindowOperator &g, bool forward) : d_(g.d()), width_(g.width) {
    h_ = forward ? g.matrix : SparseCMatrix(g.matrix.adjoint());
    double n = (double)h_.rows();
    dense_ = (double)h_.nonZeros() > 0.05 * n * n;
    if (dense_) {
        hd_ = CMatrix(h_);
    }
}

SparseCMatrix CellConjugator::image(int position, int k, int l) const {
    if (position < 0 || position >= width_) {
        throw QcaError(ErrorKind::WindowTooSmall, "cell outside the window");
    }
    FactorSplit split(FactorShape::uniform(d_, width_), {position});
    int64_t n = split.total();
    int64_t m = split.rest_dim();
    // H (E_kl tensor I) H^dagger = H_k H_l^dagger with H_k the columns of H whose
    // digit at `position` is k.
    if (dense_) {
        CMatrix hk(n, m), hl(n, m);
        for (int64_t r = 0; r < m; r++) {
            hk.col(r) = hd_.col(split.join(k, r));
            hl.col(r) = hd_.col(split.join(l, r));
        }
        CMatrix prod = hk * hl.adjoint();
        return to_sparse(prod, 0.0);
    }
    auto columns = [&](int digit) {
        std::vector<Eigen::Triplet<cd>> t;
        for (int64_t r = 0; r < m; r++) {
            for (SparseCMatrix::InnerIterator it(h_, split.join(digit, r)); it; ++it) {
                t.emplace_back((int)it.row(), (int)r, it.value());
            }
        }
        SparseCMatrix out(n, m);
        out.setFromTriplets(t.begin(), t.end());
        return out;
    };
    SparseCMatrix hk = columns(k);
    SparseCMatrix hl = columns(l);
    SparseCMatrix prod = hk * SparseCMatrix(hl.adjoint());
    return prod;
}

}  // namespace qca
