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

#include "qca/verifier.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qca/error.h"

namespace qca {

namespace {

int64_t probe_line_cell(int width) {
    return (width - 2) / 2;
}

/// Input window positions, as an IndexSet, of line cells [first, last].
IndexSet positions(int64_t first, int64_t last) {
    IndexSet out;
    for (int64_t i = first; i <= last; i++) {
        out.push_back((int)i);
    }
    return out;
}

SparseState basis_state(const Alphabet &alphabet, int64_t index, int width) {
    return SparseState::basis(alphabet, window_configuration(index, alphabet.dim(), width));
}

SparseState superposition(const Alphabet &alphabet, int64_t i, int64_t j, cd phase, int width) {
    SparseState s;
    s.alphabet = alphabet;
    int d = alphabet.dim();
    s.terms[window_configuration(i, d, width)] = 1.0 / std::sqrt(2.0);
    s.terms[window_configuration(j, d, width)] = phase / std::sqrt(2.0);
    return s;
}

/// Two input states that agree on `region` but differ in the expectation of the
/// Hermitian `o`. Returns false if `o` is localized on `region` within tol.
bool witness_states(
    const SparseCMatrix &o,
    const WindowOperator &g,
    const IndexSet &region,
    double tol,
    SparseState *a,
    SparseState *b) {
    FactorShape shape = g.shape();
    FactorSplit s(shape, region);
    // Coherence between different configurations outside the region.
    double best = 0;
    int64_t bi = -1, bj = -1;
    cd bv = 0;
    for (int k = 0; k < o.outerSize(); k++) {
        for (SparseCMatrix::InnerIterator it(o, k); it; ++it) {
            if (s.rest(it.row()) != s.rest(it.col()) && std::abs(it.value()) > best) {
                best = std::abs(it.value());
                bi = it.row();
                bj = it.col();
                bv = it.value();
            }
        }
    }
    if (best > tol) {
        cd phase = std::conj(bv) / std::abs(bv);
        *a = superposition(g.alphabet, bi, bj, phase, g.width);
        *b = superposition(g.alphabet, bi, bj, -phase, g.width);
        return true;
    }
    // Block diagonal outside the region: find two outside configurations r, r2
    // whose blocks differ.
    CMatrix x = partial_trace(o, shape, region) / (double)s.rest_dim();
    best = 0;
    int64_t ka = 0, kb = 0, r0 = 0;
    for (int64_t col = 0; col < s.kept_dim(); col++) {
        for (int64_t row = 0; row < s.kept_dim(); row++) {
            for (int64_t r = 0; r < s.rest_dim(); r++) {
                double dev = std::abs(o.coeff(s.join(row, r), s.join(col, r)) - x(row, col));
                if (dev > best) {
                    best = dev;
                    ka = row;
                    kb = col;
                    r0 = r;
                }
            }
        }
    }
    if (best <= tol) {
        return false;
    }
    auto entry = [&](int64_t row, int64_t col, int64_t r) { return o.coeff(s.join(row, r), s.join(col, r)); };
    int64_t r1 = r0;
    double far = 0;
    for (int64_t r = 0; r < s.rest_dim(); r++) {
        double dev = std::abs(entry(ka, kb, r0) - entry(ka, kb, r));
        if (dev > far) {
            far = dev;
            r1 = r;
        }
    }
    if (ka == kb) {
        *a = basis_state(g.alphabet, s.join(ka, r0), g.width);
        *b = basis_state(g.alphabet, s.join(ka, r1), g.width);
        return true;
    }
    cd dab = entry(ka, kb, r0) - entry(ka, kb, r1);
    double diag = (entry(ka, ka, r0) - entry(ka, ka, r1) + entry(kb, kb, r0) - entry(kb, kb, r1)).real() / 2;
    cd phase = std::conj(dab) / std::abs(dab);
    if (std::abs(diag - std::abs(dab)) > std::abs(diag + std::abs(dab))) {
        phase = -phase;
    }
    *a = superposition(g.alphabet, s.join(ka, r0), s.join(kb, r0), phase, g.width);
    *b = superposition(g.alphabet, s.join(ka, r1), s.join(kb, r1), phase, g.width);
    return true;
}

}  // namespace

LocalityStatus NeighborhoodReport::status() const {
    if (is_local) {
        return LocalityStatus::Local;
    }
    return witness ? LocalityStatus::Nonlocal : LocalityStatus::Inconclusive;
}

double NeighborhoodReport::radius() const {
    if (!neighborhood) {
        return std::numeric_limits<double>::infinity();
    }
    return std::max(neighborhood->hi - 0.5, 0.5 - neighborhood->lo);
}

int default_max_radius(int width) {
    return std::max(0, (width - 3) / 2);
}

bool check_unitary(const WindowOperator &g, double tol) {
    return is_unitary(g.matrix, tol);
}

bool check_shift_invariance(const WindowOperator &g, double tol) {
    int w = g.width;
    if (w < 3) {
        throw QcaError(ErrorKind::WindowTooSmall, "shift invariance needs a window of at least 3 cells");
    }
    int d = g.d();
    int64_t n = g.dim();
    // sigma moves the content of cell i to cell i + 1 (cyclically).
    std::vector<int64_t> sigma(n);
    std::vector<int> dims(w, d);
    for (int64_t k = 0; k < n; k++) {
        std::vector<int> c = index_digits(k, dims);
        std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
        sigma[k] = digits_index(c, dims);
    }
    double worst = 0;
    CVector lhs(n), rhs(n);
    for (int64_t col = 0; col < n; col++) {
        if (col % d != 0) {
            continue;  // last cell not quiescent
        }
        lhs.setZero();
        rhs.setZero();
        for (SparseCMatrix::InnerIterator it(g.matrix, sigma[col]); it; ++it) {
            lhs(it.row()) = it.value();
        }
        for (SparseCMatrix::InnerIterator it(g.matrix, col); it; ++it) {
            rhs(sigma[it.row()]) = it.value();
        }
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst <= tol;
}

NeighborhoodReport neighborhood(const WindowOperator &g, int max_radius, double tol) {
    int w = g.width;
    int64_t probe = probe_line_cell(w);
    if (max_radius < 0 || 2 * max_radius + 3 > w || probe - max_radius < 0) {
        throw QcaError(ErrorKind::WindowTooSmall, "window too small for the requested radius");
    }
    int out_pos = (int)(probe - g.output_offset);
    if (out_pos < 0 || out_pos >= w) {
        throw QcaError(ErrorKind::WindowTooSmall, "probe cell outside the output window");
    }
    NeighborhoodReport report;
    report.max_radius = max_radius;
    report.probe_cell = probe;
    FactorShape shape = g.shape();
    CellConjugator conj(g, false);
    int d = g.d();
    // E_k0 generate M_d as a *-algebra, and localized operators form a
    // *-algebra, so these d images decide locality for every single-cell E.
    std::vector<SparseCMatrix> images;
    for (int k = 0; k < d; k++) {
        images.push_back(conj.image(out_pos, k, 0));
    }
    int lo_min = -max_radius, hi_max = max_radius + 1;
    for (int len = 1; len <= hi_max - lo_min + 1 && !report.is_local; len++) {
        for (int lo = lo_min; lo + len - 1 <= hi_max; lo++) {
            IndexSet region = positions(probe + lo, probe + lo + len - 1);
            bool ok = true;
            for (const SparseCMatrix &a : images) {
                if (!is_localized(a, shape, region, tol)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                report.is_local = true;
                report.neighborhood = Interval{lo, lo + len - 1};
                break;
            }
        }
    }
    if (report.is_local) {
        return report;
    }
    IndexSet region = positions(probe + lo_min, probe + hi_max);
    double worst = -1;
    SparseCMatrix o;
    for (const SparseCMatrix &a : images) {
        SparseCMatrix adj = a.adjoint();
        SparseCMatrix parts[2] = {a + adj, (a - adj) * cd(0, 1)};
        for (SparseCMatrix &h : parts) {
            double r = localization_residual(h, shape, region);
            if (r > worst) {
                worst = r;
                o = h;
            }
        }
    }
    SparseState sa, sb;
    if (witness_states(o, g, region, tol, &sa, &sb)) {
        std::vector<int64_t> context;
        for (int c : region) {
            context.push_back(c);
        }
        SignallingResult res = detect_signalling(g, sa, sb, probe, context, tol);
        if (res.signalling) {
            report.witness = SignallingWitness{sa, sb, probe, context, res.trace_distance};
        }
    }
    return report;
}

SignallingResult detect_signalling(
    const WindowOperator &g,
    const SparseState &rho_a,
    const SparseState &rho_b,
    int64_t probe_cell,
    const std::vector<int64_t> &context_cells,
    double tol) {
    if (!(rho_a.alphabet == g.alphabet) || !(rho_b.alphabet == g.alphabet)) {
        throw QcaError(ErrorKind::DimensionMismatch, "state alphabet does not match the automaton");
    }
    CMatrix ca = restrict_state(rho_a, context_cells);
    CMatrix cb = restrict_state(rho_b, context_cells);
    if (max_abs(ca - cb) > tol) {
        throw QcaError(ErrorKind::PreconditionViolated, "input restrictions to the context differ");
    }
    int64_t pos = probe_cell - g.output_offset;
    if (pos < 0 || pos >= g.width) {
        throw QcaError(ErrorKind::WindowTooSmall, "probe cell outside the output window");
    }
    CVector oa = g.matrix * to_window_vector(rho_a, g.width);
    CVector ob = g.matrix * to_window_vector(rho_b, g.width);
    SparseState sa = from_window_vector(oa, g.alphabet, g.width, g.output_offset);
    SparseState sb = from_window_vector(ob, g.alphabet, g.width, g.output_offset);
    SignallingResult res;
    res.trace_distance = trace_distance(restrict_state(sa, {probe_cell}), restrict_state(sb, {probe_cell}));
    res.signalling = res.trace_distance > tol;
    return res;
}

bool check_inverse_locality(const WindowOperator &g, const Interval &n, double tol) {
    int w = g.width;
    int64_t cell = w / 2;
    int64_t first = cell - n.hi - g.output_offset;
    int64_t last = cell - n.lo - g.output_offset;
    if (n.lo > n.hi || first < 0 || last >= w) {
        throw QcaError(ErrorKind::WindowTooSmall, "window too small for the inverse neighborhood");
    }
    CellConjugator conj(g, true);
    FactorShape shape = g.shape();
    IndexSet region = positions(first, last);
    for (int k = 0; k < g.d(); k++) {
        if (!is_localized(conj.image((int)cell, k, 0), shape, region, tol)) {
            return false;
        }
    }
    return true;
}

VerificationReport verify(const WindowOperator &g, int max_radius, double tol) {
    VerificationReport r;
    r.unitary = check_unitary(g, tol);
    r.shift_invariant = check_shift_invariance(g, tol);
    r.locality = neighborhood(g, max_radius, tol);
    return r;
}

}  // namespace qca
