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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.h"
#include "qca/decomposer.h"
#include "qca/error.h"
#include "qca/gallery.h"
#include "qca/io.h"
#include "qca/kari.h"
#include "qca/random.h"
#include "qca/verifier.h"

using namespace qca;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Blocks decomposed by criterion 3, reused by 10 and 11.
std::vector<BlockQCA> g_decomposed;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Trace distance from the eigenvalues of the Hermitian difference.
double eig_trace_distance(const CMatrix &a, const CMatrix &b) {
    CMatrix diff = a - b;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(((diff + diff.adjoint()) / 2.0).eval());
    return es.eigenvalues().cwiseAbs().sum() / 2;
}

double state_diff(const SparseState &a, const SparseState &b) {
    double worst = 0;
    for (const auto &[c, amp] : a.terms) {
        auto it = b.terms.find(c);
        worst = std::max(worst, std::abs(amp - (it == b.terms.end() ? cd(0) : it->second)));
    }
    for (const auto &[c, amp] : b.terms) {
        if (!a.terms.count(c)) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

SparseState random_state(const Alphabet &a, Rng &rng, int length) {
    SparseState s;
    s.alphabet = a;
    for (int t = 0; t < 3; t++) {
        std::vector<int> cells(length);
        for (int &c : cells) {
            c = rng.uniform_int(0, a.dim() - 1);
        }
        s.terms[Configuration(rng.uniform_int(-2, 2), cells)] += rng.complex_normal();
    }
    s.normalize();
    return s;
}

// Largest amplitude gap between f and g on a few random line states, allowing a
// shift of g by up to one cell and one global phase.
double line_distance(
    const Alphabet &alphabet,
    const std::function<SparseState(const SparseState &)> &f,
    const std::function<SparseState(const SparseState &)> &g,
    uint64_t seed,
    int length = 3) {
    Rng rng(seed);
    std::vector<SparseState> states;
    for (int t = 0; t < 4; t++) {
        states.push_back(random_state(alphabet, rng, length));
    }
    double best = std::numeric_limits<double>::infinity();
    for (int k : {-1, 0, 1}) {
        cd phase = 0;
        double worst = 0;
        for (const SparseState &s : states) {
            SparseState a = f(s);
            SparseState b = shift(g(s), k);
            if (phase == cd(0)) {
                cd ov = 0;
                for (const auto &[c, amp] : b.terms) {
                    auto it = a.terms.find(c);
                    if (it != a.terms.end()) {
                        ov += std::conj(amp) * it->second;
                    }
                }
                phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cd(1);
            }
            for (auto &[c, amp] : b.terms) {
                amp *= phase;
            }
            worst = std::max(worst, state_diff(a, b));
        }
        best = std::min(best, worst);
    }
    return best;
}

// Splits each Toffoli cell 2a + b into subcells a at 2i and b at 2i + 1.
SparseState to_bits(const SparseState &s) {
    SparseState out;
    out.alphabet = Alphabet::numbered(2);
    for (const auto &[c, amp] : s.terms) {
        std::map<int64_t, int> bits;
        for (const auto &[i, x] : c.to_map()) {
            bits[2 * i] = x >> 1;
            bits[2 * i + 1] = x & 1;
        }
        out.terms[Configuration::from_map(bits)] += amp;
    }
    return out;
}

Outcome factor_one_round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<int, int>> shapes;
    for (int p = 1; p <= 12; p++) {
        for (int q = 1; p * q <= 12; q++) {
            if (p * q > 1) {
                shapes.push_back({p, q});
            }
        }
    }
    Rng rng(101);
    double worst = 0;
    Outcome out;
    for (int n = 0; n < 50; n++) {
        auto [p, q] = shapes[n % shapes.size()];
        CMatrix h = haar_unitary(p * q, rng);
        GeneratedAlgebra alg = close(oracle::conjugated_factor_units(h, p, q, false), p * q);
        Factorization f = factor_one(alg, 1000 + n);
        if (f.p != p || f.q != q) {
            out.ok = false;
            out.detail = "wrong shape at case " + std::to_string(n);
            return out;
        }
        worst = std::max(worst, factorization_residual(alg, f));
        for (const CMatrix &b : alg.basis) {
            if (!oracle::localized_by_commutant(f.w * b * f.w.adjoint(), {p, q}, {0}, 1e-8)) {
                out.ok = false;
                out.detail = "commutant check failed at case " + std::to_string(n);
                return out;
            }
        }
    }
    double t = seconds_since(t0);
    out.ok = worst <= 1e-8 && t <= 30;
    out.detail = "50 cases, max residual " + fmt("%.2e", worst) + ", " + fmt("%.1f s", t);
    return out;
}

Outcome factor_pair_round_trip() {
    Rng rng(202);
    double worst = 0;
    for (int n = 0; n < 30; n++) {
        int p = rng.uniform_int(2, 4);
        int q = rng.uniform_int(2, 3);
        CMatrix h = haar_unitary(p * q, rng);
        GeneratedAlgebra a = close(oracle::conjugated_factor_units(h, p, q, false), p * q);
        GeneratedAlgebra b = close(oracle::conjugated_factor_units(h, p, q, true), p * q);
        Factorization f = factor_pair(a, b, 2000 + n);
        worst = std::max({worst, factorization_residual(a, f), factorization_residual(b, f, true)});
    }
    return {worst <= 1e-8, "30 cases, max residual " + fmt("%.2e", worst)};
}

Outcome decomposition_round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    double worst_cert = 0, worst_line = 0;
    int n = 0;
    for (int d : {2, 4, 6}) {
        for (int k = 0; k < 10; k++, n++) {
            BlockQCA g = random_block_qca(d, 3000 + n);
            Decomposition dec = decompose(window_matrix(g, 4), 4000 + n);
            worst_cert = std::max(worst_cert, dec.certification.residual);
            BlockQCA h = dec.block;
            worst_line = std::max(
                worst_line,
                line_distance(
                    g.alphabet,
                    [&](const SparseState &s) { return apply_block(s, g); },
                    [&](const SparseState &s) { return apply_block(s, h); },
                    5000 + n));
            g_decomposed.push_back(h);
        }
    }
    double t = seconds_since(t0);
    bool ok = worst_cert <= 1e-7 && worst_line <= 1e-7 && t <= 120;
    return {ok,
            "30 automata, max certification residual " + fmt("%.2e", worst_cert) + ", max line gap " +
                fmt("%.2e", worst_line) + ", " + fmt("%.1f s", t)};
}

Outcome block_semantics() {
    const int width = 6;
    double worst = 0;
    int columns = 0;
    for (auto [d, p] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 3}}) {
        BlockQCA g = random_block_qca(d, 6000 + 10 * d + p, p);
        CMatrix v_all = oracle::kron_all(std::vector<CMatrix>(width, g.v));
        int64_t count = 1;
        for (int i = 1; i < width; i++) {
            count *= d;
        }
        std::vector<int> dims(width, d);
        for (int64_t idx = 0; idx < count; idx++) {
            // Ring cell 0 stays quiescent; cells 1..5 carry the configuration.
            std::vector<int> ring(width, 0);
            int64_t x = idx;
            for (int i = width - 1; i >= 1; i--) {
                ring[i] = (int)(x % d);
                x /= d;
            }
            CVector col = oracle::block_column(g, ring, v_all);
            std::vector<int> line(ring.begin() + 1, ring.end());
            SparseState out = apply_block(SparseState::basis(g.alphabet, Configuration(1, line)), g);
            SparseState expect;
            expect.alphabet = g.alphabet;
            for (int64_t o = 0; o < col.size(); o++) {
                if (std::abs(col(o)) > 0) {
                    expect.terms[Configuration(0, index_digits(o, dims))] += col(o);
                }
            }
            worst = std::max(worst, state_diff(out, expect));
            columns++;
        }
    }
    return {worst <= 1e-10, std::to_string(columns) + " basis configurations, max gap " + fmt("%.2e", worst)};
}

Outcome xor_cat_signalling() {
    double worst_td = 0, worst_ctx = 0, worst_expect = 0, worst_lib = 0;
    for (int len = 2; len <= 6; len++) {
        WindowOperator w = quantize(xor_ca(), len + 3);
        SparseState plus = xor_cat_state(1, len, 1);
        SparseState minus = xor_cat_state(1, len, -1);
        // The witness reads the cell left of the cat, with context {0, 1}.
        std::vector<int64_t> context = {0, 1};
        CMatrix ctx_plus = restrict_state(plus, context);
        CMatrix ctx_minus = restrict_state(minus, context);
        CMatrix expect = CMatrix::Zero(9, 9);
        expect(1, 1) = expect(2, 2) = 0.5;
        worst_ctx = std::max(worst_ctx, oracle::max_diff(ctx_plus, ctx_minus));
        worst_expect = std::max(worst_expect, oracle::max_diff(ctx_plus, expect));
        SignallingResult r = detect_signalling(w, plus, minus, 0, context);
        worst_lib = std::max(worst_lib, std::abs(r.trace_distance - 1.0));
        // Same quantity from the classical step and an eigenvalue trace distance.
        double td = eig_trace_distance(
            restrict_state(apply_classical(plus, xor_ca()), {0}), restrict_state(apply_classical(minus, xor_ca()), {0}));
        worst_td = std::max(worst_td, std::abs(td - 1.0));
    }
    bool ok = worst_td <= 1e-9 && worst_lib <= 1e-9 && worst_ctx <= 1e-12 && worst_expect <= 1e-12;
    return {ok,
            "lengths 2..6, |D - 1| <= " + fmt("%.1e", std::max(worst_td, worst_lib)) + ", context gap " +
                fmt("%.1e", worst_ctx)};
}

Outcome xor_nonlocal() {
    const int width = 8;
    WindowOperator w = quantize(xor_ca(), width);
    int top = default_max_radius(width);
    for (int r = 0; r <= top; r++) {
        NeighborhoodReport rep = neighborhood(w, r);
        if (rep.status() != LocalityStatus::Nonlocal || !rep.witness) {
            return {false, "radius " + std::to_string(r) + " not reported nonlocal"};
        }
        const SignallingWitness &wit = *rep.witness;
        if (oracle::max_diff(restrict_state(wit.state_a, wit.context), restrict_state(wit.state_b, wit.context)) > 1e-12 ||
            wit.trace_distance <= 1e-6) {
            return {false, "radius " + std::to_string(r) + " witness does not hold"};
        }
    }
    return {true, "window 8, radii 0.." + std::to_string(top) + " all nonlocal with witnesses"};
}

Outcome toffoli_probe() {
    const int64_t cell = 3;
    const double h = 0.5;
    double worst = 0;
    for (int c : {0, 1}) {
        SparseState out = apply_classical(toffoli_probe_state(cell, c), toffoli_ca());
        // Expected: cell - 1 holds (0, a) with a in |+> or |->, cell holds (|->, c).
        SparseState expect;
        expect.alphabet = toffoli_ca().alphabet;
        for (int y = 0; y < 2; y++) {
            for (int x = 0; x < 2; x++) {
                double sign = (x ? -1.0 : 1.0) * ((c && y) ? -1.0 : 1.0);
                expect.terms[Configuration::from_map({{cell - 1, y}, {cell, 2 * x + c}})] += sign * h;
            }
        }
        worst = std::max(worst, state_diff(out, expect));
        // The same step on subcells.
        worst = std::max(worst, state_diff(toffoli_subcell_step(to_bits(toffoli_probe_state(cell, c))), to_bits(out)));
    }
    NeighborhoodReport rep = neighborhood(quantize(toffoli_ca(), 5), 1);
    bool local = rep.status() == LocalityStatus::Local && rep.neighborhood == Interval{0, 2};
    double radius = rep.radius();
    return {worst <= 1e-10 && local && radius > 0.5,
            "probe gap " + fmt("%.1e", worst) + ", neighborhood [0, 2], radius " + fmt("%.1f", radius)};
}

Outcome grouped_toffoli() {
    WindowOperator w = group_cells(quantize(toffoli_ca(), 6), 2);
    Decomposition dec = decompose(w, 7);
    ClassicalRule grouped = group_cells(toffoli_ca(), 2);
    BlockQCA b = dec.block;
    double gap = line_distance(
        w.alphabet,
        [&](const SparseState &s) { return apply_classical(s, grouped); },
        [&](const SparseState &s) { return apply_block(s, b); },
        8,
        2);
    bool ok = dec.certification.residual <= 1e-7 && gap <= 1e-7;
    return {ok,
            "d = " + std::to_string(b.d) + ", residual " + fmt("%.2e", dec.certification.residual) + ", line gap " +
                fmt("%.2e", gap)};
}

Outcome kari_properties() {
    Rng rng(909);
    for (int n = 0; n < 1000; n++) {
        KariGrid g;
        for (int x = 0; x < 5; x++) {
            for (int y = 0; y < 5; y++) {
                g.set(x, y, (uint16_t)rng.uniform_int(0, 511));
            }
        }
        if (!(kari_step(kari_step(g)) == g)) {
            return {false, "F^2 != id on grid " + std::to_string(n)};
        }
        int dx = rng.uniform_int(-3, 3), dy = rng.uniform_int(-3, 3);
        if (!(kari_step(g.translated(dx, dy)) == kari_step(g).translated(dx, dy))) {
            return {false, "not shift invariant on grid " + std::to_string(n)};
        }
    }
    return {true, "1000 random 5x5 grids"};
}

std::vector<std::pair<std::string, BlockQCA>> shipped_blocks() {
    std::vector<std::pair<std::string, BlockQCA>> out;
    for (const char *name : {"shift", "swap", "phase"}) {
        QcaSpec spec = qca_spec_from_json(read_json_file(std::string(QCA_SPECS_DIR) + "/" + name + ".json"));
        out.push_back({name, spec.block});
    }
    for (size_t i = 0; i < g_decomposed.size(); i++) {
        out.push_back({"decomposed " + std::to_string(i), g_decomposed[i]});
    }
    return out;
}

Outcome inverse_locality() {
    int count = 0;
    for (const auto &[name, g] : shipped_blocks()) {
        WindowOperator w = window_matrix(g, 4);
        NeighborhoodReport rep = neighborhood(w, 0);
        if (rep.status() != LocalityStatus::Local || rep.neighborhood->lo < 0 || rep.neighborhood->hi > 1) {
            continue;
        }
        if (!check_inverse_locality(w, {0, 1})) {
            return {false, name + ": inverse not localized on {-1, 0}"};
        }
        count++;
    }
    return {count > 0, std::to_string(count) + " automata with N in {0, 1}"};
}

Outcome vacuum_fixed() {
    int count = 0;
    for (const auto &[name, g] : shipped_blocks()) {
        SparseState vac = SparseState::basis(g.alphabet, Configuration());
        SparseState out = apply_block(vac, g);
        if (state_diff(out, vac) > 1e-12) {
            return {false, name + ": vacuum moved"};
        }
        count++;
    }
    return {true, std::to_string(count) + " blocks fix the all-quiescent state"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "factor_one recovers hidden tensor splits", factor_one_round_trip},
        {2, "factor_pair recovers commuting pairs", factor_pair_round_trip},
        {3, "block decomposition round trip", decomposition_round_trip},
        {4, "block application matches dense ring oracle", block_semantics},
        {5, "XOR cat states signal at the probe", xor_cat_signalling},
        {6, "XOR is nonlocal at every radius", xor_nonlocal},
        {7, "Toffoli probe and radius", toffoli_probe},
        {8, "grouped Toffoli decomposes", grouped_toffoli},
        {9, "Kari rule is an involution and shift invariant", kari_properties},
        {10, "inverse neighborhood of decomposed automata", inverse_locality},
        {11, "vacuum is a fixed point", vacuum_fixed},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf(
            "%s [%2d] %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", (int)std::size(criteria) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
