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

#include "qca/gallery.h"

#include <functional>

#include "gtest/gtest.h"

#include "oracles.h"
#include "qca/error.h"
#include "qca/kari.h"
#include "qca/random.h"
#include "qca/verifier.h"

using namespace qca;

namespace {

// Toffoli cell i = (a_i, b_i) as subcells 2i (a) and 2i+1 (b).
SparseState to_bits(const Configuration &c) {
    std::map<int64_t, int> bits;
    for (const auto &[i, x] : c.to_map()) {
        if (x >> 1) {
            bits[2 * i] = 1;
        }
        if (x & 1) {
            bits[2 * i + 1] = 1;
        }
    }
    return SparseState::basis(Alphabet::numbered(2), Configuration::from_map(bits));
}

KariGrid random_grid(Rng &rng, int size) {
    KariGrid g;
    for (int x = 0; x < size; x++) {
        for (int y = 0; y < size; y++) {
            g.set(x, y, (uint16_t)rng.uniform_int(0, 511));
        }
    }
    return g;
}

}  // namespace

TEST(gallery, xor_window_is_unitary) {
    for (int w : {3, 4, 5}) {
        WindowOperator win = quantize(xor_ca(), w);
        ASSERT_EQ(win.boundary, Boundary::Open);
        ASSERT_TRUE(check_unitary(win));
        ASSERT_TRUE(check_shift_invariance(win));
    }
}

TEST(gallery, toffoli_window_is_a_permutation) {
    WindowOperator win = quantize(toffoli_ca(), 3);
    ASSERT_EQ(win.matrix.nonZeros(), 64);
    ASSERT_TRUE(check_unitary(win));
}

TEST(gallery, toffoli_alphabet_order) {
    Alphabet a = toffoli_ca().alphabet;
    ASSERT_EQ(a.quiescent, "00");
    ASSERT_EQ(a.index_of("01"), 1);
    ASSERT_EQ(a.index_of("10"), 2);
    ASSERT_EQ(a.index_of("11"), 3);
}

TEST(gallery, toffoli_subcell_layer_matches_cell_rule) {
    Rng rng(51);
    ClassicalRule rule = toffoli_ca();
    for (int t = 0; t < 200; t++) {
        std::vector<int> cells(5);
        for (int &c : cells) {
            c = rng.uniform_int(0, 3);
        }
        Configuration c(rng.uniform_int(-3, 3), cells);
        SparseState stepped = toffoli_subcell_step(to_bits(c));
        SparseState expected = to_bits(rule.apply(c));
        ASSERT_EQ(stepped.terms.size(), 1u);
        ASSERT_EQ(stepped.terms.begin()->first, expected.terms.begin()->first);
    }
}

TEST(gallery, subcell_step_needs_bits) {
    ASSERT_THROW(toffoli_subcell_step(SparseState::basis(Alphabet::numbered(3), Configuration())), QcaError);
}

TEST(gallery, xor_cat_states) {
    SparseState plus = xor_cat_state(2, 3, 1);
    SparseState minus = xor_cat_state(2, 3, -1);
    ASSERT_NEAR(plus.norm(), 1.0, 1e-15);
    ASSERT_EQ(plus.terms.size(), 2u);
    const double h = 1 / std::sqrt(2.0);
    ASSERT_NEAR(std::abs(plus.terms.at(Configuration(2, {1, 1, 1})) - h), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(minus.terms.at(Configuration(2, {2, 2, 2})) + h), 0.0, 1e-15);
}

TEST(gallery, toffoli_probe_state) {
    SparseState s = toffoli_probe_state(4, 1);
    ASSERT_NEAR(s.norm(), 1.0, 1e-15);
    // Cell 4 holds |+>|->, cell 5 holds a = 1, b = 0.
    CMatrix rho = restrict_state(s, {4});
    CVector pm(4);
    pm << 0.5, -0.5, 0.5, -0.5;
    ASSERT_LT(oracle::max_diff(rho, pm * pm.adjoint()), 1e-15);
    CMatrix rho5 = restrict_state(s, {5});
    ASSERT_NEAR(rho5(2, 2).real(), 1.0, 1e-15);
}

TEST(gallery, blocks_validate) {
    ASSERT_NO_THROW(shift_qca(Alphabet::numbered(4)).validate());
    ASSERT_NO_THROW(swap_qca(2, 3).validate());
    ASSERT_NO_THROW(phase_qca({0.1, 0.2, 0.3}).validate());
    for (int d : {2, 3, 4, 6, 8}) {
        BlockQCA g = random_block_qca(d, 1000 + d);
        ASSERT_EQ(g.p * g.q, d);
        ASSERT_NO_THROW(g.validate(1e-10));
    }
    ASSERT_THROW(random_block_qca(6, 1, 4), QcaError);
}

TEST(gallery, random_block_is_seeded) {
    BlockQCA a = random_block_qca(4, 9, 2);
    BlockQCA b = random_block_qca(4, 9, 2);
    BlockQCA c = random_block_qca(4, 10, 2);
    ASSERT_EQ(a.u, b.u);
    ASSERT_EQ(a.v, b.v);
    ASSERT_NE(a.u, c.u);
}

TEST(kari, directions) {
    ASSERT_EQ(kari_direction(kNorth), (std::pair<int, int>{0, 1}));
    ASSERT_EQ(kari_direction(kEast), (std::pair<int, int>{1, 0}));
    ASSERT_EQ(kari_direction(kSouthWest), (std::pair<int, int>{-1, -1}));
    for (int b = 0; b < 8; b++) {
        auto [dx, dy] = kari_direction(b);
        auto [ox, oy] = kari_direction((b + 4) % 8);
        ASSERT_EQ(dx, -ox);
        ASSERT_EQ(dy, -oy);
    }
}

TEST(kari, single_center_bit) {
    KariGrid g;
    g.set(0, 0, 1u << kCenter);
    KariGrid out = kari_step(g);
    // The neighbour at -dir(b) sees the center bit in direction b and flips bit b.
    ASSERT_EQ(out.at(0, 0), 1u << kCenter);
    for (int b = 0; b < 8; b++) {
        auto [dx, dy] = kari_direction(b);
        ASSERT_EQ(out.at(-dx, -dy), 1u << b);
    }
    ASSERT_EQ(out.cells.size(), 9u);
}

TEST(kari, involution_and_translation) {
    Rng rng(52);
    for (int t = 0; t < 50; t++) {
        KariGrid g = random_grid(rng, 4);
        KariGrid once = kari_step(g);
        ASSERT_EQ(kari_step(once), g);
        ASSERT_EQ(kari_step(g.translated(2, -1)), once.translated(2, -1));
    }
}
