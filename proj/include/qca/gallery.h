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

#ifndef QCA_GALLERY_H
#define QCA_GALLERY_H

#include <cstdint>
#include <vector>

#include "qca/model.h"

namespace qca {

/// Alphabet {0, 1} with quiescent q. delta(q, x) = x, delta(x, q) = q and
/// delta(x, y) = x xor y otherwise.
ClassicalRule xor_ca();

/// Cells are bit pairs ab with quiescent 00. delta(ab, cd) = (b xor (a and c), c).
ClassicalRule toffoli_ca();

/// Output cell i is input cell i + 1. p = 1, q = d.
BlockQCA shift_qca(const Alphabet &alphabet);
/// Cells of dimension p*q split into halves that move in opposite directions.
BlockQCA swap_qca(int p, int q);
/// Single-cell phases; phases[k] multiplies symbol k + 1.
BlockQCA phase_qca(const std::vector<double> &phases);

/// Random block automaton with Haar layers and a random quiescent gauge.
/// p = 0 picks a random divisor of d.
BlockQCA random_block_qca(int d, uint64_t seed, int p = 0);

/// (|0...0> + sign |1...1>) / sqrt(2) on cells [first, first + length) of the
/// XOR alphabet.
SparseState xor_cat_state(int64_t first, int length, int sign);

/// Toffoli probe: cell `cell` holds |+>|->, cell `cell` + 1 holds |c>|0>.
SparseState toffoli_probe_state(int64_t cell, int c);

/// One step of the Toffoli automaton at half-cell resolution: subcells 2i and
/// 2i + 1 are a_i and b_i; a Toffoli gate writes a_i and a_{i+1} into b_i,
/// then every subcell moves one place left.
SparseState toffoli_subcell_step(const SparseState &bits);

}  // namespace qca

#endif
