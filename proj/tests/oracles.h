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

// Independent reference computations for the tests. They favour the most
// literal formula over speed and share no code paths with the library
// beyond the basic types.

#ifndef QCA_TESTS_ORACLES_H
#define QCA_TESTS_ORACLES_H

#include <cstdint>
#include <vector>

#include "qca/model.h"
#include "qca/star_algebra.h"

namespace qca::oracle {

/// (a kron b)(i, j) = a(i / b.rows, j / b.cols) b(i % b.rows, j % b.cols).
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix kron_all(const std::vector<CMatrix> &factors);

/// Matrix unit |k><l| in dimension d.
CMatrix unit(int d, int k, int l);

/// Operator `op` on factor `f`, identity elsewhere, built by explicit Kronecker products.
CMatrix on_factor(const std::vector<int> &dims, int f, const CMatrix &op);

/// Partial trace by summing <e_r| m |e_r> over explicit basis vectors of the
/// traced factors, after permuting the traced factors to the end.
CMatrix partial_trace(const CMatrix &m, const std::vector<int> &dims, const std::vector<int> &keep);

/// Localized on `region` iff commuting with every matrix unit on every other factor.
bool localized_by_commutant(const CMatrix &a, const std::vector<int> &dims, const std::vector<int> &region, double tol);

/// Window matrix of a block automaton on a ring of `width` cells built from
/// full-layer Kronecker products and an explicit half-cell permutation.
CMatrix block_window(const BlockQCA &g, int width);

/// Column of the ring presentation for the basis configuration `cells`, from
/// Kronecker products of u columns, an explicit half-cell permutation, and the
/// Kronecker power `v_all` of v (as returned by kron_all).
CVector block_column(const BlockQCA &g, const std::vector<int> &cells, const CMatrix &v_all);

/// delta applied to a word, reading position i and i + 1 (i + 1 wrapping when periodic).
std::vector<int> classical_word(const ClassicalRule &rule, const std::vector<int> &word, bool periodic);

/// max |a - b| entrywise.
double max_diff(const CMatrix &a, const CMatrix &b);

/// Matrix units of M_p (x) I_q conjugated by w.
std::vector<CMatrix> conjugated_factor_units(const CMatrix &w, int p, int q, bool second);

}  // namespace qca::oracle

#endif
