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

#ifndef QCA_IO_H
#define QCA_IO_H

#include <string>
#include <vector>

#include "json.hpp"
#include "qca/decomposer.h"
#include "qca/model.h"
#include "qca/verifier.h"

namespace qca {

using json = nlohmann::json;

enum class SpecKind { Classical, Block, Window, Classical2D };

/// Parsed automaton file. Only the member matching `kind` is meaningful.
struct QcaSpec {
    SpecKind kind = SpecKind::Classical;
    Alphabet alphabet;
    ClassicalRule rule;
    QuantizeBoundary boundary = QuantizeBoundary::Auto;
    BlockQCA block;
    WindowOperator window;
};

json matrix_to_json(const CMatrix &m);
json matrix_to_json(const SparseCMatrix &m);
CMatrix matrix_from_json(const json &j);
SparseCMatrix sparse_matrix_from_json(const json &j);
json vector_to_json(const CVector &v);
CVector vector_from_json(const json &j);
json complex_to_json(cd z);
cd complex_from_json(const json &j);

json alphabet_to_json(const Alphabet &a);
Alphabet alphabet_from_json(const json &j);

QcaSpec qca_spec_from_json(const json &j);
json rule_to_json(const ClassicalRule &rule, QuantizeBoundary boundary = QuantizeBoundary::Auto);
json block_to_json(const BlockQCA &g);
json window_to_json(const WindowOperator &w);

/// States are validated to unit norm.
SparseState state_from_json(const json &j, const Alphabet &alphabet);
json state_to_json(const SparseState &s);

/// {"n": n, "generators": [...]}.
std::vector<CMatrix> algebra_generators_from_json(const json &j, int *n);

json report_to_json(const VerificationReport &r);
json witness_to_json(const SignallingWitness &w);
json decomposition_to_json(const Decomposition &d);

json read_json_file(const std::string &path);

}  // namespace qca

#endif
