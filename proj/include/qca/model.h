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

#ifndef QCA_MODEL_H
#define QCA_MODEL_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qca/tensor_core.h"

namespace qca {

inline constexpr double kPruneTol = 1e-14;

/// Cell alphabet. Index 0 is the quiescent symbol, symbol k of `symbols` has
/// index k + 1, so the cell dimension is symbols.size() + 1.
struct Alphabet {
    std::vector<std::string> symbols;
    std::string quiescent = "q";

    int dim() const {
        return (int)symbols.size() + 1;
    }
    int index_of(const std::string &name) const;
    const std::string &name_of(int index) const;

    /// `dim` anonymous symbols "1".."dim-1" with quiescent "0".
    static Alphabet numbered(int dim);
    /// Alphabet of s-tuples, names joined with '.', quiescent tuple first and
    /// the remaining tuples in lexicographic order.
    Alphabet grouped(int s) const;

    bool operator==(const Alphabet &other) const = default;
};

/// A finite configuration on the line: `cells[k]` is the symbol index at
/// position offset + k. Normalized so that both ends are non-quiescent; the
/// all-quiescent configuration has no cells.
class Configuration {
   public:
    Configuration() = default;
    Configuration(int64_t offset, std::vector<int> cells);
    static Configuration from_map(const std::map<int64_t, int> &cells);

    int at(int64_t position) const;
    bool empty() const {
        return cells_.empty();
    }
    int64_t first() const {
        return offset_;
    }
    int64_t last() const {
        return offset_ + (int64_t)cells_.size() - 1;
    }
    const std::vector<int> &cells() const {
        return cells_;
    }
    std::map<int64_t, int> to_map() const;
    Configuration shifted(int64_t k) const;

    auto operator<=>(const Configuration &other) const = default;

   private:
    void normalize();
    int64_t offset_ = 0;
    std::vector<int> cells_;
};

/// Superposition of finite configurations.
struct SparseState {
    Alphabet alphabet;
    std::map<Configuration, cd> terms;

    double norm() const;
    void prune(double threshold = kPruneTol);
    void normalize();
    static SparseState basis(const Alphabet &alphabet, const Configuration &c);
};

/// Local rule delta(x, y) giving the next value of cell i from cells i, i+1.
struct ClassicalRule {
    Alphabet alphabet;
    std::vector<int> table;  // table[x * d + y]

    ClassicalRule() = default;
    /// Validates totality and delta(q, q) = q.
    ClassicalRule(Alphabet alphabet, std::vector<int> table);

    int operator()(int x, int y) const {
        return table[x * alphabet.dim() + y];
    }
    /// Exact output on the line (cells i with delta(c_i, c_{i+1}) != q).
    Configuration apply(const Configuration &c) const;
};

/// Two-layer automaton: u splits each cell into halves (a, b) in C^q x C^p,
/// v merges b_i with a_{i+1} into output cell i.
struct BlockQCA {
    int d = 0;
    int p = 0;
    int q = 0;
    CMatrix u;  // (q*p) x d, row index a*p + b
    CMatrix v;  // d x (p*q), column index b*q + a
    CVector q1;  // in C^p: u|quiescent> = q2 (x) q1
    CVector q2;  // in C^q: v(q1 (x) q2) = |quiescent>
    Alphabet alphabet;

    /// Checks dimensions, unitarity and the quiescent gauge.
    void validate(double tol = kDefaultTol) const;
};

enum class Boundary { Periodic, Open };

/// Action of an automaton on a window of `width` cells as a d^width matrix in
/// the lexicographic basis (cell 0 most significant, quiescent = digit 0).
/// Output position j stands for line cell j + output_offset. Periodic windows
/// wrap cell width-1 onto cell 0.
struct WindowOperator {
    Alphabet alphabet;
    int width = 0;
    SparseCMatrix matrix;
    Boundary boundary = Boundary::Periodic;
    int output_offset = 0;

    int d() const {
        return alphabet.dim();
    }
    FactorShape shape() const {
        return FactorShape::uniform(d(), width);
    }
    int64_t dim() const {
        return matrix.rows();
    }
};

/// Which window presentation `quantize` uses. Auto picks Open when
/// delta(x, q) = q for every x (then the open window loses nothing at its right
/// end) and Periodic otherwise.
enum class QuantizeBoundary { Auto, Periodic, Open };

SparseState apply_block(const SparseState &state, const BlockQCA &g);
SparseState apply_classical(const SparseState &state, const ClassicalRule &rule);
/// Relabels position i as i - k.
SparseState shift(const SparseState &state, int64_t k);

WindowOperator quantize(const ClassicalRule &rule, int width, QuantizeBoundary boundary = QuantizeBoundary::Auto);
WindowOperator window_matrix(const BlockQCA &g, int width);

WindowOperator group_cells(const WindowOperator &x, int s);
ClassicalRule group_cells(const ClassicalRule &x, int s);
/// Cell i moves to supercell floor(i / s).
SparseState group_cells(const SparseState &x, int s);
SparseState ungroup_cells(const SparseState &x, const Alphabet &fine, int s);

/// Reduced density matrix on `cells`, taken in increasing position order.
CMatrix restrict_state(const SparseState &state, const std::vector<int64_t> &cells);

/// Window basis index of a configuration whose cells lie in [0, width).
int64_t window_index(const Configuration &c, int d, int width);
Configuration window_configuration(int64_t index, int d, int width, int64_t offset = 0);

/// Dense window vector for a state whose support lies in [0, width).
CVector to_window_vector(const SparseState &state, int width);
SparseState from_window_vector(const CVector &v, const Alphabet &alphabet, int width, int64_t offset);

/// Images of single-cell matrix units E_kl under conjugation by a window
/// operator G. Forward gives G X G^dagger for X on an input cell, backward gives
/// G^dagger X G for X on an output position. Dense or sparse arithmetic is
/// picked from the fill of G.
class CellConjugator {
   public:
    CellConjugator(const WindowOperator &g, bool forward);
    SparseCMatrix image(int position, int k, int l) const;

   private:
    int d_;
    int width_;
    bool dense_;
    SparseCMatrix h_;
    CMatrix hd_;
};

}  // namespace qca

#endif
