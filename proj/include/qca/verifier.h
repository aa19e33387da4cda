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

#ifndef QCA_VERIFIER_H
#define QCA_VERIFIER_H

#include <optional>
#include <vector>

#include "qca/model.h"

namespace qca {

/// Closed interval of cell offsets.
struct Interval {
    int lo = 0;
    int hi = 0;

    bool contains(const Interval &other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool operator==(const Interval &) const = default;
};

struct SignallingWitness {
    SparseState state_a;
    SparseState state_b;
    int64_t probe_cell = 0;
    std::vector<int64_t> context;
    double trace_distance = 0;
};

struct SignallingResult {
    double trace_distance = 0;
    bool signalling = false;
};

enum class LocalityStatus { Local, Nonlocal, Inconclusive };

struct NeighborhoodReport {
    /// Smallest N with G^dagger E G localized on (probe + N) for every single-cell E.
    std::optional<Interval> neighborhood;
    bool is_local = false;
    std::optional<SignallingWitness> witness;
    int max_radius = 0;
    /// Line cell of the probed output cell.
    int64_t probe_cell = 0;

    LocalityStatus status() const;
    /// Half-width of N about the half-integer point 1/2, i.e. max(hi - 1/2, 1/2 - lo).
    double radius() const;
};

struct VerificationReport {
    bool unitary = false;
    bool shift_invariant = false;
    NeighborhoodReport locality;
};

/// Largest radius a window of this width can test while leaving one cell of
/// slack outside the candidate range.
int default_max_radius(int width);

bool check_unitary(const WindowOperator &g, double tol = kDefaultTol);
bool check_shift_invariance(const WindowOperator &g, double tol = kDefaultTol);
NeighborhoodReport neighborhood(const WindowOperator &g, int max_radius, double tol = kDefaultTol);

/// Compares the output at `probe_cell` for two input states whose restrictions
/// to `context_cells` coincide. Positions are line cells; inputs must fit in
/// [0, width).
SignallingResult detect_signalling(
    const WindowOperator &g,
    const SparseState &rho_a,
    const SparseState &rho_b,
    int64_t probe_cell,
    const std::vector<int64_t> &context_cells,
    double tol = kDefaultTol);

/// True iff G E G^dagger is localized on -N for single-cell E.
bool check_inverse_locality(const WindowOperator &g, const Interval &n, double tol = kDefaultTol);

VerificationReport verify(const WindowOperator &g, int max_radius, double tol = kDefaultTol);

}  // namespace qca

#endif
