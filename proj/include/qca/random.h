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

#ifndef QCA_RANDOM_H
#define QCA_RANDOM_H

#include <cstdint>
#include <random>

#include "qca/tensor_core.h"

namespace qca {

/// Seeded source of the Gaussian samples used by the randomized algorithms.
/// The same seed yields the same stream on a given build.
class Rng {
   public:
    explicit Rng(uint64_t seed) : gen_(seed) {
    }
    double normal() {
        return normal_(gen_);
    }
    cd complex_normal() {
        double re = normal_(gen_);
        double im = normal_(gen_);
        return {re, im};
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }
    std::mt19937_64 &engine() {
        return gen_;
    }

   private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

CMatrix random_gaussian(int rows, int cols, Rng &rng);
CMatrix random_hermitian(int n, Rng &rng);
CMatrix haar_unitary(int n, Rng &rng);
CVector random_unit_vector(int n, Rng &rng);

/// A unitary whose first column is the unit vector `x`.
CMatrix unitary_with_first_column(const CVector &x, Rng &rng);

}  // namespace qca

#endif
