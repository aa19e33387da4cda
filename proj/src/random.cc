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

#include "qca/random.h"

#include <cmath>

namespace qca {

CMatrix random_gaussian(int rows, int cols, Rng &rng) {
    CMatrix m(rows, cols);
    for (int j = 0; j < cols; j++) {
        for (int i = 0; i < rows; i++) {
            m(i, j) = rng.complex_normal();
        }
    }
    return m;
}

CMatrix random_hermitian(int n, Rng &rng) {
    CMatrix g = random_gaussian(n, n, rng);
    return (g + g.adjoint()) / 2.0;
}

CMatrix haar_unitary(int n, Rng &rng) {
    CMatrix g = random_gaussian(n, n, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so the distribution is Haar.
    for (int i = 0; i < n; i++) {
        cd d = r(i, i);
        double a = std::abs(d);
        if (a > 0) {
            q.col(i) *= d / a;
        }
    }
    return q;
}

CVector random_unit_vector(int n, Rng &rng) {
    CVector v = random_gaussian(n, 1, rng).col(0);
    return v / v.norm();
}

CMatrix unitary_with_first_column(const CVector &x, Rng &rng) {
    int n = (int)x.size();
    CMatrix m = random_gaussian(n, n, rng);
    m.col(0) = x;
    Eigen::HouseholderQR<CMatrix> qr(m);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    // q.col(0) equals x up to a phase; remove it.
    cd overlap = q.col(0).dot(x);
    q.col(0) *= overlap / std::abs(overlap);
    for (int i = 1; i < n; i++) {
        q.col(i) -= q.col(0) * q.col(0).dot(q.col(i));
        q.col(i).normalize();
    }
    q.col(0) = x / x.norm();
    return q;
}

}  // namespace qca
