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

#ifndef QCA_TENSOR_CORE_H
#define QCA_TENSOR_CORE_H

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qca {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseCMatrix = Eigen::SparseMatrix<cd>;

inline constexpr double kDefaultTol = 1e-9;

/// Ordered factor indices into a FactorShape. Functions taking an IndexSet
/// sort it and reject duplicates or out-of-range entries.
using IndexSet = std::vector<int>;

/// Dimensions of the tensor factors of a finite-dimensional Hilbert space.
/// Factor 0 is the most significant digit of a flat basis index.
struct FactorShape {
    std::vector<int> dims;

    FactorShape() = default;
    explicit FactorShape(std::vector<int> dims);
    static FactorShape uniform(int dim, int count);

    int size() const {
        return (int)dims.size();
    }
    int64_t total() const;
    int64_t dim_of(const IndexSet &factors) const;
    IndexSet complement(const IndexSet &factors) const;
};

/// Flat index <-> (kept part, traced part) bookkeeping for a subset of factors.
/// Both parts keep the original relative factor order.
class FactorSplit {
   public:
    FactorSplit(const FactorShape &shape, const IndexSet &keep);

    int64_t total() const {
        return (int64_t)kept_.size();
    }
    int64_t kept_dim() const {
        return kept_dim_;
    }
    int64_t rest_dim() const {
        return rest_dim_;
    }
    int64_t kept(int64_t i) const {
        return kept_[i];
    }
    int64_t rest(int64_t i) const {
        return rest_[i];
    }
    int64_t join(int64_t kept, int64_t rest) const {
        return join_[kept * rest_dim_ + rest];
    }

   private:
    int64_t kept_dim_ = 1;
    int64_t rest_dim_ = 1;
    std::vector<int64_t> kept_;
    std::vector<int64_t> rest_;
    std::vector<int64_t> join_;
};

IndexSet normalized_region(const FactorShape &shape, const IndexSet &region);

/// Mixed-radix digits of a flat index, most significant first.
std::vector<int> index_digits(int64_t index, const std::vector<int> &dims);
int64_t digits_index(const std::vector<int> &digits, const std::vector<int> &dims);

CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix dagger(const CMatrix &m);
/// Hilbert-Schmidt inner product Tr(a^dagger b).
cd hs_inner(const CMatrix &a, const CMatrix &b);
double max_abs(const CMatrix &m);

bool is_unitary(const CMatrix &m, double tol = kDefaultTol);
bool is_unitary(const SparseCMatrix &m, double tol = kDefaultTol);

CMatrix partial_trace(const CMatrix &m, const FactorShape &shape, const IndexSet &keep);
CMatrix partial_trace(const SparseCMatrix &m, const FactorShape &shape, const IndexSet &keep);

/// local tensor identity, with the factors of `region` carrying `local`.
CMatrix embed(const CMatrix &local, const FactorShape &shape, const IndexSet &region);

/// Max-norm distance between `a` and its normalized partial trace on `region`
/// tensored back with the identity on the complement.
double localization_residual(const CMatrix &a, const FactorShape &shape, const IndexSet &region);
double localization_residual(const SparseCMatrix &a, const FactorShape &shape, const IndexSet &region);
bool is_localized(const CMatrix &a, const FactorShape &shape, const IndexSet &region, double tol = kDefaultTol);
bool is_localized(
    const SparseCMatrix &a, const FactorShape &shape, const IndexSet &region, double tol = kDefaultTol);

/// Left-multiplies the rows of `m` by `op` acting on one factor. `op` may change
/// that factor's dimension; the returned matrix has the new row count.
CMatrix apply_on_factor(const CMatrix &m, const std::vector<int> &row_dims, int factor, const CMatrix &op);

/// Half the sum of absolute eigenvalues of the Hermitian difference.
double trace_distance(const CMatrix &rho, const CMatrix &sigma);

SparseCMatrix to_sparse(const CMatrix &m, double prune = 0.0);

}  // namespace qca

#endif
