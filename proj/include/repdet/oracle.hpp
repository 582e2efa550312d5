#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "repdet/model.hpp"

namespace repdet {

/// Thrown when a Cholesky pivot is <= 0 or non-finite: the input is not
/// positive definite at machine precision. `row()` is the 0-based failing row.
class NotPositiveDefinite : public std::runtime_error {
public:
    explicit NotPositiveDefinite(std::int64_t row);
    std::int64_t row() const { return row_; }

private:
    std::int64_t row_ = 0;
};

/// Thrown by sparse_to_dense when the matrix exceeds the configured oracle
/// cap; callers treat it as "skip the oracle comparison".
class OracleCapExceeded : public std::runtime_error {
public:
    OracleCapExceeded(std::int64_t dim, std::int64_t cap);
    std::int64_t dim() const { return dim_; }
    std::int64_t cap() const { return cap_; }

private:
    std::int64_t dim_ = 0;
    std::int64_t cap_ = 0;
};

/// Lower-triangular Cholesky factor L with L L^T = input, packed column-major.
/// Diagonal entries are strictly positive.
class CholeskyFactor {
public:
    std::int64_t dim() const { return dim_; }
    /// L(i, j); 0 above the diagonal.
    double at(std::int64_t i, std::int64_t j) const;
    /// ln det(L L^T) = 2 sum_k ln L(k, k).
    double log_det() const;

private:
    friend CholeskyFactor cholesky(const DenseSymMatrix& m);
    std::int64_t dim_ = 0;
    std::vector<double> cols_;  // column j holds rows j..dim-1
};

/// Unpivoted Cholesky factorization with a fixed sequential arithmetic order,
/// so results are reproducible bit-for-bit per platform.
CholeskyFactor cholesky(const DenseSymMatrix& m);

/// Dense ground truth: ln det(m) via Cholesky. For m = Sigma_x^-1 the primal
/// report value is the negation: ln det(Sigma_x) = -oracle_logdet(Sigma_x^-1).
double oracle_logdet(const DenseSymMatrix& m);

inline constexpr std::int64_t kDefaultOracleCap = 5000;

/// Mirror-completed dense copy; throws OracleCapExceeded when dim > cap.
DenseSymMatrix sparse_to_dense(const SparseSymMatrix& m, std::int64_t cap = kDefaultOracleCap);

}  // namespace repdet
