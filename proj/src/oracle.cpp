#include "repdet/oracle.hpp"

#include <cmath>
#include <string>

namespace repdet {

namespace {

std::size_t column_offset(std::int64_t dim, std::int64_t j) {
    // Column j of the packed lower triangle holds rows j..dim-1.
    return static_cast<std::size_t>(j * dim - j * (j - 1) / 2);
}

}  // namespace

NotPositiveDefinite::NotPositiveDefinite(std::int64_t row)
    : std::runtime_error("matrix is not positive definite: nonpositive pivot at row " +
                         std::to_string(row)),
      row_(row) {}

OracleCapExceeded::OracleCapExceeded(std::int64_t dim, std::int64_t cap)
    : std::runtime_error("oracle cap exceeded: dimension " + std::to_string(dim) +
                         " is larger than the cap " + std::to_string(cap)),
      dim_(dim),
      cap_(cap) {}

double CholeskyFactor::at(std::int64_t i, std::int64_t j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("CholeskyFactor::at: index out of range");
    if (i < j) return 0.0;
    return cols_[column_offset(dim_, j) + static_cast<std::size_t>(i - j)];
}

double CholeskyFactor::log_det() const {
    double sum = 0.0;
    for (std::int64_t j = 0; j < dim_; ++j) sum += std::log(cols_[column_offset(dim_, j)]);
    return 2.0 * sum;
}

CholeskyFactor cholesky(const DenseSymMatrix& m) {
    const std::int64_t dim = m.dim();
    CholeskyFactor factor;
    factor.dim_ = dim;
    factor.cols_.assign(static_cast<std::size_t>(dim * (dim + 1) / 2), 0.0);
    double* L = factor.cols_.data();

    std::vector<double> work(static_cast<std::size_t>(dim), 0.0);
    for (std::int64_t j = 0; j < dim; ++j) {
        const std::int64_t len = dim - j;
        for (std::int64_t i = 0; i < len; ++i) work[static_cast<std::size_t>(i)] = m.at(j + i, j);
        // Left-looking update: subtract L(j,k) * L(j.., k) for every earlier column.
        for (std::int64_t k = 0; k < j; ++k) {
            const double* colk = L + column_offset(dim, k) + static_cast<std::size_t>(j - k);
            const double ljk = colk[0];
            for (std::int64_t i = 0; i < len; ++i)
                work[static_cast<std::size_t>(i)] -= ljk * colk[i];
        }
        const double pivot = work[0];
        if (!(pivot > 0.0) || !std::isfinite(pivot)) throw NotPositiveDefinite(j);
        const double root = std::sqrt(pivot);
        double* colj = L + column_offset(dim, j);
        colj[0] = root;
        for (std::int64_t i = 1; i < len; ++i) colj[i] = work[static_cast<std::size_t>(i)] / root;
    }
    return factor;
}

double oracle_logdet(const DenseSymMatrix& m) { return cholesky(m).log_det(); }

DenseSymMatrix sparse_to_dense(const SparseSymMatrix& m, std::int64_t cap) {
    if (m.dim() > cap) throw OracleCapExceeded(m.dim(), cap);
    DenseSymMatrix dense(m.dim());
    for (const auto& e : m.entries()) dense.set(e.row, e.col, e.value);
    return dense;
}

}  // namespace repdet
