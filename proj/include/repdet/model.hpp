#pragma once

#include <cstdint>
#include <vector>

namespace repdet {

/// Parameters of one model instance: n clouds, pairwise correlation rho in
/// (-1, 1), pairwise variance sigma_sq > 0, and one unary variance s_sq[i] > 0
/// per cloud.
struct ModelSpec {
    int n = 0;
    double rho = 0.0;
    double sigma_sq = 1.0;
    std::vector<double> s_sq;

    static ModelSpec homogeneous(int n, double rho, double sigma_sq, double s_sq);

    /// Throws std::invalid_argument if any parameter is out of domain.
    void validate() const;
    bool is_homogeneous() const;
    std::int64_t variable_count() const { return static_cast<std::int64_t>(n) * (n - 1); }
    std::int64_t pair_count() const { return variable_count() / 2; }
};

/// Ordered pair (cloud i, port j), i != j, both 1-based, with the flat 0-based
/// row index of the variable x_{ij}: clouds in increasing i, ports in
/// increasing j within each cloud.
struct VariableIndex {
    int cloud = 0;
    int port = 0;
    std::int64_t flat = 0;
};

VariableIndex variable_index(const ModelSpec& spec, int i, int j);

struct Entry {
    std::int64_t row = 0;
    std::int64_t col = 0;  // row <= col once stored
    double value = 0.0;
};

/// Symmetric sparse matrix in coordinate form. The upper triangle is stored
/// once, sorted by (row, col); the logical matrix is mirror-completed on read.
/// Exact zeros are dropped.
class SparseSymMatrix {
public:
    static SparseSymMatrix from_triplets(std::int64_t dim, std::vector<Entry> triplets);

    std::int64_t dim() const { return dim_; }
    const std::vector<Entry>& entries() const { return entries_; }
    /// Logical value at (r, c); 0 when the position is not stored.
    double at(std::int64_t r, std::int64_t c) const;
    std::int64_t stored_nnz() const { return static_cast<std::int64_t>(entries_.size()); }
    /// Count of nonzeros of the mirror-completed matrix.
    std::int64_t logical_nnz() const;
    std::vector<std::int64_t> logical_row_counts() const;

private:
    SparseSymMatrix() = default;
    std::int64_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Small dense symmetric matrix; one triangle is stored and mirrored on read,
/// so values[i][j] == values[j][i] holds exactly.
class DenseSymMatrix {
public:
    explicit DenseSymMatrix(std::int64_t dim);

    std::int64_t dim() const { return dim_; }
    double at(std::int64_t i, std::int64_t j) const;
    void set(std::int64_t i, std::int64_t j, double value);

private:
    std::int64_t dim_ = 0;
    std::vector<double> upper_;  // packed upper triangle, row-major
};

/// Bijection on {0, ..., dim-1}.
class Permutation {
public:
    explicit Permutation(std::vector<std::int64_t> image);
    static Permutation identity(std::int64_t dim);
    /// Deterministic Fisher-Yates shuffle of the identity; same seed, same
    /// permutation on every platform.
    static Permutation random(std::int64_t dim, std::uint64_t seed);

    std::int64_t dim() const { return static_cast<std::int64_t>(image_.size()); }
    std::int64_t operator()(std::int64_t i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& image() const { return image_; }
    Permutation inverse() const;
    /// (this o other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;

private:
    std::vector<std::int64_t> image_;
};

/// 2x2 precision matrix of one pairwise factor:
/// (1/(1-rho^2)) [[1/sigma^2, -rho/sigma^2], [-rho/sigma^2, 1/sigma^2]].
DenseSymMatrix local_pairwise_precision(double rho, double sigma_sq);

/// Its inverse, the 2x2 pair covariance [[sigma^2, rho sigma^2], [rho sigma^2, sigma^2]].
DenseSymMatrix local_pairwise_covariance(double rho, double sigma_sq);

/// N x N information matrix of the model, N = n(n-1): the scaled identity
/// 1/((1-rho^2) sigma^2) I plus all-ones diagonal blocks 1/s_i^2 J and one
/// coupling entry -rho/((1-rho^2) sigma^2) per pair (x_{ij}, x_{ji}).
SparseSymMatrix build_information_matrix(const ModelSpec& spec);

/// n x n dual information matrix, assembled as diag(d) + rho sigma^2 J with
/// d = build_dual_diagonal(spec); entrywise this is s_i^2 + (n-1) sigma^2 on
/// the diagonal and rho sigma^2 off it.
DenseSymMatrix build_dual_information_matrix(const ModelSpec& spec);

/// Diagonal of the rank-one-free part of the dual matrix:
/// d_i = s_i^2 + (n - rho - 1) sigma^2, strictly positive for valid specs.
std::vector<double> build_dual_diagonal(const ModelSpec& spec);

/// Symmetric congruence by a permutation: out(p(r), p(c)) = in(r, c).
SparseSymMatrix apply_permutation(const SparseSymMatrix& m, const Permutation& p);

/// Coordinate form of a dense symmetric matrix (exact zeros dropped).
SparseSymMatrix dense_to_sparse(const DenseSymMatrix& m);

}  // namespace repdet
