#include "repdet/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace repdet {

namespace {

void check_pair_params(double rho, double sigma_sq) {
    if (!(std::abs(rho) < 1.0))  // also rejects NaN
        throw std::invalid_argument("rho must lie in (-1, 1), got " + std::to_string(rho));
    if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq))
        throw std::invalid_argument("sigma_sq must be a positive real, got " + std::to_string(sigma_sq));
}

// 0-based flat index of x_{ij}, i and j 1-based.
std::int64_t flat_index(int n, int i, int j) {
    std::int64_t rank = j < i ? j - 1 : j - 2;
    return static_cast<std::int64_t>(i - 1) * (n - 1) + rank;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform draw in [0, bound); deterministic across platforms.
std::uint64_t bounded_rand(std::uint64_t& state, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(splitmix64(state)) * bound) >> 64);
}

}  // namespace

ModelSpec ModelSpec::homogeneous(int n, double rho, double sigma_sq, double s_sq) {
    ModelSpec spec;
    spec.n = n;
    spec.rho = rho;
    spec.sigma_sq = sigma_sq;
    spec.s_sq.assign(n > 0 ? static_cast<std::size_t>(n) : 0, s_sq);
    return spec;
}

void ModelSpec::validate() const {
    if (n < 2) throw std::invalid_argument("ModelSpec: n must be >= 2, got " + std::to_string(n));
    check_pair_params(rho, sigma_sq);
    if (s_sq.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("ModelSpec: s_sq must have length n = " + std::to_string(n) +
                                    ", got " + std::to_string(s_sq.size()));
    for (std::size_t i = 0; i < s_sq.size(); ++i)
        if (!(s_sq[i] > 0.0) || !std::isfinite(s_sq[i]))
            throw std::invalid_argument("ModelSpec: s_sq[" + std::to_string(i) +
                                        "] must be a positive real, got " + std::to_string(s_sq[i]));
}

bool ModelSpec::is_homogeneous() const {
    return std::all_of(s_sq.begin(), s_sq.end(), [&](double v) { return v == s_sq.front(); });
}

VariableIndex variable_index(const ModelSpec& spec, int i, int j) {
    if (i < 1 || i > spec.n || j < 1 || j > spec.n)
        throw std::invalid_argument("variable_index: indices must lie in [1, n]");
    if (i == j) throw std::invalid_argument("variable_index: i and j must differ");
    return VariableIndex{i, j, flat_index(spec.n, i, j)};
}

SparseSymMatrix SparseSymMatrix::from_triplets(std::int64_t dim, std::vector<Entry> triplets) {
    if (dim < 0) throw std::invalid_argument("SparseSymMatrix: dim must be nonnegative");
    for (auto& e : triplets) {
        if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim)
            throw std::invalid_argument("SparseSymMatrix: entry index out of range");
        if (!std::isfinite(e.value))
            throw std::invalid_argument("SparseSymMatrix: entry value must be finite");
        if (e.row > e.col) std::swap(e.row, e.col);
    }
    std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseSymMatrix m;
    m.dim_ = dim;
    m.entries_.reserve(triplets.size());
    for (const auto& e : triplets) {
        if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col)
            m.entries_.back().value += e.value;
        else
            m.entries_.push_back(e);
    }
    std::erase_if(m.entries_, [](const Entry& e) { return e.value == 0.0; });
    return m;
}

double SparseSymMatrix::at(std::int64_t r, std::int64_t c) const {
    if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
        throw std::out_of_range("SparseSymMatrix::at: index out of range");
    if (r > c) std::swap(r, c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                                   return e.row != k.first ? e.row < k.first : e.col < k.second;
                               });
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return 0.0;
}

std::int64_t SparseSymMatrix::logical_nnz() const {
    std::int64_t diag = 0;
    for (const auto& e : entries_)
        if (e.row == e.col) ++diag;
    return 2 * (stored_nnz() - diag) + diag;
}

std::vector<std::int64_t> SparseSymMatrix::logical_row_counts() const {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dim_), 0);
    for (const auto& e : entries_) {
        ++counts[static_cast<std::size_t>(e.row)];
        if (e.row != e.col) ++counts[static_cast<std::size_t>(e.col)];
    }
    return counts;
}

DenseSymMatrix::DenseSymMatrix(std::int64_t dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("DenseSymMatrix: dim must be nonnegative");
    upper_.assign(static_cast<std::size_t>(dim * (dim + 1) / 2), 0.0);
}

double DenseSymMatrix::at(std::int64_t i, std::int64_t j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("DenseSymMatrix::at: index out of range");
    if (i > j) std::swap(i, j);
    return upper_[static_cast<std::size_t>(i * dim_ - i * (i - 1) / 2 + (j - i))];
}

void DenseSymMatrix::set(std::int64_t i, std::int64_t j, double value) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("DenseSymMatrix::set: index out of range");
    if (i > j) std::swap(i, j);
    upper_[static_cast<std::size_t>(i * dim_ - i * (i - 1) / 2 + (j - i))] = value;
}

Permutation::Permutation(std::vector<std::int64_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
        if (v < 0 || v >= dim() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: image is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::int64_t dim) {
    std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) image[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(image));
}

Permutation Permutation::random(std::int64_t dim, std::uint64_t seed) {
    std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
    for (std::int64_t i = 0; i < dim; ++i) image[static_cast<std::size_t>(i)] = i;
    std::uint64_t state = seed;
    for (std::int64_t i = dim - 1; i > 0; --i) {
        auto j = static_cast<std::int64_t>(bounded_rand(state, static_cast<std::uint64_t>(i + 1)));
        std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::int64_t> inv(image_.size());
    for (std::int64_t i = 0; i < dim(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("Permutation::compose: dimension mismatch");
    std::vector<std::int64_t> image(image_.size());
    for (std::int64_t i = 0; i < dim(); ++i) image[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(image));
}

DenseSymMatrix local_pairwise_precision(double rho, double sigma_sq) {
    check_pair_params(rho, sigma_sq);
    const double q = (1.0 - rho * rho) * sigma_sq;
    DenseSymMatrix m(2);
    m.set(0, 0, 1.0 / q);
    m.set(1, 1, 1.0 / q);
    m.set(0, 1, -rho / q);
    return m;
}

DenseSymMatrix local_pairwise_covariance(double rho, double sigma_sq) {
    check_pair_params(rho, sigma_sq);
    DenseSymMatrix m(2);
    m.set(0, 0, sigma_sq);
    m.set(1, 1, sigma_sq);
    m.set(0, 1, rho * sigma_sq);
    return m;
}

SparseSymMatrix build_information_matrix(const ModelSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const std::int64_t N = spec.variable_count();
    const double q = (1.0 - spec.rho * spec.rho) * spec.sigma_sq;
    const double diag_shift = 1.0 / q;
    const double coupling = -spec.rho / q;

    std::vector<Entry> triplets;
    triplets.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(n + 1) / 2 +
                     static_cast<std::size_t>(N));
    for (int i = 0; i < n; ++i) {
        const double block = 1.0 / spec.s_sq[static_cast<std::size_t>(i)];
        const std::int64_t r0 = static_cast<std::int64_t>(i) * (n - 1);
        for (int p = 0; p < n - 1; ++p) {
            triplets.push_back({r0 + p, r0 + p, diag_shift + block});
            for (int r = p + 1; r < n - 1; ++r) triplets.push_back({r0 + p, r0 + r, block});
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            triplets.push_back({flat_index(n, i, j), flat_index(n, j, i), coupling});
    return SparseSymMatrix::from_triplets(N, std::move(triplets));
}

std::vector<double> build_dual_diagonal(const ModelSpec& spec) {
    spec.validate();
    const double shift = (static_cast<double>(spec.n - 1) - spec.rho) * spec.sigma_sq;
    std::vector<double> d(spec.s_sq.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = spec.s_sq[i] + shift;
    return d;
}

DenseSymMatrix build_dual_information_matrix(const ModelSpec& spec) {
    const std::vector<double> d = build_dual_diagonal(spec);
    const double off = spec.rho * spec.sigma_sq;
    DenseSymMatrix m(spec.n);
    for (std::int64_t i = 0; i < spec.n; ++i) {
        m.set(i, i, d[static_cast<std::size_t>(i)] + off);
        for (std::int64_t j = i + 1; j < spec.n; ++j) m.set(i, j, off);
    }
    return m;
}

SparseSymMatrix apply_permutation(const SparseSymMatrix& m, const Permutation& p) {
    if (p.dim() != m.dim())
        throw std::invalid_argument("apply_permutation: permutation dimension " +
                                    std::to_string(p.dim()) + " does not match matrix dimension " +
                                    std::to_string(m.dim()));
    std::vector<Entry> triplets;
    triplets.reserve(m.entries().size());
    for (const auto& e : m.entries()) triplets.push_back({p(e.row), p(e.col), e.value});
    return SparseSymMatrix::from_triplets(m.dim(), std::move(triplets));
}

SparseSymMatrix dense_to_sparse(const DenseSymMatrix& m) {
    std::vector<Entry> triplets;
    for (std::int64_t i = 0; i < m.dim(); ++i)
        for (std::int64_t j = i; j < m.dim(); ++j)
            if (double v = m.at(i, j); v != 0.0) triplets.push_back({i, j, v});
    return SparseSymMatrix::from_triplets(m.dim(), std::move(triplets));
}

}  // namespace repdet
