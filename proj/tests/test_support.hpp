#pragma once

#include <cmath>
#include <cstdint>

#include "repdet/model.hpp"

namespace test_support {

// splitmix64-based generator; deterministic on every platform, unlike the
// std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    std::int64_t below(std::int64_t bound) {
        return static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(next()) * static_cast<std::uint64_t>(bound)) >> 64);
    }

private:
    std::uint64_t state_;
};

// Parameter draws used by every randomized check: rho uniform in [-0.9, 0.9],
// sigma^2 and s_i^2 log-uniform in [0.1, 10].
inline repdet::ModelSpec random_spec(int n, Rng& rng) {
    repdet::ModelSpec spec;
    spec.n = n;
    spec.rho = rng.uniform(-0.9, 0.9);
    spec.sigma_sq = rng.log_uniform(0.1, 10.0);
    spec.s_sq.resize(static_cast<std::size_t>(n));
    for (auto& s : spec.s_sq) s = rng.log_uniform(0.1, 10.0);
    return spec;
}

// First worked example: n = 4, rho = 1/2, sigma^2 = 2/3, s_i^2 = 1/i.
inline repdet::ModelSpec example_one_spec() {
    repdet::ModelSpec spec;
    spec.n = 4;
    spec.rho = 0.5;
    spec.sigma_sq = 2.0 / 3.0;
    spec.s_sq = {1.0, 1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0};
    return spec;
}

// Second worked example, homogeneous: rho = -4/5, sigma^2 = 1, s^2 = 1.
inline repdet::ModelSpec example_two_spec(int n) {
    return repdet::ModelSpec::homogeneous(n, -0.8, 1.0, 1.0);
}

// ln det(Sigma_x) of example one, frozen from a 40-digit evaluation of the
// closed form (and cross-checked against the dense oracle in the tests).
inline constexpr double kExampleOneLogDet = -13.349553131787148;
inline constexpr double kExampleOneDualLogDet = -3.5798255694305443;

// Information matrix of example one as printed: 2 I + A.
inline constexpr int kExampleOneMatrix[12][12] = {
    {3, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {1, 1, 3, 0, 0, 0, 0, 0, 0, -1, 0, 0},
    {-1, 0, 0, 4, 2, 2, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 2, 4, 2, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 2, 2, 4, 0, 0, 0, 0, -1, 0},
    {0, -1, 0, 0, 0, 0, 5, 3, 3, 0, 0, 0},
    {0, 0, 0, 0, -1, 0, 3, 5, 3, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 3, 3, 5, 0, 0, -1},
    {0, 0, -1, 0, 0, 0, 0, 0, 0, 6, 4, 4},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 4, 6, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, -1, 4, 4, 6},
};

// Information matrix of example two at n = 3, times 9.
inline constexpr int kExampleTwoMatrixNumerators[6][6] = {
    {34, 9, 20, 0, 0, 0},
    {9, 34, 0, 0, 20, 0},
    {20, 0, 34, 9, 0, 0},
    {0, 0, 9, 34, 0, 20},
    {0, 20, 0, 0, 34, 9},
    {0, 0, 0, 20, 9, 34},
};

}  // namespace test_support
