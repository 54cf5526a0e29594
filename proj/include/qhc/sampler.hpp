#pragma once

#include <cstdint>
#include <vector>

#include "qhc/classical.hpp"
#include "qhc/quantum.hpp"

namespace qhc {

// SplitMix64 (Steele, Lea & Flood's 64-bit mix on a Weyl sequence with
// increment 0x9E3779B97F4A7C15).  Fixed here so sample reports replay
// bit-for-bit across implementations; the JSON reports carry this name.
inline constexpr const char* kPrngName = "splitmix64";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe under log().
    double next_double_positive() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct SampleReport {
    std::int64_t count = 0;
    double empirical_mean = 0.0;
    std::vector<double> empirical_moments;  // first and second moments
    double exact_mean = 0.0;
    double standard_error_estimate = 0.0;
    std::uint64_t seed = 0;
};

// Draws `count` iid indices by inverse CDF over p_s (ties toward the lower
// index) and reports empirical statistics next to the exact mean.  Identical
// seeds give bit-identical reports.
SampleReport sample_classical(const ProbabilityState& state, const ClassicalObservable& obs,
                              std::int64_t count, std::uint64_t seed);

// Born-rule sampling in the computational basis: outcome s has probability
// rho_ss.  The observable must be diagonal (off-diagonal magnitude below
// 1e-12); measurement in other bases is out of scope.
SampleReport sample_diagonal_quantum(const DensityMatrix& rho, const QuantumObservable& obs,
                                     std::int64_t count, std::uint64_t seed);

// Uniform point on the probability simplex: Dirichlet(1,...,1) via normalized
// exponential draws.
ProbabilityState random_simplex(int n, std::uint64_t seed);

// Ginibre-style random density matrix: G G^dagger / Tr(G G^dagger) for a
// complex standard-Gaussian N x N draw G.
DensityMatrix random_density(int n, std::uint64_t seed);

}  // namespace qhc
