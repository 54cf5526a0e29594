#include "qhc/sampler.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qhc {

double SplitMix64::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_double_positive();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

namespace {

SampleReport sample_from(const std::vector<double>& probs, const std::vector<double>& values,
                         double exact_mean, std::int64_t count, std::uint64_t seed) {
    if (count < 1) throw ArgumentError("sample count must be >= 1, got " + std::to_string(count));

    const std::size_t n = probs.size();
    std::vector<double> cdf(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf[n - 1] = 1.0;  // guard against the cumulative sum landing below 1

    SplitMix64 rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        const double u = rng.next_double();
        // smallest s with u <= cdf[s]: a draw landing exactly on a boundary
        // ties toward the lower index
        std::size_t lo = 0, hi = n - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u <= cdf[mid]) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        // never report an outcome with zero probability (possible only when u
        // hits the shared boundary of an empty cell)
        while (lo + 1 < n && probs[lo] == 0.0) ++lo;
        const double f = values[lo];
        sum += f;
        sum_sq += f * f;
    }

    SampleReport report;
    report.count = count;
    report.seed = seed;
    report.exact_mean = exact_mean;
    report.empirical_mean = sum / static_cast<double>(count);
    const double m2 = sum_sq / static_cast<double>(count);
    report.empirical_moments = {report.empirical_mean, m2};
    const double var = std::max(0.0, m2 - report.empirical_mean * report.empirical_mean);
    report.standard_error_estimate = std::sqrt(var / static_cast<double>(count));
    return report;
}

}  // namespace

SampleReport sample_classical(const ProbabilityState& state, const ClassicalObservable& obs,
                              std::int64_t count, std::uint64_t seed) {
    if (state.size() != obs.size()) {
        throw DimensionError("sample: state length " + std::to_string(state.size()) +
                             " vs observable length " + std::to_string(obs.size()));
    }
    return sample_from(state.probs(), obs.values(), mean(state, obs), count, seed);
}

SampleReport sample_diagonal_quantum(const DensityMatrix& rho, const QuantumObservable& obs,
                                     std::int64_t count, std::uint64_t seed) {
    if (rho.dim() != obs.dim()) {
        throw DimensionError("sample: state dimension " + std::to_string(rho.dim()) +
                             " vs observable dimension " + std::to_string(obs.dim()));
    }
    double off = 0.0;
    for (int r = 0; r < obs.dim(); ++r)
        for (int c = 0; c < obs.dim(); ++c)
            if (r != c) off = std::max(off, std::abs(obs.matrix()(r, c)));
    if (off > 1e-12) {
        throw UnsupportedObservableError(
            "computational-basis sampling needs a diagonal observable; max off-diagonal "
            "magnitude is " + std::to_string(off));
    }

    std::vector<double> probs(static_cast<std::size_t>(rho.dim()));
    std::vector<double> values(static_cast<std::size_t>(rho.dim()));
    for (int s = 0; s < rho.dim(); ++s) {
        probs[static_cast<std::size_t>(s)] = std::max(0.0, rho.matrix()(s, s).real());
        values[static_cast<std::size_t>(s)] = obs.matrix()(s, s).real();
    }
    const ProbabilityState diag(probs);
    const ClassicalObservable diag_obs(values);
    return sample_from(diag.probs(), diag_obs.values(), mean(diag, diag_obs), count, seed);
}

ProbabilityState random_simplex(int n, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("simplex dimension must be >= 1");
    SplitMix64 rng(seed);
    std::vector<double> draws(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& x : draws) {
        x = -std::log(rng.next_double_positive());
        total += x;
    }
    for (double& x : draws) x /= total;
    return ProbabilityState(std::move(draws));
}

DensityMatrix random_density(int n, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("density dimension must be >= 1");
    SplitMix64 rng(seed);
    ComplexMatrix g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = Complex(rng.next_gaussian(), rng.next_gaussian());

    const ComplexMatrix gg = matmul(g, g.adjoint());
    const double tr = gg.trace().real();
    ComplexMatrix rho = gg;
    rho *= Complex(1.0 / tr, 0.0);
    // Symmetrize the float residue of G G^dagger so validation never trips on
    // a last-bit Hermiticity defect.
    ComplexMatrix herm = rho;
    herm += rho.adjoint();
    herm *= Complex(0.5, 0.0);
    return DensityMatrix(std::move(herm));
}

}  // namespace qhc
