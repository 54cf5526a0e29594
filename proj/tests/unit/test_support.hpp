#pragma once

#include <complex>
#include <vector>

#include "qhc/matrix.hpp"
#include "qhc/quantum.hpp"
#include "qhc/sampler.hpp"

namespace qhc::test {

// Random Hermitian matrix with Gaussian entries, (G + G^dagger)/2.
inline ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix g(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = Complex(rng.next_gaussian(), rng.next_gaussian());
    ComplexMatrix h = g;
    h += g.adjoint();
    h *= Complex(0.5, 0.0);
    return h;
}

// Random real observable values in [-1, 1].
inline std::vector<double> random_values(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = 2.0 * rng.next_double() - 1.0;
    return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace qhc::test
