#pragma once

#include <string>
#include <vector>

#include "qhc/classical.hpp"
#include "qhc/indexmap.hpp"
#include "qhc/matrix.hpp"
#include "qhc/quantum.hpp"

namespace qhc {

// Default acceptance threshold, relative to the input's max-abs entry.
inline constexpr double kFactorTol = 1e-10;

// Label attached to every result: first factor has unit Euclidean (Frobenius)
// norm and a positive leading entry; scale and sign sit on the last factor.
inline constexpr const char* kFactorGauge = "unit-norm-first-positive";

struct ClassicalFactorization {
    bool success = false;
    bool degenerate = false;           // zero observable
    double residual = 0.0;             // max-abs reconstruction error
    std::vector<std::vector<double>> factors;  // one per subsystem
    std::string gauge = kFactorGauge;
};

struct QuantumFactorization {
    bool success = false;
    bool degenerate = false;
    double residual = 0.0;
    std::vector<ComplexMatrix> factors;  // one per subsystem; Hermitian on success
    std::string gauge = kFactorGauge;
    std::string reason;  // set when success is false
};

// Tests whether the observable, viewed through the map as a function
// Phi(j,k), has product form phi(j) * chi(k).  Bipartite maps only; success
// means the best rank-1 approximation of the value matrix reconstructs the
// input within tol * max|input|.
ClassicalFactorization factor_classical(const ClassicalObservable& obs, const IndexMap& map,
                                        double tol = kFactorTol);

// Multipartite product form a(j) b(k) c(l) ..., peeled left to right by
// repeated bipartite rank-1 factorization (subsystem 1 against the rest).
ClassicalFactorization factor_classical_multi(const ClassicalObservable& obs,
                                              const IndexMap& map, double tol = kFactorTol);

// Kronecker factorization F = F1 (x) F2 via the paired-index unfolding whose
// rank-1 structure corresponds to Kronecker factors.  Row-major bipartite
// maps only.  On success the factors carry a phase gauge that makes both
// Hermitian; when no such phase exists the result is a failure with reason
// "non-Hermitian factor gauge".
QuantumFactorization factor_quantum(const QuantumObservable& obs, const IndexMap& map,
                                    double tol = kFactorTol);

}  // namespace qhc
