#pragma once

#include <string>
#include <vector>

#include "qhc/indexmap.hpp"
#include "qhc/matrix.hpp"

namespace qhc {

// Hermitian N x N observable matrix F_{ss'}.
class QuantumObservable {
public:
    explicit QuantumObservable(ComplexMatrix entries);

    int dim() const { return entries_.rows(); }
    const ComplexMatrix& matrix() const { return entries_; }

private:
    struct Trusted {};
    QuantumObservable(ComplexMatrix entries, Trusted) : entries_(std::move(entries)) {}

    friend QuantumObservable kron(const std::vector<QuantumObservable>& factors);
    friend QuantumObservable lift_observable(const IndexMap& map, int subsystem,
                                             const QuantumObservable& factor);

    ComplexMatrix entries_;
};

// One violated density-matrix invariant and how badly it failed.
struct Violation {
    std::string invariant;  // "finite" | "hermitian" | "trace" | "positive-semidefinite"
    double magnitude = 0.0;
};

struct DensityValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
    // Eigenvalues of the Hermitian part, ascending; filled when finite.
    std::vector<double> eigenvalues;
};

// Validated density matrix: Hermitian, unit trace, positive semidefinite.
// Eigenvalues are computed once at validation and reused for entropies.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix entries);

    int dim() const { return entries_.rows(); }
    double spin() const { return (dim() - 1) / 2.0; }
    const ComplexMatrix& matrix() const { return entries_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

private:
    ComplexMatrix entries_;
    std::vector<double> eigenvalues_;
};

// Checks the density-matrix invariants without throwing.
DensityValidationReport validate_density_report(const ComplexMatrix& entries);

// Returns the validated matrix or throws ValidationError naming every
// violated invariant and its magnitude.
DensityMatrix validate_density(const ComplexMatrix& entries);

// Multi-index addressing of a square matrix through an index map; a pure
// view, no data copied.
class RelabeledView {
public:
    RelabeledView(const ComplexMatrix& m, const IndexMap& map);

    Complex at(const MultiIndex& row, const MultiIndex& col) const;
    const ComplexMatrix& flatten() const { return *m_; }
    const IndexMap& map() const { return *map_; }

private:
    const ComplexMatrix* m_;
    const IndexMap* map_;
};

RelabeledView relabel(const DensityMatrix& rho, const IndexMap& map);
RelabeledView relabel(const QuantumObservable& obs, const IndexMap& map);

// Tr(F rho).  The imaginary residue must stay below 1e-10; it is checked and
// discarded.
double expectation(const DensityMatrix& rho, const QuantumObservable& obs);

// Reduction to the subsystems in `keep` (1-based, strictly increasing,
// nonempty, proper subset), summing the traced indices pairwise.
DensityMatrix partial_trace(const DensityMatrix& rho, const IndexMap& map,
                            const std::vector<int>& keep);

// Von Neumann entropy in nats; eigenvalues below 1e-12 are treated as zero.
double von_neumann_entropy(const DensityMatrix& rho);

struct QuantumSubadditivityReport {
    double s12 = 0.0;  // S(rho)
    double s1 = 0.0;
    double s2 = 0.0;
    bool holds = false;
    double slack = 0.0;  // s1 + s2 - s12
};

QuantumSubadditivityReport check_quantum_subadditivity(const DensityMatrix& rho,
                                                       const IndexMap& map);

struct QuantumSsaReport {
    double s123 = 0.0;
    double s2 = 0.0;
    double s12 = 0.0;
    double s23 = 0.0;
    double lhs = 0.0;  // s123 + s2
    double rhs = 0.0;  // s12 + s23
    bool holds = false;
    double slack = 0.0;
};

QuantumSsaReport check_quantum_ssa(const DensityMatrix& rho, const IndexMap& map);

// Kronecker product of the factors, row-major index order.
QuantumObservable kron(const std::vector<QuantumObservable>& factors);

// 1 (x) ... (x) F_p (x) ... (x) 1 with identities on every other subsystem.
// Row-major maps only; lifts on distinct subsystems commute.
QuantumObservable lift_observable(const IndexMap& map, int subsystem,
                                  const QuantumObservable& factor);

// Tr(F~_1 F~_2 ... F~_l rho) over the lifted factors; row-major maps only.
double mean_as_quantum_correlation(const DensityMatrix& rho, const IndexMap& map,
                                   const std::vector<QuantumObservable>& factors);

}  // namespace qhc
