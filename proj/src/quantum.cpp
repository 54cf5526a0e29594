#include "qhc/quantum.hpp"

#include <cmath>
#include <sstream>

namespace qhc {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = 1e-10;
constexpr double kEntropyCutoff = 1e-12;
constexpr double kImagTol = 1e-10;
constexpr double kHoldsTol = 1e-10;

void require_square(const ComplexMatrix& m, const char* what) {
    if (!m.square()) {
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", expected square");
    }
}

void require_map_matches(int dim, const IndexMap& map) {
    if (map.total() != dim) {
        throw DimensionError("index map covers " + std::to_string(map.total()) +
                             " indices, matrix dimension is " + std::to_string(dim));
    }
}

void require_row_major(const IndexMap& map, const char* what) {
    if (map.convention() != Convention::RowMajor) {
        throw ConventionMismatchError(std::string(what) +
                                      " ties Kronecker order to row-major decoding; "
                                      "use a row-major map");
    }
}

void check_keep_set(const IndexMap& map, const std::vector<int>& keep) {
    if (keep.empty()) throw ArgumentError("partial trace: keep set is empty");
    if (static_cast<int>(keep.size()) >= map.rank()) {
        throw ArgumentError("partial trace: keep set must be a proper subset of subsystems");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > map.rank()) {
            throw RangeError("partial trace: subsystem " + std::to_string(keep[i]) +
                             " outside 1.." + std::to_string(map.rank()));
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw ArgumentError("partial trace: keep set must be strictly increasing");
        }
    }
}

double entropy_from_eigenvalues(const std::vector<double>& eig) {
    double h = 0.0;
    for (double lambda : eig) {
        if (lambda >= kEntropyCutoff) h -= lambda * std::log(lambda);
    }
    return h;
}

}  // namespace

QuantumObservable::QuantumObservable(ComplexMatrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "observable");
    if (!entries_.all_finite()) throw ValidationError("observable: non-finite entry");
    const double defect = entries_.hermiticity_defect();
    if (defect > kHermitianTol) {
        throw ValidationError("observable: hermitian violated by " + std::to_string(defect));
    }
}

DensityValidationReport validate_density_report(const ComplexMatrix& entries) {
    DensityValidationReport report;
    if (!entries.square()) {
        report.violations.push_back({"square", 0.0});
        return report;
    }
    if (!entries.all_finite()) {
        report.violations.push_back({"finite", 0.0});
        return report;
    }
    const double defect = entries.hermiticity_defect();
    if (defect > kHermitianTol) report.violations.push_back({"hermitian", defect});

    const double trace_dev = std::abs(entries.trace() - Complex(1.0, 0.0));
    if (trace_dev > kTraceTol) report.violations.push_back({"trace", trace_dev});

    // PSD is judged on the Hermitian part so the diagnostic stays meaningful
    // even when the Hermiticity check already failed.
    ComplexMatrix herm = entries;
    herm += entries.adjoint();
    herm *= Complex(0.5, 0.0);
    report.eigenvalues = hermitian_eigenvalues(herm);
    const double min_eig = report.eigenvalues.front();
    if (min_eig < -kPsdTol) {
        report.violations.push_back({"positive-semidefinite", -min_eig});
    }
    report.valid = report.violations.empty();
    return report;
}

DensityMatrix validate_density(const ComplexMatrix& entries) { return DensityMatrix(entries); }

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    DensityValidationReport report = validate_density_report(entries_);
    if (!report.valid) {
        std::ostringstream msg;
        msg << "density matrix invalid:";
        for (const Violation& v : report.violations) {
            msg << " " << v.invariant << " (by " << v.magnitude << ")";
        }
        throw ValidationError(msg.str());
    }
    eigenvalues_ = std::move(report.eigenvalues);
    // Trailing negatives within the PSD slack become exact zeros so entropies
    // never see a negative weight.
    for (double& lambda : eigenvalues_) {
        if (lambda < 0.0) lambda = 0.0;
    }
}

RelabeledView::RelabeledView(const ComplexMatrix& m, const IndexMap& map)
    : m_(&m), map_(&map) {
    require_square(m, "relabel");
    require_map_matches(m.rows(), map);
}

Complex RelabeledView::at(const MultiIndex& row, const MultiIndex& col) const {
    return (*m_)(static_cast<int>(map_->encode(row) - 1),
                 static_cast<int>(map_->encode(col) - 1));
}

RelabeledView relabel(const DensityMatrix& rho, const IndexMap& map) {
    return RelabeledView(rho.matrix(), map);
}

RelabeledView relabel(const QuantumObservable& obs, const IndexMap& map) {
    return RelabeledView(obs.matrix(), map);
}

namespace {

double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& f, const char* what) {
    if (f.rows() != rho.rows()) {
        throw DimensionError(std::string(what) + ": observable dimension " +
                             std::to_string(f.rows()) + " vs state dimension " +
                             std::to_string(rho.rows()));
    }
    Complex acc = 0.0;
    const int n = rho.rows();
    for (int s = 0; s < n; ++s)
        for (int sp = 0; sp < n; ++sp) acc += f(s, sp) * rho(sp, s);
    if (std::abs(acc.imag()) > kImagTol) {
        throw Error(std::string(what) + ": imaginary residue " +
                    std::to_string(acc.imag()) + " exceeds tolerance");
    }
    return acc.real();
}

}  // namespace

double expectation(const DensityMatrix& rho, const QuantumObservable& obs) {
    return real_expectation(rho.matrix(), obs.matrix(), "expectation");
}

DensityMatrix partial_trace(const DensityMatrix& rho, const IndexMap& map,
                            const std::vector<int>& keep) {
    require_map_matches(rho.dim(), map);
    check_keep_set(map, keep);

    std::vector<int> traced;
    for (int p = 1; p <= map.rank(); ++p) {
        bool kept = false;
        for (int k : keep) kept = kept || (k == p);
        if (!kept) traced.push_back(p);
    }

    std::vector<int> kept_dims, traced_dims;
    for (int p : keep) kept_dims.push_back(map.factorization().factor(p - 1));
    for (int p : traced) traced_dims.push_back(map.factorization().factor(p - 1));

    std::int64_t kept_total = 1, traced_total = 1;
    for (int d : kept_dims) kept_total *= d;
    for (int d : traced_dims) traced_total *= d;

    // Row-major odometers over the kept and traced boxes.
    auto unrank = [](std::int64_t r, const std::vector<int>& dims) {
        std::vector<int> idx(dims.size());
        for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
            idx[static_cast<std::size_t>(p)] =
                static_cast<int>(r % dims[static_cast<std::size_t>(p)]) + 1;
            r /= dims[static_cast<std::size_t>(p)];
        }
        return idx;
    };

    auto assemble = [&](const std::vector<int>& kept_idx, const std::vector<int>& traced_idx) {
        MultiIndex idx(static_cast<std::size_t>(map.rank()));
        for (std::size_t i = 0; i < keep.size(); ++i) {
            idx[static_cast<std::size_t>(keep[i] - 1)] = kept_idx[i];
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
            idx[static_cast<std::size_t>(traced[i] - 1)] = traced_idx[i];
        }
        return idx;
    };

    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix reduced(static_cast<int>(kept_total), static_cast<int>(kept_total));
    for (std::int64_t a = 0; a < kept_total; ++a) {
        const std::vector<int> ia = unrank(a, kept_dims);
        for (std::int64_t b = 0; b < kept_total; ++b) {
            const std::vector<int> ib = unrank(b, kept_dims);
            Complex sum = 0.0;
            for (std::int64_t t = 0; t < traced_total; ++t) {
                const std::vector<int> it = unrank(t, traced_dims);
                const std::int64_t row = map.encode(assemble(ia, it));
                const std::int64_t col = map.encode(assemble(ib, it));
                sum += m(static_cast<int>(row - 1), static_cast<int>(col - 1));
            }
            reduced(static_cast<int>(a), static_cast<int>(b)) = sum;
        }
    }
    return DensityMatrix(std::move(reduced));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_from_eigenvalues(rho.eigenvalues());
}

QuantumSubadditivityReport check_quantum_subadditivity(const DensityMatrix& rho,
                                                       const IndexMap& map) {
    if (map.rank() != 2) {
        throw UnsupportedPartitionError("quantum subadditivity requires a bipartite map, got " +
                                        std::to_string(map.rank()) + " parts");
    }
    QuantumSubadditivityReport r;
    r.s12 = von_neumann_entropy(rho);
    r.s1 = von_neumann_entropy(partial_trace(rho, map, {1}));
    r.s2 = von_neumann_entropy(partial_trace(rho, map, {2}));
    r.slack = r.s1 + r.s2 - r.s12;
    r.holds = r.s12 <= r.s1 + r.s2 + kHoldsTol;
    return r;
}

QuantumSsaReport check_quantum_ssa(const DensityMatrix& rho, const IndexMap& map) {
    if (map.rank() != 3) {
        throw UnsupportedPartitionError(
            "quantum strong subadditivity requires a tripartite map, got " +
            std::to_string(map.rank()) + " parts");
    }
    QuantumSsaReport r;
    r.s123 = von_neumann_entropy(rho);
    r.s2 = von_neumann_entropy(partial_trace(rho, map, {2}));
    r.s12 = von_neumann_entropy(partial_trace(rho, map, {1, 2}));
    r.s23 = von_neumann_entropy(partial_trace(rho, map, {2, 3}));
    r.lhs = r.s123 + r.s2;
    r.rhs = r.s12 + r.s23;
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs + kHoldsTol;
    return r;
}

QuantumObservable kron(const std::vector<QuantumObservable>& factors) {
    if (factors.empty()) throw ArgumentError("kron: no factors given");
    ComplexMatrix out = factors.front().matrix();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kronecker(out, factors[i].matrix());
    }
    // A Kronecker product of Hermitian matrices is Hermitian entry-for-entry,
    // so revalidation is skipped.
    return QuantumObservable(std::move(out), QuantumObservable::Trusted{});
}

QuantumObservable lift_observable(const IndexMap& map, int subsystem,
                                  const QuantumObservable& factor) {
    require_row_major(map, "lift_observable");
    if (subsystem < 1 || subsystem > map.rank()) {
        throw RangeError("subsystem " + std::to_string(subsystem) + " outside 1.." +
                         std::to_string(map.rank()));
    }
    if (factor.dim() != map.factorization().factor(subsystem - 1)) {
        throw DimensionError("lifted factor dimension " + std::to_string(factor.dim()) +
                             " vs subsystem dimension " +
                             std::to_string(map.factorization().factor(subsystem - 1)));
    }
    ComplexMatrix out = (subsystem == 1) ? factor.matrix()
                                         : ComplexMatrix::identity(map.factorization().factor(0));
    for (int p = 2; p <= map.rank(); ++p) {
        const ComplexMatrix& next =
            (p == subsystem) ? factor.matrix()
                             : ComplexMatrix::identity(map.factorization().factor(p - 1));
        out = kronecker(out, next);
    }
    return QuantumObservable(std::move(out), QuantumObservable::Trusted{});
}

double mean_as_quantum_correlation(const DensityMatrix& rho, const IndexMap& map,
                                   const std::vector<QuantumObservable>& factors) {
    require_row_major(map, "mean_as_quantum_correlation");
    require_map_matches(rho.dim(), map);
    if (static_cast<int>(factors.size()) != map.rank()) {
        throw DimensionError("expected one factor per subsystem: " +
                             std::to_string(map.rank()) + " needed, " +
                             std::to_string(factors.size()) + " given");
    }
    ComplexMatrix product = lift_observable(map, 1, factors[0]).matrix();
    for (int p = 2; p <= map.rank(); ++p) {
        product = matmul(product,
                         lift_observable(map, p, factors[static_cast<std::size_t>(p - 1)]).matrix());
    }
    return real_expectation(rho.matrix(), product, "quantum correlation");
}

}  // namespace qhc
