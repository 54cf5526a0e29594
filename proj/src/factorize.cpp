#include "qhc/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <type_traits>

namespace qhc {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kIterTol = 1e-14;

template <typename Scalar>
struct Dense {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Dense(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Scalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    double max_abs() const {
        double m = 0.0;
        for (const Scalar& z : a) m = std::max(m, std::abs(z));
        return m;
    }
};

template <typename Scalar>
struct RankOne {
    std::vector<Scalar> left;   // length rows
    std::vector<Scalar> right;  // length cols
    double residual = 0.0;      // max-abs |M - left right^T|
};

template <typename Scalar>
double sq_norm(const std::vector<Scalar>& v) {
    double s = 0.0;
    for (const Scalar& z : v) s += std::norm(std::complex<double>(z));
    return s;
}

// Best rank-1 approximation M ~ left * right^T by alternating least squares.
// Initialized from the row holding the largest absolute entry; iterates until
// the reconstruction moves less than kIterTol * max|M| or the iteration cap.
template <typename Scalar>
RankOne<Scalar> rank_one_approx(const Dense<Scalar>& m) {
    RankOne<Scalar> out;
    out.left.assign(static_cast<std::size_t>(m.rows), Scalar(0));
    out.right.assign(static_cast<std::size_t>(m.cols), Scalar(0));

    const double scale = m.max_abs();
    if (scale == 0.0) return out;  // zero matrix: zero factors, residual 0

    int rstar = 0;
    double best = -1.0;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (std::abs(m.at(r, c)) > best) {
                best = std::abs(m.at(r, c));
                rstar = r;
            }
    for (int c = 0; c < m.cols; ++c) out.right[static_cast<std::size_t>(c)] = m.at(rstar, c);

    std::vector<Scalar> prev_left, prev_right;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        // left = M conj(right) / |right|^2
        const double rn = sq_norm(out.right);
        if (rn == 0.0) break;
        for (int r = 0; r < m.rows; ++r) {
            Scalar acc(0);
            for (int c = 0; c < m.cols; ++c) {
                if constexpr (std::is_same_v<Scalar, double>) {
                    acc += m.at(r, c) * out.right[static_cast<std::size_t>(c)];
                } else {
                    acc += m.at(r, c) * std::conj(out.right[static_cast<std::size_t>(c)]);
                }
            }
            out.left[static_cast<std::size_t>(r)] = acc / rn;
        }
        // right = M^T conj(left) / |left|^2
        const double ln = sq_norm(out.left);
        if (ln == 0.0) break;
        for (int c = 0; c < m.cols; ++c) {
            Scalar acc(0);
            for (int r = 0; r < m.rows; ++r) {
                if constexpr (std::is_same_v<Scalar, double>) {
                    acc += m.at(r, c) * out.left[static_cast<std::size_t>(r)];
                } else {
                    acc += m.at(r, c) * std::conj(out.left[static_cast<std::size_t>(r)]);
                }
            }
            out.right[static_cast<std::size_t>(c)] = acc / ln;
        }

        if (iter > 0) {
            double moved = 0.0;
            for (std::size_t i = 0; i < out.left.size(); ++i)
                moved = std::max(moved, std::abs(out.left[i] - prev_left[i]));
            for (std::size_t i = 0; i < out.right.size(); ++i)
                moved = std::max(moved, std::abs(out.right[i] - prev_right[i]));
            if (moved <= kIterTol * scale) break;
        }
        prev_left = out.left;
        prev_right = out.right;
    }

    out.residual = 0.0;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            const Scalar delta = m.at(r, c) - out.left[static_cast<std::size_t>(r)] *
                                                  out.right[static_cast<std::size_t>(c)];
            out.residual = std::max(out.residual, std::abs(delta));
        }
    return out;
}

// Sign making the leading (largest-magnitude-first) component positive; the
// first entry above the relative cutoff decides.
double leading_sign(const std::vector<double>& v) {
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    for (double x : v) {
        if (std::abs(x) > 1e-12 * scale) return x >= 0.0 ? 1.0 : -1.0;
    }
    return 1.0;
}

// Unit-norm-first-positive gauge across a factor chain: every factor except
// the last becomes unit Euclidean norm with positive leading entry; the
// accumulated scale lands on the last factor.
void apply_gauge(std::vector<std::vector<double>>& factors) {
    if (factors.size() < 2) return;
    double carried = 1.0;
    for (std::size_t p = 0; p + 1 < factors.size(); ++p) {
        double norm = std::sqrt(sq_norm(factors[p]));
        if (norm == 0.0) continue;
        const double sign = leading_sign(factors[p]);
        for (double& x : factors[p]) x *= sign / norm;
        carried *= sign * norm;
    }
    for (double& x : factors.back()) x *= carried;
}

std::vector<double> observable_in_row_major_order(const ClassicalObservable& obs,
                                                  const IndexMap& map) {
    const IndexMap row_major(map.factorization(), Convention::RowMajor);
    std::vector<double> v(static_cast<std::size_t>(map.total()));
    for (std::int64_t s = 1; s <= map.total(); ++s) {
        v[static_cast<std::size_t>(row_major.encode(map.decode(s)) - 1)] =
            obs[static_cast<int>(s - 1)];
    }
    return v;
}

}  // namespace

ClassicalFactorization factor_classical(const ClassicalObservable& obs, const IndexMap& map,
                                        double tol) {
    if (map.rank() != 2) {
        throw UnsupportedPartitionError("classical factorization requires a bipartite map, got " +
                                        std::to_string(map.rank()) + " parts");
    }
    return factor_classical_multi(obs, map, tol);
}

ClassicalFactorization factor_classical_multi(const ClassicalObservable& obs,
                                              const IndexMap& map, double tol) {
    if (map.rank() < 2) {
        throw UnsupportedPartitionError(
            "multipartite factorization requires at least two subsystems");
    }
    if (map.total() != obs.size()) {
        throw DimensionError("index map covers " + std::to_string(map.total()) +
                             " indices, observable has " + std::to_string(obs.size()));
    }
    if (tol <= 0.0) throw ArgumentError("factorization tolerance must be > 0");

    ClassicalFactorization result;
    const std::vector<int>& dims = map.factorization().factors();
    const int l = map.rank();

    // Values reordered so that peeling can treat the remainder as a row-major
    // box over the remaining subsystems, whatever the input map convention.
    std::vector<double> remaining = observable_in_row_major_order(obs, map);
    const double input_scale =
        *std::max_element(remaining.begin(), remaining.end(),
                          [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (std::abs(input_scale) == 0.0) {
        result.success = true;
        result.degenerate = true;
        for (int p = 0; p < l; ++p) {
            result.factors.emplace_back(static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]),
                                        0.0);
        }
        return result;
    }

    bool all_stages_ok = true;
    for (int p = 0; p < l - 1; ++p) {
        const int d = dims[static_cast<std::size_t>(p)];
        const int rest = static_cast<int>(remaining.size()) / d;
        Dense<double> m(d, rest);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < rest; ++c)
                m.at(r, c) = remaining[static_cast<std::size_t>(r) * rest + c];

        RankOne<double> r1 = rank_one_approx(m);
        all_stages_ok = all_stages_ok && (r1.residual <= tol * m.max_abs());
        result.factors.push_back(r1.left);
        remaining = r1.right;
    }
    result.factors.push_back(remaining);

    apply_gauge(result.factors);

    // Residual of the full reconstruction against the input, max-abs.
    const std::vector<double> input = observable_in_row_major_order(obs, map);
    double residual = 0.0;
    for (std::int64_t s = 0; s < map.total(); ++s) {
        double prod = 1.0;
        std::int64_t r = s;
        for (int p = l - 1; p >= 0; --p) {
            const int d = dims[static_cast<std::size_t>(p)];
            prod *= result.factors[static_cast<std::size_t>(p)]
                                  [static_cast<std::size_t>(r % d)];
            r /= d;
        }
        residual = std::max(residual, std::abs(input[static_cast<std::size_t>(s)] - prod));
    }
    result.residual = residual;
    result.success = all_stages_ok && residual <= tol * std::abs(input_scale);
    return result;
}

QuantumFactorization factor_quantum(const QuantumObservable& obs, const IndexMap& map,
                                    double tol) {
    if (map.convention() != Convention::RowMajor) {
        throw ConventionMismatchError(
            "Kronecker factorization pairs indices in row-major order; use a row-major map");
    }
    if (map.rank() != 2) {
        throw UnsupportedPartitionError("Kronecker factorization requires a bipartite map, got " +
                                        std::to_string(map.rank()) + " parts");
    }
    if (map.total() != obs.dim()) {
        throw DimensionError("index map covers " + std::to_string(map.total()) +
                             " indices, observable dimension is " + std::to_string(obs.dim()));
    }
    if (tol <= 0.0) throw ArgumentError("factorization tolerance must be > 0");

    const int n = map.factorization().factor(0);
    const int mdim = map.factorization().factor(1);
    const ComplexMatrix& f = obs.matrix();

    QuantumFactorization result;
    const double scale = f.max_abs();
    if (scale == 0.0) {
        result.success = true;
        result.degenerate = true;
        result.factors.emplace_back(n, n);
        result.factors.emplace_back(mdim, mdim);
        return result;
    }

    // Unfolding that pairs (j,j') rows against (k,k') columns; F = A (x) B
    // exactly when this matrix is vec(A) vec(B)^T, i.e. rank 1.
    Dense<Complex> unfolding(n * n, mdim * mdim);
    for (int j = 0; j < n; ++j)
        for (int jp = 0; jp < n; ++jp)
            for (int k = 0; k < mdim; ++k)
                for (int kp = 0; kp < mdim; ++kp)
                    unfolding.at(j * n + jp, k * mdim + kp) = f(j * mdim + k, jp * mdim + kp);

    RankOne<Complex> r1 = rank_one_approx(unfolding);
    result.residual = r1.residual;
    if (r1.residual > tol * scale) {
        result.reason = "best rank-1 unfolding residual above tolerance";
        ComplexMatrix a(n, n), b(mdim, mdim);
        for (int j = 0; j < n; ++j)
            for (int jp = 0; jp < n; ++jp) a(j, jp) = r1.left[static_cast<std::size_t>(j * n + jp)];
        for (int k = 0; k < mdim; ++k)
            for (int kp = 0; kp < mdim; ++kp)
                b(k, kp) = r1.right[static_cast<std::size_t>(k * mdim + kp)];
        result.factors = {std::move(a), std::move(b)};
        return result;
    }

    ComplexMatrix a(n, n), b(mdim, mdim);
    for (int j = 0; j < n; ++j)
        for (int jp = 0; jp < n; ++jp) a(j, jp) = r1.left[static_cast<std::size_t>(j * n + jp)];
    for (int k = 0; k < mdim; ++k)
        for (int kp = 0; kp < mdim; ++kp)
            b(k, kp) = r1.right[static_cast<std::size_t>(k * mdim + kp)];

    // Hermitian phase gauge: if A = e^{i theta} H with H Hermitian then
    // Tr(A^2) = e^{2 i theta} Tr(H^2) and Tr(H^2) > 0, so theta is half the
    // argument of Tr(A^2).
    const Complex tr_a2 = matmul(a, a).trace();
    if (std::abs(tr_a2) < 1e-12 * a.frobenius_norm() * a.frobenius_norm()) {
        result.reason = "non-Hermitian factor gauge";
        result.factors = {std::move(a), std::move(b)};
        return result;
    }
    const double theta = std::arg(tr_a2) / 2.0;
    a *= std::polar(1.0, -theta);
    b *= std::polar(1.0, theta);

    const double gauge_defect = std::max(a.hermiticity_defect() / std::max(a.max_abs(), 1e-300),
                                         b.hermiticity_defect() / std::max(b.max_abs(), 1e-300));
    if (gauge_defect > 1e-8) {
        result.reason = "non-Hermitian factor gauge";
        result.factors = {std::move(a), std::move(b)};
        return result;
    }

    // Symmetrize away the float residue so the factors are exactly Hermitian,
    // then fix norm and sign.
    ComplexMatrix a_h = a;
    a_h += a.adjoint();
    a_h *= Complex(0.5, 0.0);
    ComplexMatrix b_h = b;
    b_h += b.adjoint();
    b_h *= Complex(0.5, 0.0);

    const double norm_a = a_h.frobenius_norm();
    double sign = 1.0;
    const double cutoff = 1e-12 * a_h.max_abs();
    for (const Complex& z : a_h.data()) {
        if (std::abs(z) > cutoff) {
            const double lead = std::abs(z.real()) >= std::abs(z.imag()) ? z.real() : z.imag();
            sign = lead >= 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    a_h *= Complex(sign / norm_a, 0.0);
    b_h *= Complex(sign * norm_a, 0.0);

    const ComplexMatrix reconstruction = kronecker(a_h, b_h);
    double residual = 0.0;
    for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c)
            residual = std::max(residual, std::abs(f(r, c) - reconstruction(r, c)));
    result.residual = residual;
    result.success = residual <= tol * scale;
    if (!result.success) result.reason = "reconstruction residual above tolerance";
    result.factors = {std::move(a_h), std::move(b_h)};
    return result;
}

}  // namespace qhc
