#include "qhc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qhc {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!square()) throw DimensionError("trace of a non-square matrix");
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) throw DimensionError("hermiticity defect of a non-square matrix");
    double m = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix addition shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : a_) z *= scale;
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()));
    ComplexMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex arv = a(r, k);
            if (arv == 0.0) continue;
            for (int c = 0; c < b.cols(); ++c) out(r, c) += arv * b(k, c);
        }
    }
    return out;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const Complex av = a(ia, ja);
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
        }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
    if (!input.square()) throw DimensionError("eigenvalues of a non-square matrix");
    const int n = input.rows();
    if (n == 0) return {};
    if (n == 1) return {input(0, 0).real()};

    ComplexMatrix a = input;
    const double scale = a.frobenius_norm();
    const double tol = 1e-12 * std::max(scale, 1e-300);
    const int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double m = std::abs(apq);
                if (m <= tol / n) continue;

                // Unitary 2x2 rotation on (p,q) zeroing a(p,q).  With
                // a(p,q) = m e^{i alpha} the rotation is
                //   U = [c, -s e^{i alpha}; s e^{-i alpha}, c],
                // where tan(2 theta) = 2m / (a_pp - a_qq).
                const Complex phase = apq / m;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * m);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int r = 0; r < n; ++r) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = c * arp + s * std::conj(phase) * arq;
                    a(r, q) = -s * phase * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const Complex apr = a(p, r);
                    const Complex aqr = a(q, r);
                    a(p, r) = c * apr + s * phase * aqr;
                    a(q, r) = -s * std::conj(phase) * apr + c * aqr;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }

    if (sweep == max_sweeps && off_diagonal_norm(a) > tol) {
        throw Error("jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                    " sweeps");
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace qhc
