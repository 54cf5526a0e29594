#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qhc/errors.hpp"

namespace qhc {

using Complex = std::complex<double>;

// Dense row-major complex matrix.  Small and value-semantic; everything in
// this library runs at qudit scale (N <= ~64).
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw ArgumentError("negative matrix dimension");
    }

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(int r, int c) {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const Complex& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const std::vector<Complex>& data() const { return a_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    // max |A(r,c) - conj(A(c,r))| over all entries; square matrices only.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    bool operator==(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    int rows_, cols_;
    std::vector<Complex> a_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product in row-major index order:
// (A (x) B)(ia*rb+ib, ja*cb+jb) = A(ia,ja) * B(ib,jb).
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
// Sweeps run until the off-diagonal Frobenius norm drops below 1e-12 relative
// to the input norm.  The matrix is not checked for Hermiticity here; callers
// validate first.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qhc
