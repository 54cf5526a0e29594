#include <doctest.h>

#include <Eigen/Dense>

#include "qhc/matrix.hpp"

#include "test_support.hpp"

using namespace qhc;

namespace {

// Independent eigenvalue oracle.
std::vector<double> eigen_eigenvalues(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

}  // namespace

TEST_CASE("jacobi eigenvalues: fixed small matrices") {
    SUBCASE("diagonal matrix returns its entries sorted") {
        ComplexMatrix m(3, 3);
        m(0, 0) = 0.3;
        m(1, 1) = 0.1;
        m(2, 2) = 0.6;
        auto eig = hermitian_eigenvalues(m);
        REQUIRE(eig.size() == 3);
        CHECK(eig[0] == doctest::Approx(0.1).epsilon(1e-14));
        CHECK(eig[1] == doctest::Approx(0.3).epsilon(1e-14));
        CHECK(eig[2] == doctest::Approx(0.6).epsilon(1e-14));
    }
    SUBCASE("sigma_x has eigenvalues -1, 1") {
        ComplexMatrix m(2, 2);
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        auto eig = hermitian_eigenvalues(m);
        CHECK(std::abs(eig[0] + 1.0) < 1e-13);
        CHECK(std::abs(eig[1] - 1.0) < 1e-13);
    }
    SUBCASE("sigma_y has eigenvalues -1, 1") {
        ComplexMatrix m(2, 2);
        m(0, 1) = Complex(0.0, -1.0);
        m(1, 0) = Complex(0.0, 1.0);
        auto eig = hermitian_eigenvalues(m);
        CHECK(std::abs(eig[0] + 1.0) < 1e-13);
        CHECK(std::abs(eig[1] - 1.0) < 1e-13);
    }
}

TEST_CASE("jacobi eigenvalues agree with the Eigen oracle on random Hermitian matrices") {
    for (int n : {2, 3, 4, 6, 8, 12, 16, 32, 64}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const ComplexMatrix h = test::random_hermitian(n, seed * 1000 + n);
            const auto mine = hermitian_eigenvalues(h);
            const auto oracle = eigen_eigenvalues(h);
            REQUIRE(mine.size() == oracle.size());
            const double scale = std::max(1.0, h.frobenius_norm());
            for (std::size_t i = 0; i < mine.size(); ++i) {
                CHECK(std::abs(mine[i] - oracle[i]) < 1e-11 * scale);
            }
        }
    }
}

TEST_CASE("kronecker product dimensions and entries") {
    ComplexMatrix a(2, 2), b(3, 3);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) a(r, c) = Complex(r + 1.0, c * 0.5);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) b(r, c) = Complex(0.1 * r, c + 1.0);
    const ComplexMatrix k = kronecker(a, b);
    REQUIRE(k.rows() == 6);
    for (int ia = 0; ia < 2; ++ia)
        for (int ja = 0; ja < 2; ++ja)
            for (int ib = 0; ib < 3; ++ib)
                for (int jb = 0; jb < 3; ++jb)
                    CHECK(k(ia * 3 + ib, ja * 3 + jb) == a(ia, ja) * b(ib, jb));
}

TEST_CASE("matmul against a hand-rolled triple loop") {
    const ComplexMatrix a = test::random_hermitian(5, 77);
    const ComplexMatrix b = test::random_hermitian(5, 78);
    const ComplexMatrix p = matmul(a, b);
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < 5; ++k) acc += a(r, k) * b(k, c);
            CHECK(std::abs(p(r, c) - acc) < 1e-12);
        }
    }
}

TEST_CASE("hermiticity defect") {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex(1.0, 2.0);
    m(1, 0) = Complex(1.0, -2.0);
    CHECK(m.hermiticity_defect() == 0.0);
    m(1, 0) = Complex(1.0, -2.5);
    CHECK(m.hermiticity_defect() == doctest::Approx(0.5));
}
