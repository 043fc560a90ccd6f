#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ineqlab/linalg.hpp"
#include "ineqlab/random.hpp"
#include "support.hpp"

using namespace ineqlab;
using testsupport::max_diff;
using testsupport::random_hermitian;

TEST(Vector, InnerIsLinearInFirstSlot) {
    const ComplexVector x{{1.0, 2.0}, {0.0, -1.0}};
    const ComplexVector y{{3.0, 0.0}, {1.0, 1.0}};
    const Complex a{0.5, -2.0};
    const Complex lhs = inner(a * x, y);
    const Complex rhs = a * inner(x, y);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(inner(x, a * y) - std::conj(a) * inner(x, y)), 0.0, 1e-14);
    // <x, y> = sum x_j conj(y_j) by hand: (1+2i)*3 + (-i)*(1-i) = 3+6i - i - 1 = 2 + 5i
    EXPECT_NEAR(inner(x, y).real(), 2.0, 1e-15);
    EXPECT_NEAR(inner(x, y).imag(), 5.0, 1e-15);
}

TEST(Vector, ShapeErrors) {
    EXPECT_THROW(ComplexVector(0), DimensionError);
    EXPECT_THROW(inner(ComplexVector(2), ComplexVector(3)), DimensionError);
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
    EXPECT_THROW(hermitian_eigen(ComplexMatrix(2, 3)), DimensionError);
}

TEST(Matrix, RejectsNonHermitian) {
    const auto m = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    EXPECT_FALSE(is_hermitian(m));
    EXPECT_THROW(hermitian_eigen(m), PreconditionError);
    EXPECT_THROW(hermitian_eigenvalues(m), PreconditionError);
    EXPECT_THROW(psd_sqrt(m), PreconditionError);
}

TEST(Eigen, TwoByTwoClosedForm) {
    GaussianSource g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix h = random_hermitian(g, 2);
        const double a = h(0, 0).real(), d = h(1, 1).real();
        const double r = std::hypot((a - d) / 2.0, std::abs(h(0, 1)));
        const double hi = (a + d) / 2.0 + r, lo = (a + d) / 2.0 - r;
        const auto e = hermitian_eigen(h).eigenvalues;
        EXPECT_NEAR(e[0], hi, 1e-12);
        EXPECT_NEAR(e[1], lo, 1e-12);
        const auto [mn, mx] = extreme_eigenvalues_unchecked(h);
        EXPECT_NEAR(mx, hi, 1e-12);
        EXPECT_NEAR(mn, lo, 1e-12);
    }
}

TEST(Eigen, JacobiReconstructsAndIsOrthonormal) {
    GaussianSource g(12);
    for (std::size_t n : {1u, 3u, 5u, 8u, 16u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix h = random_hermitian(g, n);
            const EigenDecomposition e = hermitian_eigen(h);
            EXPECT_TRUE(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
            const ComplexMatrix& v = e.eigenvectors;
            EXPECT_TRUE(is_unitary(v));
            const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(e.eigenvalues) * v.adjoint();
            EXPECT_LT(max_diff(rebuilt, h), 1e-10 * (1.0 + frobenius_norm(h)));
        }
    }
}

// Two unrelated algorithms (rotation sweeps and Sturm counts on the
// tridiagonal form) must agree eigenvalue by eigenvalue.
TEST(Eigen, JacobiAgreesWithTridiagonalPath) {
    GaussianSource g(13);
    for (std::size_t n : {2u, 3u, 4u, 7u, 16u, 33u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix h = random_hermitian(g, n);
            const auto jac = hermitian_eigen(h).eigenvalues;
            const auto tri = hermitian_eigenvalues(h);
            ASSERT_EQ(jac.size(), tri.size());
            const double scale = 1.0 + std::abs(jac.front()) + std::abs(jac.back());
            for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(jac[k], tri[k], 1e-11 * scale);
            const auto [mn, mx] = extreme_eigenvalues_unchecked(h);
            EXPECT_NEAR(mx, jac.front(), 1e-11 * scale);
            EXPECT_NEAR(mn, jac.back(), 1e-11 * scale);
        }
    }
}

TEST(Eigen, RepeatedAndZeroSpectrum) {
    const ComplexMatrix z(4, 4);
    const auto [mn, mx] = extreme_eigenvalues_unchecked(z);
    EXPECT_EQ(mn, 0.0);
    EXPECT_EQ(mx, 0.0);
    const ComplexMatrix i3 = 2.0 * ComplexMatrix::identity(3);
    for (double v : hermitian_eigenvalues(i3)) EXPECT_NEAR(v, 2.0, 1e-14);
    const auto e = hermitian_eigen(i3);
    EXPECT_TRUE(is_unitary(e.eigenvectors));
}

TEST(Svd, FactorsReconstruct) {
    GaussianSource g(14);
    for (std::size_t n : {1u, 2u, 4u, 9u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix x = g.ginibre(n);
            const SVDResult s = svd(x);
            EXPECT_TRUE(is_unitary(s.left));
            EXPECT_TRUE(is_unitary(s.right));
            EXPECT_TRUE(std::is_sorted(s.singular_values.rbegin(), s.singular_values.rend()));
            const ComplexMatrix rebuilt = s.left * ComplexMatrix::diagonal(s.singular_values) * s.right.adjoint();
            EXPECT_LT(max_diff(rebuilt, x), 1e-10 * (1.0 + s.singular_values.front()));
            // Frobenius norm equals the l2 norm of the singular values.
            double ss = 0.0;
            for (double v : s.singular_values) ss += v * v;
            EXPECT_NEAR(std::sqrt(ss), frobenius_norm(x), 1e-10 * frobenius_norm(x));
        }
    }
}

TEST(Svd, RankDeficientKeepsUnitaryFactors) {
    const auto x = ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
    const SVDResult s = svd(x);
    EXPECT_NEAR(s.singular_values[0], 1.0, 1e-14);
    EXPECT_NEAR(s.singular_values[1], 0.0, 1e-14);
    EXPECT_TRUE(is_unitary(s.left));
    EXPECT_TRUE(is_unitary(s.right));
}

TEST(Polar, UnitaryTimesModulus) {
    GaussianSource g(15);
    for (std::size_t n : {2u, 3u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix x = g.ginibre(n);
            const PolarDecomposition p = polar_decompose(x);
            EXPECT_TRUE(is_unitary(p.unitary_factor));
            EXPECT_TRUE(is_psd(p.modulus));
            EXPECT_LT(max_diff(p.unitary_factor * p.modulus, x), 1e-10 * (1.0 + frobenius_norm(x)));
            EXPECT_LT(max_diff(p.modulus * p.modulus, x.adjoint() * x), 1e-9 * (1.0 + frobenius_norm(x * x)));
            EXPECT_LT(max_diff(modulus(x), p.modulus), 1e-10 * (1.0 + frobenius_norm(x)));
        }
    }
    const auto nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const PolarDecomposition p = polar_decompose(nil);
    EXPECT_TRUE(is_unitary(p.unitary_factor));
    EXPECT_LT(max_diff(p.unitary_factor * p.modulus, nil), 1e-14);
}

TEST(PsdFunctions, SqrtAndPowers) {
    GaussianSource g(16);
    for (std::size_t n : {1u, 3u, 8u}) {
        const ComplexMatrix a = g.ginibre(n);
        const ComplexMatrix m = a.adjoint() * a;
        const ComplexMatrix r = psd_sqrt(m);
        EXPECT_TRUE(is_psd(r));
        EXPECT_LT(max_diff(r * r, m), 1e-10 * (1.0 + frobenius_norm(m)));
        EXPECT_LT(max_diff(psd_power(m, 2.0), m * m), 1e-9 * (1.0 + frobenius_norm(m * m)));
        EXPECT_LT(max_diff(psd_power(m, 1.0), m), 1e-10 * (1.0 + frobenius_norm(m)));
        const ComplexMatrix c = psd_power(m, 1.0 / 3.0);
        EXPECT_LT(max_diff(c * c * c, m), 1e-9 * (1.0 + frobenius_norm(m)));
    }
    EXPECT_THROW(psd_sqrt(-1.0 * ComplexMatrix::identity(2)), PreconditionError);
    EXPECT_THROW(psd_power(ComplexMatrix::identity(2), 0.0), PreconditionError);
}

TEST(Predicates, ContractionAndProjection) {
    const double half[] = {0.5, 0.0, 1.0};
    EXPECT_TRUE(is_positive_contraction(ComplexMatrix::diagonal(half), 1e-9));
    const double over[] = {0.5, 1.1};
    EXPECT_FALSE(is_positive_contraction(ComplexMatrix::diagonal(over), 1e-9));
    const double neg[] = {-0.1, 0.5};
    EXPECT_FALSE(is_positive_contraction(ComplexMatrix::diagonal(neg), 1e-9));
    const auto p = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
    EXPECT_TRUE(is_projection(p));
    EXPECT_FALSE(is_projection(ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 0.0}})));
}

TEST(Examples, EigenSvdSqrtModulusPolar) {
    const double d21[] = {2.0, 1.0};
    const EigenDecomposition e = hermitian_eigen(ComplexMatrix::diagonal(d21));
    EXPECT_EQ(e.eigenvalues, (std::vector<double>{2.0, 1.0}));
    EXPECT_LT(max_diff(e.eigenvectors, ComplexMatrix::identity(2)), 1e-15);
    const auto pauli = hermitian_eigen(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})).eigenvalues;
    EXPECT_NEAR(pauli[0], 1.0, 1e-14);
    EXPECT_NEAR(pauli[1], -1.0, 1e-14);
    for (double th : {0.0, 0.3, 2.0, 5.5}) {
        const Complex p = std::polar(0.5, th);
        const auto ev = hermitian_eigen(ComplexMatrix::from_rows({{0.0, p}, {std::conj(p), 0.0}})).eigenvalues;
        EXPECT_NEAR(ev[0], 0.5, 1e-14);
        EXPECT_NEAR(ev[1], -0.5, 1e-14);
    }

    const auto nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    EXPECT_EQ(svd(ComplexMatrix::identity(2)).singular_values, (std::vector<double>{1.0, 1.0}));
    const auto s_nil = svd(nil).singular_values;
    EXPECT_NEAR(s_nil[0], 1.0, 1e-15);
    EXPECT_NEAR(s_nil[1], 0.0, 1e-15);
    const double minus_two[] = {-2.0};
    EXPECT_NEAR(svd(ComplexMatrix::diagonal(minus_two)).singular_values[0], 2.0, 1e-15);

    const double d49[] = {4.0, 9.0}, d23[] = {2.0, 3.0};
    EXPECT_LT(max_diff(psd_sqrt(ComplexMatrix::diagonal(d49)), ComplexMatrix::diagonal(d23)), 1e-14);
    EXPECT_LT(max_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)), 1e-14);
    const auto proj = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
    EXPECT_LT(max_diff(psd_sqrt(proj), proj), 1e-8);

    const double d01[] = {0.0, 1.0};
    EXPECT_LT(max_diff(modulus(nil), ComplexMatrix::diagonal(d01)), 1e-14);
    const double minus_three[] = {-3.0}, three[] = {3.0};
    EXPECT_LT(max_diff(modulus(ComplexMatrix::diagonal(minus_three)), ComplexMatrix::diagonal(three)), 1e-14);

    const PolarDecomposition p_nil = polar_decompose(nil);
    EXPECT_LT(max_diff(p_nil.unitary_factor, ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})), 1e-14);
    EXPECT_LT(max_diff(p_nil.modulus, ComplexMatrix::diagonal(d01)), 1e-14);
    GaussianSource g(17);
    const ComplexMatrix a = g.ginibre(3);
    const ComplexMatrix m = a * a.adjoint();
    const PolarDecomposition p_psd = polar_decompose(m);
    EXPECT_LT(max_diff(p_psd.unitary_factor, ComplexMatrix::identity(3)), 1e-9);
    EXPECT_LT(max_diff(p_psd.modulus, m), 1e-9 * frobenius_norm(m));
    const ComplexMatrix w = polar_decompose(g.ginibre(3)).unitary_factor;
    const PolarDecomposition p_w = polar_decompose(w);
    EXPECT_LT(max_diff(p_w.unitary_factor, w), 1e-10);
    EXPECT_LT(max_diff(p_w.modulus, ComplexMatrix::identity(3)), 1e-10);

    EXPECT_TRUE(is_positive_contraction(ComplexMatrix::identity(3), 1e-9));
    EXPECT_FALSE(is_positive_contraction(2.0 * ComplexMatrix::identity(3), 1e-9));
    EXPECT_TRUE(is_positive_contraction(proj, 1e-9));
}
