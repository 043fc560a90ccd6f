#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ineqlab/random.hpp"
#include "ineqlab/vector_inequalities.hpp"

using namespace ineqlab;

namespace {

const double kR = 1.0 / std::sqrt(2.0);
const Complex I{0.0, 1.0};

std::vector<double> values(const ChainResult& r) {
    std::vector<double> v;
    for (const ChainTerm& t : r.terms) v.push_back(t.value);
    return v;
}

void expect_terms(const ChainResult& r, std::initializer_list<double> want, double tol = 1e-14) {
    const auto got = values(r);
    ASSERT_EQ(got.size(), want.size()) << r.check_name;
    std::size_t k = 0;
    for (double w : want) EXPECT_NEAR(got[k++], w, tol) << r.check_name << " term " << k - 1;
}

}  // namespace

TEST(Basics, InnerAndNormExamples) {
    EXPECT_EQ(inner(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0}), Complex(0.0));
    EXPECT_NEAR(std::abs(inner(ComplexVector{1.0, I}, ComplexVector{1.0, I}) - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner(ComplexVector{1.0, I}, ComplexVector{I, 1.0})), 0.0, 1e-15);
    EXPECT_EQ(norm(ComplexVector{3.0, 4.0}), 5.0);
    EXPECT_EQ(norm(ComplexVector{0.0, 0.0}), 0.0);
    EXPECT_NEAR(norm(ComplexVector{1.0, I}), std::sqrt(2.0), 1e-15);
}

TEST(Angles, Examples) {
    const AngleResult a = angles(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0});
    EXPECT_NEAR(a.psi, M_PI / 2, 1e-15);
    EXPECT_NEAR(a.phi, M_PI / 2, 1e-15);
    EXPECT_NEAR(angles(ComplexVector{1.0, 0.0}, ComplexVector{kR, kR}).psi, M_PI / 4, 1e-15);
    const AngleResult b = angles(ComplexVector{1.0, 0.0}, ComplexVector{-1.0, 0.0});
    EXPECT_NEAR(b.psi, 0.0, 1e-15);
    EXPECT_NEAR(b.phi, M_PI, 1e-15);
    EXPECT_THROW(angles(ComplexVector{0.0, 0.0}, ComplexVector{1.0, 0.0}), PreconditionError);
    EXPECT_THROW(angles(ComplexVector{1.0}, ComplexVector{1.0, 0.0}), DimensionError);
}

TEST(Angles, RangesAndScaleInvariance) {
    GaussianSource g(31);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexVector x = g.gaussian_vector(4), y = g.gaussian_vector(4);
        const AngleResult a = angles(x, y);
        EXPECT_GE(a.psi, 0.0);
        EXPECT_LE(a.psi, M_PI / 2);
        EXPECT_LE(a.phi, M_PI);
        EXPECT_LE(a.psi, a.phi + 1e-15);
        const Complex c = g.complex_normal();
        EXPECT_NEAR(angles(c * x, y).cos_psi, a.cos_psi, 1e-12);
        EXPECT_NEAR(angles(3.7 * x, y).cos_phi, a.cos_phi, 1e-12);
    }
}

TEST(PsiInfimum, Examples) {
    const ChainResult a = psi_infimum_property(ComplexVector{1.0, 0.0}, ComplexVector{-1.0, 0.0}, 360);
    EXPECT_NEAR(a.terms[0].value, 0.0, 1e-7);
    EXPECT_NEAR(a.terms[1].value, 0.0, 1e-7);
    EXPECT_TRUE(a.passed);
    const ChainResult b = psi_infimum_property(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0}, 360);
    EXPECT_NEAR(b.terms[0].value, M_PI / 2, 1e-15);
    EXPECT_NEAR(b.terms[1].value, M_PI / 2, 1e-15);
}

// Oracle: continuous minimum of phi over the phase is attained at the phase
// that makes <e^{ia} x, y> real positive, so a dense independent scan must
// never beat psi and must come within the grid step.
TEST(PsiInfimum, DenseScanOracle) {
    GaussianSource g(32);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexVector x = g.gaussian_vector(3), y = g.gaussian_vector(3);
        const double psi = angles(x, y).psi;
        double best = M_PI;
        const int grid = 7200;
        for (int k = 0; k < grid; ++k) {
            best = std::min(best, angles(std::polar(1.0, 2.0 * M_PI * k / grid) * x, y).phi);
        }
        EXPECT_GE(best, psi - 1e-9);
        EXPECT_LE(best, psi + M_PI / grid + 1e-9);
        const ChainResult r = psi_infimum_property(x, y, 3600);
        EXPECT_TRUE(r.passed);
        EXPECT_LE(std::abs(r.terms[1].value - psi), M_PI / 3600 + 1e-9);
    }
}

TEST(Triangles, KreinExamples) {
    const ComplexVector e1{1.0, 0.0}, e2{0.0, 1.0}, d{kR, kR};
    const ChainResult r = krein_triangle(e1, d, e2);
    expect_terms(r, {M_PI / 2, M_PI / 2});
    EXPECT_TRUE(r.passed);
    expect_terms(krein_triangle(e1, e1, e1), {0.0, 0.0}, 1e-7);
}

TEST(Triangles, LinRefinedExamples) {
    const ComplexVector e1{1.0, 0.0}, e2{0.0, 1.0}, d{kR, kR};
    // x = e1, y = d, z = e2: psi_xy = pi/4, middle acos(1/sqrt2), psi_xz + psi_zy = 3pi/4.
    expect_terms(lin_triangle_refined(e1, d, e2), {M_PI / 4, M_PI / 4, 3 * M_PI / 4}, 1e-12);
    expect_terms(lin_triangle_refined(d, d, d), {0.0, 0.0, 0.0}, 1e-7);
}

TEST(Buzano, Examples) {
    const ComplexVector e1{1.0, 0.0}, e2{0.0, 1.0}, d{kR, kR};
    const ChainResult r = buzano_chain(e1, e2, d);
    expect_terms(r, {0.5, 0.5, 1.0});
    EXPECT_TRUE(r.passed);
    EXPECT_LE(r.min_slack(), 1e-15);
    expect_terms(buzano_chain(d, d, d), {1.0, 1.0, 1.0});
}

TEST(Lemma21, Examples) {
    const ComplexVector e1{1.0, 0.0}, e2{0.0, 1.0}, d{kR, kR};
    expect_terms(lemma21_chain(e1, e2, d), {0.5, 0.5, 0.5, 0.5});
    GaussianSource g(33);
    const ComplexVector x = g.gaussian_vector(3), y = g.gaussian_vector(3);
    expect_terms(lemma21_chain(x, y, ComplexVector(3)), {0.0, 0.0, 0.0, 0.0});
}

TEST(CsRefinement, Examples) {
    GaussianSource g(34);
    const ComplexVector x = g.gaussian_vector(3), y = g.gaussian_vector(3);
    const ChainResult r = cs_refinement_chain(x, y, (1.0 / norm(x)) * x);
    EXPECT_NEAR(r.terms[0].value, r.terms[1].value, 1e-12);
    EXPECT_TRUE(r.passed);
    expect_terms(cs_refinement_chain(x, y, ComplexVector(3)), {0.0, 0.0, 0.0});
    // x, y orthogonal to z: first term vanishes, middle is ||x|| ||y|| ||z||^2.
    const ComplexVector a{1.0, 2.0, 0.0}, b{Complex(0.0, 1.0), 1.0, 0.0}, z{0.0, 0.0, 2.0};
    const ChainResult s = cs_refinement_chain(a, b, z);
    EXPECT_NEAR(s.terms[0].value, std::abs(inner(a, b)) * 4.0, 1e-14);
    EXPECT_NEAR(s.terms[1].value, norm(a) * norm(b) * 4.0, 1e-13);
    EXPECT_THROW(cs_refinement_unit(x, y, ComplexVector(3)), PreconditionError);
}

TEST(ProjectionBuzano, Examples) {
    const ComplexVector e1{1.0, 0.0}, e2{0.0, 1.0};
    const auto p = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
    expect_terms(projection_buzano(p, e1, e2), {0.5, 0.5});
    const ComplexVector u{kR, Complex(0.0, kR)};
    expect_terms(projection_buzano(ComplexMatrix::identity(2), u, u), {1.0, 1.0});
    GaussianSource g(35);
    const ComplexVector x = g.gaussian_vector(2), y = g.gaussian_vector(2);
    expect_terms(projection_buzano(ComplexMatrix(2, 2), x, y),
                 {0.0, 0.5 * (std::abs(inner(x, y)) + norm(x) * norm(y))}, 1e-13);
    EXPECT_THROW(projection_buzano(ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 0.0}}), e1, e2), PreconditionError);
}

// Chains on random triples, including the cross-chain identities.
TEST(VectorChains, RandomTriplesHold) {
    GaussianSource g(36);
    for (std::size_t n : {1u, 2u, 3u, 5u, 16u}) {
        for (int trial = 0; trial < 300; ++trial) {
            const ComplexVector x = g.gaussian_vector(n), y = g.gaussian_vector(n), z = g.gaussian_vector(n);
            const ChainResult b = buzano_chain(x, y, z);
            const ChainResult l = lemma21_chain(x, y, z);
            EXPECT_TRUE(b.passed);
            EXPECT_TRUE(l.passed);
            EXPECT_TRUE(cs_refinement_chain(x, y, z).passed);
            EXPECT_TRUE(krein_triangle(x, y, z).passed);
            EXPECT_TRUE(lin_triangle_refined(x, y, z).passed);
            EXPECT_LE(b.terms[0].value, b.terms[2].value * (1 + 1e-12));
            EXPECT_NEAR(l.terms[3].value, b.terms[1].value, 1e-12 * (1.0 + b.terms[1].value));
        }
    }
}

TEST(ScalarLemma, RandomQuadruples) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 100000; ++trial) {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a < b) std::swap(a, b);
        if (c < d) std::swap(c, d);
        const double lhs = (a * a - b * b) * (c * c - d * d);
        const double rhs = (a * c - b * d) * (a * c - b * d);
        EXPECT_LE(lhs, rhs + 1e-12 * (1.0 + a * a * c * c));
    }
}
