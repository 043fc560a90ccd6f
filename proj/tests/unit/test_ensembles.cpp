#include <gtest/gtest.h>

#include <cmath>

#include "ineqlab/ensembles.hpp"
#include "ineqlab/operator_quantities.hpp"
#include "ineqlab/random.hpp"
#include "support.hpp"

using namespace ineqlab;
using testsupport::max_diff;

TEST(Seeds, DerivedSeedsDiffer) {
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 1, 0));
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(2, 0, 0));
    static_assert(derive_seed(5, 6, 7) == derive_seed(5, 6, 7));
}

TEST(Families, NamesRoundTrip) {
    for (Family f : {Family::ginibre, Family::hermitian, Family::psd, Family::positive_contraction, Family::projection,
                     Family::unitary, Family::unit_vector}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
    }
    EXPECT_FALSE(parse_family("gaussian").has_value());
    EXPECT_TRUE(is_vector_family(Family::unit_vector));
    EXPECT_FALSE(is_vector_family(Family::psd));
}

TEST(Families, ValidateBounds) {
    EXPECT_THROW(validate(EnsembleConfig{Family::ginibre, 0, 1, 1}), PreconditionError);
    EXPECT_THROW(validate(EnsembleConfig{Family::ginibre, 65, 1, 1}), PreconditionError);
    EXPECT_THROW(validate(EnsembleConfig{Family::ginibre, 4, 1, 0}), PreconditionError);
    EXPECT_NO_THROW(validate(EnsembleConfig{Family::ginibre, 64, 1, 1}));
}

TEST(Families, ConstructedProperties) {
    for (std::size_t n : {1u, 2u, 3u, 8u, 16u}) {
        for (std::int64_t trial = 0; trial < 25; ++trial) {
            auto m = [&](Family f) { return std::get<ComplexMatrix>(sample({f, n, 99, 25}, trial)); };
            EXPECT_TRUE(is_hermitian(m(Family::hermitian)));
            EXPECT_TRUE(is_psd(m(Family::psd)));
            EXPECT_TRUE(is_positive_contraction(m(Family::positive_contraction), 1e-10));
            EXPECT_TRUE(is_projection(m(Family::projection)));
            EXPECT_TRUE(is_unitary(m(Family::unitary)));
            const ComplexMatrix g = m(Family::ginibre);
            EXPECT_EQ(g.rows(), n);
            const ComplexVector v = std::get<ComplexVector>(sample({Family::unit_vector, n, 99, 25}, trial));
            EXPECT_NEAR(norm(v), 1.0, 1e-14);
        }
    }
}

TEST(Families, DeterministicAndTrialIndependent) {
    const EnsembleConfig cfg{Family::positive_contraction, 5, 1234, 10};
    EXPECT_EQ(std::get<ComplexMatrix>(sample(cfg, 3)), std::get<ComplexMatrix>(sample(cfg, 3)));
    EXPECT_NE(std::get<ComplexMatrix>(sample(cfg, 3)), std::get<ComplexMatrix>(sample(cfg, 4)));
    EXPECT_EQ(std::get<ComplexMatrix>(sample(cfg, 3)), draw_matrix(cfg.family, 5, 1234, 3, 0));
    EXPECT_NE(draw_matrix(cfg.family, 5, 1234, 3, 0), draw_matrix(cfg.family, 5, 1234, 3, 1));
}

// Complex Gaussian entries: E|z|^2 = 1, E z = 0, E z^2 = 0.
TEST(Gaussian, FirstAndSecondMoments) {
    GaussianSource g(2024);
    const int count = 200000;
    Complex mean = 0.0, pseudo = 0.0;
    double power = 0.0;
    for (int k = 0; k < count; ++k) {
        const Complex z = g.complex_normal();
        mean += z;
        pseudo += z * z;
        power += std::norm(z);
    }
    EXPECT_NEAR(std::abs(mean) / count, 0.0, 0.01);
    EXPECT_NEAR(std::abs(pseudo) / count, 0.0, 0.01);
    EXPECT_NEAR(power / count, 1.0, 0.01);
    for (int k = 0; k < 1000; ++k) {
        const double u = g.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}
