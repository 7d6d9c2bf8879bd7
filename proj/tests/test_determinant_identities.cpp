#include <gtest/gtest.h>

#include <random>

#include "plancherel/determinant_identities.hpp"

using namespace plancherel;

namespace {
Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd r(v.size());
    int i = 0;
    for (double x : v) r[i++] = x;
    return r;
}
}  // namespace

TEST(Identities, CauchyTwoByTwo) {
    IdentityInstance in{IdentityId::Cauchy, vec({1, 2}), vec({3, 4}), {}, {}};
    const Eigen::MatrixXd m = build_matrix(in);
    EXPECT_DOUBLE_EQ(m(0, 0), 0.25);
    EXPECT_DOUBLE_EQ(m(0, 1), 0.2);
    EXPECT_DOUBLE_EQ(m(1, 0), 0.2);
    EXPECT_DOUBLE_EQ(m(1, 1), 1.0 / 6.0);
    EXPECT_NEAR(closed_form(in), 1.0 / 600.0, 1e-17);
    EXPECT_NEAR(m.determinant(), 1.0 / 600.0, 1e-16);
}

TEST(Identities, L11RankOneIsOne) {
    IdentityInstance in{IdentityId::L11, vec({0.7}), {}, {}, Eigen::VectorXd(0)};
    EXPECT_DOUBLE_EQ(build_matrix(in)(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(closed_form(in), 1.0);
}

TEST(Identities, L13RankOneEntry) {
    const double x = 1.3, a = 0.4, b = -0.9;
    IdentityInstance in{IdentityId::L13, vec({x}), {}, vec({a}), vec({b})};
    const double entry = (x + a) / (x + b) - (x - a) / (x - b);
    EXPECT_NEAR(build_matrix(in)(0, 0), entry, 1e-15);
    EXPECT_NEAR(closed_form(in), 2 * x * (a - b) / (x * x - b * b), 1e-15);
    EXPECT_LE(identity_residual(in), 1e-14);
}

TEST(Identities, L14FirstRowIsTwo) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; ++n) {
        const auto in = random_instance(IdentityId::L14, n, rng);
        const Eigen::MatrixXd m = build_matrix(in);
        for (int k = 0; k < n; ++k) EXPECT_DOUBLE_EQ(m(0, k), 2.0);
    }
}

TEST(Identities, RandomInstancesSatisfyEveryIdentity) {
    std::mt19937_64 rng(6);
    for (IdentityId id : kAllIdentities)
        for (int n = 1; n <= 6; ++n)
            for (int i = 0; i < 60; ++i) {
                const auto in = random_instance(id, n, rng);
                EXPECT_LE(identity_residual(in), 1e-9) << identity_name(id) << " n=" << n;
            }
}

TEST(Identities, PerturbedMatrixIsDetected) {
    std::mt19937_64 rng(7);
    for (IdentityId id : kAllIdentities) {
        const auto in = random_instance(id, 4, rng);
        IdentityInstance moved = in;
        moved.x[0] += 1e-2;
        const Eigen::MatrixXd m = build_matrix(moved);
        const SignedLogValue det = log_determinant(m), cf = closed_form_log(in);
        const double r = det.sign == cf.sign ? std::fabs(std::expm1(det.log_magnitude - cf.log_magnitude)) : 2.0;
        EXPECT_GE(r, 1e-5) << identity_name(id);
    }
}

// A fixed entry can have a tiny cofactor, so perturb the most sensitive one.
TEST(Identities, PerturbedEntryIsDetected) {
    std::mt19937_64 rng(8);
    for (IdentityId id : kAllIdentities)
        for (int n = 2; n <= 6; ++n)
            for (int k = 0; k < 20; ++k) {
                const auto in = random_instance(id, n, rng);
                Eigen::MatrixXd m = build_matrix(in);
                const Eigen::MatrixXd inv = m.inverse();
                Eigen::Index i, j;
                inv.cwiseAbs().maxCoeff(&j, &i);
                m(i, j) += 1e-3;
                const SignedLogValue det = log_determinant(m), cf = closed_form_log(in);
                const double r = det.sign == cf.sign ? std::fabs(std::expm1(det.log_magnitude - cf.log_magnitude)) : 2.0;
                EXPECT_GE(r, 1e-5) << identity_name(id) << " n=" << n;
            }
}

TEST(Identities, CauchySwapNegatesBothSides) {
    IdentityInstance in{IdentityId::Cauchy, vec({0.3, 1.7, -0.8}), vec({2.1, 0.5, 1.2}), {}, {}};
    IdentityInstance sw = in;
    std::swap(sw.x[0], sw.x[1]);
    EXPECT_NEAR(closed_form(sw), -closed_form(in), 1e-15);
    EXPECT_NEAR(build_matrix(sw).determinant(), -build_matrix(in).determinant(), 1e-13);
}

TEST(Identities, L13VanishesAtZeroX) {
    IdentityInstance in{IdentityId::L13, vec({0.0, 1.1, -2.3}), {}, vec({0.5, -0.7, 1.9}), vec({-1.4, 0.8, 2.6})};
    EXPECT_EQ(closed_form(in), 0.0);
    EXPECT_EQ(identity_residual(in), 0.0);
}

TEST(Identities, DoublePrecisionLuIsAccurateOnWellSeparatedInstances) {
    IdentityInstance in{IdentityId::L12, vec({0.1, 1.3, 2.6}), {}, vec({-0.5, 0.9}), vec({1.7, 2.2})};
    EXPECT_LE(identity_residual(in, Precision::Double), 1e-12);
    EXPECT_LE(identity_residual(in, Precision::Extended), 1e-13);
}

TEST(Identities, InvalidInstancesAreRejected) {
    EXPECT_THROW(closed_form(IdentityInstance{IdentityId::Cauchy, vec({1, 1}), vec({3, 4}), {}, {}}),
                 NearSingularDenominator);
    EXPECT_THROW(build_matrix(IdentityInstance{IdentityId::Cauchy, vec({1, 2}), vec({-1, 4}), {}, {}}),
                 NearSingularDenominator);
    EXPECT_THROW(build_matrix(IdentityInstance{IdentityId::L12, vec({1, 2}), {}, vec({1}), vec({1, 2})}),
                 DimensionMismatch);
    EXPECT_THROW(build_matrix(IdentityInstance{IdentityId::L13, vec({1, 2}), {}, vec({1, 3}), vec({-2, 5})}),
                 NearSingularDenominator);
    EXPECT_THROW(log_determinant(Eigen::MatrixXd(2, 3)), DimensionMismatch);
}

TEST(Identities, GeneratorRespectsTheGap) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const auto in = random_instance(IdentityId::Cauchy, 5, rng, 0.05);
        for (int k = 0; k < 5; ++k)
            for (int l = 0; l < 5; ++l) {
                EXPECT_GE(std::fabs(in.x[k] + in.y[l]), 0.05);
                if (k != l) EXPECT_GE(std::fabs(in.x[k] - in.x[l]), 0.05);
            }
    }
}

TEST(Identities, GeneratorIsDeterministic) {
    std::mt19937_64 r1(9), r2(9);
    for (IdentityId id : kAllIdentities) {
        const auto a = random_instance(id, 4, r1), b = random_instance(id, 4, r2);
        EXPECT_EQ(a.x, b.x);
        EXPECT_EQ(a.b, b.b);
    }
}
