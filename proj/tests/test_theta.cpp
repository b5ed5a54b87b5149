#include <gtest/gtest.h>

#include "klab/theta.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {
const Modulus kI(cplx{0.0, 1.0});
const Modulus kT2(cplx{0.3, 0.9});
}  // namespace

TEST(Theta, FrozenValues) {
    EXPECT_LT(std::abs(theta(0.0, kI).value - oracle::kTheta0_i), 1e-13);
    EXPECT_LT(std::abs(theta_scaled(0.0, 2, kI).value - oracle::kTheta0_2i), 1e-13);
    EXPECT_LT(std::abs(theta(cplx{0.3, 0.2}, kT2).value - oracle::kTheta_tau2), 1e-13);
}

TEST(Theta, MatchesDirectPartialSums) {
    for (const auto& tau : {kI, kT2, Modulus(cplx{-0.5, 1.2})}) {
        for (double a = -1.3; a < 1.5; a += 0.41) {
            for (double b = 0.0; b < 1.0; b += 0.29) {
                const cplx z = a * tau.tau() + b;
                const cplx ref = oracle::theta(z, tau.tau());
                EXPECT_LT(std::abs(theta(z, tau).value - ref), 1e-12 * std::max(1.0, std::abs(ref)));
            }
        }
    }
}

TEST(Theta, VanishesAtXi) { EXPECT_LT(std::abs(theta(kI.xi(), kI).value), 1e-10); }

TEST(Theta, EvenAndScaled) {
    const cplx z{0.31, 0.27};
    EXPECT_LT(std::abs(theta(-z, kT2).value - theta(z, kT2).value), 1e-14);
    EXPECT_EQ(theta_scaled(z, 1, kT2).value, theta(z, kT2).value);
    EXPECT_GT(std::abs(theta_scaled(kI.xi(), 2, kI).value), 0.5);
    EXPECT_LT(std::abs(theta_scaled(cplx{0.5, 1.0}, 2, kI).value), 1e-10);
}

TEST(Theta, QuasiPeriodicityGrid) {
    for (const auto& tau : {kI, kT2}) {
        const cplx t = tau.tau();
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const cplx z = (i + 0.5) / 10.0 * t + (j + 0.5) / 10.0;
                const cplx th = theta(z, tau).value;
                EXPECT_LT(std::abs(theta(z + 1.0, tau).value - th), 1e-10);
                const cplx rhs = e_of(-t / 2.0 - z) * th;
                EXPECT_LT(std::abs(theta(z + t, tau).value - rhs), 1e-10 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST(ThetaPrime, OddAndFiniteDifference) {
    EXPECT_LT(std::abs(theta_prime(0.0, kI).value), 1e-12);
    const double h = 1e-5;
    for (const cplx z : {cplx{0.2, 0.1}, cplx{-0.4, 0.6}, cplx{0.7, -0.3}}) {
        const cplx fd = (theta(z + h, kT2).value - theta(z - h, kT2).value) / (2.0 * h);
        EXPECT_LT(std::abs(fd - theta_prime(z, kT2).value), 1e-7 * std::max(1.0, std::abs(fd)));
    }
}

TEST(EtaConstant, FrozenAndCrossChecked) {
    EXPECT_LT(std::abs(eta_cubed_constant(kI) - oracle::kEta3_i), 1e-13);
    EXPECT_LT(std::abs(eta_cubed_constant(kT2) - oracle::kEta3_tau2), 1e-13);
    EXPECT_LT(std::abs(theta_prime(kI.xi(), kI).value / kTwoPiI - eta_cubed_constant(kI)), 1e-12);
    EXPECT_LT(std::abs(theta_prime(kT2.xi(), kT2).value / kTwoPiI - eta_cubed_constant(kT2)), 1e-10);
}

TEST(EtaConstant, TruncationRule) {
    const double qa = std::exp(-2.0 * kPi);
    const int N = eta_truncation(kI, 1e-12);
    EXPECT_LT(std::pow(qa, N + 1) * 3.0 / (1.0 - qa), 1e-12);
    EXPECT_GE(std::pow(qa, N) * 3.0 / (1.0 - qa), 1e-12);
    const Modulus big(cplx{0.0, 20.0});
    EXPECT_LT(std::abs(eta_cubed_constant(big) - 1.0), 1e-15);
}
