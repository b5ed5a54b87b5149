#include <gtest/gtest.h>

#include <random>

#include "klab/kronecker.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {
const Modulus kI(cplx{0.0, 1.0});
const Modulus kT2(cplx{0.3, 0.9});

cplx pt(const Modulus& tau, double a, double b) { return a * tau.tau() + b; }
}  // namespace

TEST(FSeries, FrozenValues) {
    EXPECT_LT(std::abs(f_series({cplx{0.3, 0.4}, cplx{0.1, 0.2}}, kI).value - oracle::kF_i), 1e-11);
    EXPECT_LT(std::abs(f_series({cplx{0.3, 0.4}, cplx{0.1, 0.2}}, kT2).value - oracle::kF_tau2), 1e-11);
}

TEST(FSeries, MatchesRawDoubleSum) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> a(-1.9, 1.9), b(0.0, 1.0);
    int checked = 0;
    while (checked < 12) {
        const double a1 = a(rng), a2 = a(rng);
        if (dist_to_integers(a1) < 0.15 || dist_to_integers(a2) < 0.15) continue;
        const cplx z1 = pt(kT2, a1, b(rng)), z2 = pt(kT2, a2, b(rng));
        const cplx ref = oracle::f(z1, z2, kT2.tau());
        EXPECT_LT(std::abs(f_series({z1, z2}, kT2).value - ref), 1e-10 * std::max(1.0, std::abs(ref)));
        ++checked;
    }
}

TEST(FSeries, SymmetriesAndPeriodicity) {
    const cplx z1 = pt(kI, 0.37, 0.12), z2 = pt(kI, 0.61, 0.83);
    const cplx f = f_series({z1, z2}, kI).value;
    EXPECT_LT(std::abs(f_series({z2, z1}, kI).value - f), 1e-10);
    EXPECT_LT(std::abs(f_series({z1 + 1.0, z2}, kI).value - f), 1e-12);
    EXPECT_LT(std::abs(f_series({-z1, -z2}, kI).value + f), 1e-10);
}

TEST(FSeries, PoleGuard) {
    try {
        f_series({cplx{0.2, 1e-12}, cplx{0.3, 0.5}}, kI);
        FAIL();
    } catch (const EvalError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PoleProximity);
    }
}

TEST(FClosed, AgreesWithSeries) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> a(0.1, 0.9), b(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const cplx z1 = pt(kI, a(rng), b(rng)), z2 = pt(kI, a(rng), b(rng));
        EXPECT_LT(std::abs(f_closed({z1, z2}, kI) - f_series({z1, z2}, kI).value), 1e-9);
    }
}

TEST(FClosed, ZeroOnNumeratorLocus) {
    const cplx z1 = pt(kI, 0.3, 0.2);
    const cplx z2 = 2.0 * kI.xi() - z1 + 1.0;
    EXPECT_LT(std::abs(f_closed({z1, z2}, kI)), 1e-10);
}

TEST(FClosed, SimplePoleAtOrigin) {
    const cplx z2 = pt(kI, 0.4, 0.3);
    std::vector<double> logs;
    for (double t : {1e-2, 1e-3, 1e-4}) logs.push_back(std::log(std::abs(f_closed({t * cplx{1.0, 1.0}, z2}, kI))));
    const double slope1 = (logs[1] - logs[0]) / std::log(0.1);
    const double slope2 = (logs[2] - logs[1]) / std::log(0.1);
    EXPECT_NEAR(slope1, -1.0, 0.05);
    EXPECT_NEAR(slope2, -1.0, 0.005);
    EXPECT_LT(std::abs(slope2 + 1.0), std::abs(slope1 + 1.0));
}
