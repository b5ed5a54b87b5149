#include <gtest/gtest.h>

#include <random>

#include "klab/appell.hpp"
#include "klab/hfun.hpp"
#include "klab/theta.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {
const Modulus kI(cplx{0.0, 1.0});
const Modulus kT2(cplx{0.3, 0.9});

cplx pt(const Modulus& tau, double a, double b) { return a * tau.tau() + b; }
}  // namespace

TEST(HSeries, FrozenValues) {
    EXPECT_LT(std::abs(h_series({cplx{0.2, 0.3}, cplx{0.1, 0.55}}, kI).value - oracle::kH_i), 1e-11);
    EXPECT_LT(std::abs(h0_series({cplx{0.2, 0.0}, cplx{0.1, -0.3}}, kI).value - oracle::kH0_i), 1e-11);
}

TEST(HSeries, MatchesRawDoubleSum) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> a(-1.8, 1.8), b(0.0, 1.0);
    int checked = 0;
    while (checked < 8) {
        const double a1 = a(rng), a2 = a(rng);
        if (dist_to_integers(a1) < 0.15 || dist_to_integers(a2) < 0.15) continue;
        const cplx z1 = pt(kT2, a1, b(rng)), z2 = pt(kT2, a2, b(rng));
        const cplx ref = oracle::h(z1, z2, kT2.tau());
        EXPECT_LT(std::abs(h_series({z1, z2}, kT2).value - ref), 1e-10 * std::max(1.0, std::abs(ref)));
        const cplx ref0 = oracle::h(z1, z2, kT2.tau(), true);
        EXPECT_LT(std::abs(h0_series({z1, z2}, kT2).value - ref0), 1e-10 * std::max(1.0, std::abs(ref0)));
        ++checked;
    }
}

TEST(HSeries, QuasiPeriodicity) {
    const cplx t = kI.tau();
    const cplx z1 = pt(kI, 0.3, 0.25), z2 = pt(kI, 0.6, 0.8);
    const cplx h = h_series({z1, z2}, kI).value;
    const cplx r1 = e_of(-t - 2.0 * z1 - 2.0 * z2) * h;
    const cplx r2 = e_of(-t / 2.0 - 2.0 * z1 - z2) * h;
    EXPECT_LT(std::abs(h_series({z1 + t, z2}, kI).value - r1), 1e-10 * std::max(1.0, std::abs(r1)));
    EXPECT_LT(std::abs(h_series({z1, z2 + t}, kI).value - r2), 1e-10 * std::max(1.0, std::abs(r2)));
    EXPECT_LT(std::abs(h_series({z1 + 1.0, z2}, kI).value - h), 1e-12);
}

TEST(H0, RestrictionAndEntire) {
    const cplx z1 = pt(kI, 0.3, 0.25), z2 = pt(kI, 0.6, 0.8);
    EXPECT_LT(std::abs(h0_series({z1, z2}, kI).value - h_series({z1, z2}, kI).value), 1e-9);
    EXPECT_NO_THROW(h0_series({cplx{0.3, 0.0}, cplx{0.7, 0.0}}, kI));
    EXPECT_THROW(h_series({cplx{0.3, 0.0}, cplx{0.7, 0.4}}, kI), EvalError);
}

TEST(H0, DiagonalRecursion) {
    const cplx t = kT2.tau();
    const cplx th = theta(0.0, kT2.scaled(2)).value;
    for (double a : {-0.4, 0.0, 0.3}) {
        const cplx x = pt(kT2, a, 0.37);
        const cplx lhs = h0_diagonal(x + t, kT2).value;
        const cplx rhs = e_of(t / 2.0 + x) * (h0_diagonal(x, kT2).value - theta(x, kT2).value) + th;
        EXPECT_LT(std::abs(lhs - rhs), 1e-9);
        EXPECT_LT(std::abs(h0_diagonal(x, kT2).value - h0_series({x, -x}, kT2).value), 1e-13);
    }
}

TEST(Psi, ClosedFormAndDifferenceEquation) {
    for (const auto& tau : {kI, kT2}) {
        const cplx t = tau.tau(), xi = tau.xi();
        for (double a : {-0.35, 0.05, 0.45}) {
            const cplx x = pt(tau, a, 0.61);
            const cplx psi = psi_closed(x, tau);
            EXPECT_LT(std::abs(psi - theta(x - xi, tau).value * h0_diagonal(x, tau).value), 1e-8);
            const cplx rhs = e_of(xi) * psi + e_of(t / 2.0) * theta(x, tau).value * theta(x - xi, tau).value +
                             theta(0.0, tau.scaled(2)).value * theta(x + xi, tau).value;
            EXPECT_LT(std::abs(psi_closed(x + t, tau) - rhs), 1e-8);
            EXPECT_LT(std::abs(psi_closed(x + 1.0, tau) - psi), 1e-10);
        }
    }
}
