#include "klab/theta.hpp"

#include <cmath>

#include "klab/shell_sum.hpp"

namespace klab {

namespace {

// The Gaussian peaks near n = -alpha(z); starting the shells there keeps the
// stall test from triggering on the tail before the bulk is reached.
long theta_center(cplx z, const Modulus& tau) { return std::lround(-alpha(z, tau)); }

}  // namespace

SeriesValue theta(cplx z, const Modulus& tau, const SummationBudget& budget) {
    const cplx t = tau.tau();
    return sum_by_shells_1d(
        [&](long n) {
            const double m = static_cast<double>(n);
            return e_of(t * (m * m / 2.0) + m * z);
        },
        budget, theta_center(z, tau), 1);
}

SeriesValue theta_scaled(cplx z, int scale, const Modulus& tau, const SummationBudget& budget) {
    return theta(z, tau.scaled(scale), budget);
}

SeriesValue theta_prime(cplx z, const Modulus& tau, const SummationBudget& budget) {
    const cplx t = tau.tau();
    return sum_by_shells_1d(
        [&](long n) {
            const double m = static_cast<double>(n);
            return kTwoPiI * m * e_of(t * (m * m / 2.0) + m * z);
        },
        budget, theta_center(z, tau), 1);
}

int eta_truncation(const Modulus& tau, double target_tol) {
    const double aq = std::abs(tau.q());
    int n = 0;
    double pw = aq;
    while (pw * 3.0 / (1.0 - aq) >= target_tol) {
        pw *= aq;
        ++n;
    }
    return n;
}

cplx eta_cubed_constant(const Modulus& tau, const SummationBudget& budget) {
    budget.validate();
    const int n_max = eta_truncation(tau, budget.target_tol);
    cplx prod{1.0, 0.0};
    cplx qn{1.0, 0.0};
    for (int n = 1; n <= n_max; ++n) {
        qn *= tau.q();
        const cplx f = 1.0 - qn;
        prod *= f * f * f;
    }
    return prod;
}

}  // namespace klab
