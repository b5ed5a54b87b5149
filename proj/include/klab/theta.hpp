#pragma once

#include "klab/core.hpp"

namespace klab {

// theta(z, tau) = sum_n e(tau n^2 / 2 + n z)
SeriesValue theta(cplx z, const Modulus& tau, const SummationBudget& budget = {});

// theta(z, scale * tau)
SeriesValue theta_scaled(cplx z, int scale, const Modulus& tau, const SummationBudget& budget = {});

// Term-wise z-derivative of theta.
SeriesValue theta_prime(cplx z, const Modulus& tau, const SummationBudget& budget = {});

// prod_{n <= N} (1 - q^n)^3 with N the smallest integer such that
// |q|^(N+1) * 3 / (1 - |q|) < target_tol.
cplx eta_cubed_constant(const Modulus& tau, const SummationBudget& budget = {});
int eta_truncation(const Modulus& tau, double target_tol);

}  // namespace klab
