#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "klab/core.hpp"
#include "klab/lattice.hpp"
#include "klab/shell_sum.hpp"

namespace klab {

struct Coefficient {
    long label = 0;  // point_label of the output intersection point
    long a = 0;      // output point is e_{a,b}(y_first, y_last)
    long b = 0;
    cplx series{0.0, 0.0};
};

struct CompositionResult {
    bool zero = false;
    cplx prefactor{1.0, 0.0};
    int sign = 1;
    std::vector<Coefficient> coefficients;  // sorted by label

    cplx value(std::size_t k) const { return static_cast<double>(sign) * prefactor * coefficients[k].series; }
    std::map<long, cplx> values() const;
};

using ConeSigns = std::array<int, 4>;

// e(tau a1 a2 + a1 b2 + a2 b1) f(a1 tau + b1, a2 tau + b2)
cplx m3_square(double a1, double a2, double b1, double b2, const Modulus& tau, const SummationBudget& budget = {});

// e((a1 + a2/2) a2 tau + a2 b1 + (a1 + a2) b2) g(a1 tau + b1, a2 tau + b2)
cplx m3_trapezoid(double a1, double a2, double b1, double b2, const Modulus& tau,
                  const SummationBudget& budget = {});

// sum over n in I_{123} of e(c tau (n+n0)^2 + 2c (n+n0)(z23 - z12)), c = (l3-l2)(l2-l1) / 2(l3-l1)
SeriesValue theta_triple(const std::array<Rational, 3>& slopes, long n0, const std::array<cplx, 3>& z,
                         const Modulus& tau, const SummationBudget& budget = {});

CompositionResult m2_generic(const std::array<LineOnTorus, 3>& lines, const Modulus& tau,
                             const SummationBudget& budget = {});

// Indefinite theta series over (Lambda+ + n0) ∩ (C - v(alpha(z))), n0 given in the
// (a, b) coordinates of cfg.basis_Lambda.
SeriesValue F_series(const QuadLatticeConfig& cfg, const std::array<long, 2>& n0, const std::array<cplx, 4>& z,
                     const Modulus& tau, const SummationBudget& budget = {},
                     const std::optional<ConeSigns>& plus_signs = std::nullopt, Execution exec = Execution::serial);

bool m3_degree_condition(const std::array<Rational, 4>& slopes);
bool m2_degree_condition(const std::array<Rational, 3>& slopes);

// Global sign of the m3 formula for the slope-order class of `slopes` (canonical C+),
// fixed by one comparison with the polygon oracle and cached.
int m3_orientation_sign(const std::array<Rational, 4>& slopes);

CompositionResult m3_generic(const std::array<LineOnTorus, 4>& lines, const Modulus& tau,
                             const SummationBudget& budget = {},
                             const std::optional<ConeSigns>& plus_signs = std::nullopt,
                             Execution exec = Execution::serial);

// Direct enumeration of clockwise convex quadrangles bounded by lifts of the four lines,
// translates within `radius`; weight e(tau Area + sum beta_i X_i) with X_i the x-extent of edge i.
CompositionResult polygon_oracle(const std::array<LineOnTorus, 4>& lines, const Modulus& tau, int radius);

// Same for triangles (oracle for m2_generic).
CompositionResult triangle_oracle(const std::array<LineOnTorus, 3>& lines, const Modulus& tau, int radius);

// Largest coefficient-wise difference between two label -> value maps.
double max_coefficient_gap(const std::map<long, cplx>& lhs, const std::map<long, cplx>& rhs);

struct ComposeOptions {
    // C+ sign patterns for m3 steps, keyed by the original (0-based) indices of the four lines.
    std::map<std::array<int, 4>, ConeSigns> cone_table;
    // Number of periods added to the representative shift of the intermediate point.
    long representative_offset = 0;
};

// Apply the operation (m2 for three lines, m3 for four) to lines[first..last], then the
// outer operation to the remaining inputs with the intermediate output inserted.
// Coefficients of the final result are keyed by the label of lines.front() ∩ lines.back().
std::map<long, cplx> compose_nested(const std::vector<LineOnTorus>& lines, std::size_t first, std::size_t last,
                                    const Modulus& tau, const SummationBudget& budget = {},
                                    const ComposeOptions& options = {});

}  // namespace klab
