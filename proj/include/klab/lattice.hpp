#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "klab/core.hpp"

namespace klab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVec = std::array<Rational, 4>;
using RVec = std::array<double, 4>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);
long to_long(const Integer& n);

struct LineOnTorus {
    Rational slope;
    double shift_y = 0.0;
    double monodromy_beta = 0.0;
};

// Generator g of I_lambda = {n : n lambda in Z} = gZ.
long ideal_of(const Rational& lambda);

// Generator of I_{l2} intersected with ((l3 - l1) / (l3 - l2)) I_{l1}.
long triple_ideal(const Rational& l1, const Rational& l2, const Rational& l3);

int hom_degree(const Rational& li, const Rational& lj);

// Number of intersection points of two lines of slopes li, lj on the torus.
long intersection_count(const Rational& li, const Rational& lj);

struct TorusPoint {
    double x;
    double t;
};

// e_{a,b}(y_i, y_j) reduced into [0,1)^2. Lines are t = lambda x - y.
TorusPoint intersection_point(const LineOnTorus& li, const LineOnTorus& lj, long a, long b);

// Points of L_first ∩ L_last are labelled by the shift c of the last line,
// e_{0,0}(y_first, y_last + c); c lies in (1/s_last) Z. The label is the
// residue of s_last * c modulo the intersection count.
long point_label(const Rational& first_slope, const Rational& last_slope, const Rational& c);

// Integers (a, b) with a * lambda + b = c, for c in (1/s) Z, lambda = r/s.
std::pair<Integer, Integer> decompose_shift(const Rational& c, const Rational& lambda);

// Snap a floating shift to the nearest element of (1/s) Z; DomainError if it is not close.
Rational snap_shift(double c, const Rational& lambda);

enum class ConeSide { InPlus, InMinus, Outside };

struct Cone {
    std::array<int, 4> plus_signs;  // sign of each coordinate on C+
    std::array<QVec, 2> rays;
    std::array<int, 2> bounding_coords;  // coordinate vanishing on each ray
    QVec witness;
};

struct QuadLatticeConfig {
    std::array<Rational, 4> slopes;
    std::array<long, 4> ideals{};
    std::array<QVec, 2> basis_Lambda;
    std::array<QVec, 2> basis_LambdaPlus;
    // Lambda+ in the (a, b) coordinates of basis_Lambda: Hermite form (N1, 0), (t, N2).
    std::array<std::array<long, 2>, 2> plus_hermite{};
    // Reduced basis of Lambda+ in (a, b) coordinates, used for enumeration.
    std::array<std::array<long, 2>, 2> plus_reduced{};
    std::vector<std::array<long, 2>> coset_ab;
    std::vector<QVec> coset_reps;
    std::optional<Cone> cone;

    long index() const { return static_cast<long>(coset_reps.size()); }
    QVec point(const Integer& a, const Integer& b) const;
    RVec point_real(double a, double b) const;
};

QuadLatticeConfig build_quad_config(const std::array<Rational, 4>& slopes);

bool on_subspace(const std::array<Rational, 4>& slopes, const QVec& n);
bool in_lambda(const QuadLatticeConfig& cfg, const QVec& n);
bool in_lambda_plus(const QuadLatticeConfig& cfg, const QVec& n);
bool in_lambda_plus_via_last(const QuadLatticeConfig& cfg, const QVec& n);

Rational quadratic_Q_exact(const QuadLatticeConfig& cfg, const QVec& x);
double quadratic_Q(const QuadLatticeConfig& cfg, const RVec& x);

ConeSide cone_membership(const QuadLatticeConfig& cfg, const RVec& x);
// Same, with C+ given by an explicit coordinate sign pattern.
ConeSide cone_membership(const QuadLatticeConfig& cfg, const RVec& x, const std::array<int, 4>& plus_signs);

RVec shift_vector(const std::array<double, 4>& y, const std::array<Rational, 4>& slopes);

double delta4(const std::array<double, 4>& y, const std::array<Rational, 4>& slopes);
double delta3(const std::array<double, 3>& y, const std::array<Rational, 3>& slopes);

}  // namespace klab
