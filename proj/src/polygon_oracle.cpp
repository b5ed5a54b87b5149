#include <algorithm>
#include <cmath>

#include "klab/fukaya.hpp"

namespace klab {

namespace {

struct Pt {
    double x;
    double t;
};

double cross(Pt a, Pt b) { return a.x * b.t - a.t * b.x; }
Pt sub(Pt a, Pt b) { return {a.x - b.x, a.t - b.t}; }

// Intersection of the lifts t = l_i x - y_i and t = l_j x - y_j.
Pt meet(double li, double yi, double lj, double yj) {
    const double x = (yj - yi) / (lj - li);
    return {x, li * x - yi};
}

// Integers p in [-radius, radius] such that p * lambda is an integer.
std::vector<long> admissible_steps(const Rational& lambda, int radius) {
    const long s = ideal_of(lambda);
    std::vector<long> out;
    for (long p = -radius; p <= radius; ++p) {
        if (p % s == 0) out.push_back(p);
    }
    return out;
}

double polygon_scale(const std::vector<Pt>& p) {
    double s = 1.0;
    for (const auto& q : p) s = std::max({s, std::abs(q.x), std::abs(q.t)});
    return s;
}

// -1 if every turn is clockwise, +1 if every turn is counter-clockwise, 0 otherwise.
// A polygon whose turns all have one weak sign but some turn vanishes within the
// guard is degenerate.
int orientation(const std::vector<Pt>& p) {
    const std::size_t n = p.size();
    const double scale = polygon_scale(p);
    const double tol = kGuard * scale * scale;
    bool all_neg = true, all_pos = true, weak_neg = true, weak_pos = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = cross(sub(p[i], p[(i + n - 1) % n]), sub(p[(i + 1) % n], p[i]));
        all_neg = all_neg && c < -tol;
        all_pos = all_pos && c > tol;
        weak_neg = weak_neg && c <= tol;
        weak_pos = weak_pos && c >= -tol;
    }
    if (all_neg) return -1;
    if (all_pos) return 1;
    if (weak_neg || weak_pos) throw EvalError(ErrorKind::DomainError, "polygon oracle: degenerate polygon");
    return 0;
}

double shoelace(const std::vector<Pt>& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
    return s / 2.0;
}

void accumulate(CompositionResult& res, const Rational& first_slope, const Rational& last_slope, double shift,
                cplx weight) {
    const Rational c = snap_shift(shift, last_slope);
    const long label = point_label(first_slope, last_slope, c);
    for (auto& co : res.coefficients) {
        if (co.label == label) {
            co.series += weight;
            return;
        }
    }
    const Rational rep = Rational(label) / Rational(ideal_of(last_slope));
    const auto [a, b] = decompose_shift(rep, last_slope);
    res.coefficients.push_back({label, to_long(a), to_long(b), weight});
}

void finish(CompositionResult& res) {
    std::sort(res.coefficients.begin(), res.coefficients.end(),
              [](const Coefficient& x, const Coefficient& y) { return x.label < y.label; });
    res.zero = res.coefficients.empty();
}

}  // namespace

CompositionResult polygon_oracle(const std::array<LineOnTorus, 4>& lines, const Modulus& tau, int radius) {
    double l[4], y[4], beta[4];
    for (int i = 0; i < 4; ++i) {
        l[i] = to_double(lines[i].slope);
        y[i] = lines[i].shift_y;
        beta[i] = lines[i].monodromy_beta;
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (lines[i].slope == lines[j].slope) throw EvalError(ErrorKind::DomainError, "repeated slopes");
        }
    }
    const Pt p12 = meet(l[0], y[0], l[1], y[1]);
    const Pt e23 = meet(l[1], y[1], l[2], y[2]);
    const Pt e34 = meet(l[2], y[2], l[3], y[3]);
    const auto steps2 = admissible_steps(lines[1].slope, radius);
    const auto steps3 = admissible_steps(lines[2].slope, radius);
    CompositionResult res;
    for (long p : steps2) {
        const double dp = static_cast<double>(p);
        const Pt p23{e23.x + dp, e23.t + l[1] * dp};
        for (long q : steps3) {
            const double dq = static_cast<double>(q);
            const Pt p34{e34.x + dp + dq, e34.t + l[1] * dp + l[2] * dq};
            const double y4 = l[3] * p34.x - p34.t;
            const Pt p41 = meet(l[0], y[0], l[3], y4);
            const std::vector<Pt> poly{p12, p23, p34, p41};
            if (orientation(poly) != -1) continue;
            const double area = -shoelace(poly);
            const double xs[4] = {p41.x - p12.x, p12.x - p23.x, p23.x - p34.x, p34.x - p41.x};
            double hol = 0.0;
            for (int i = 0; i < 4; ++i) hol += beta[i] * xs[i];
            const double sg = xs[0] > 0.0 ? 1.0 : -1.0;
            accumulate(res, lines[0].slope, lines[3].slope, y4 - y[3], sg * e_of(tau.tau() * area + hol));
        }
    }
    finish(res);
    return res;
}

CompositionResult triangle_oracle(const std::array<LineOnTorus, 3>& lines, const Modulus& tau, int radius) {
    double l[3], y[3], beta[3];
    for (int i = 0; i < 3; ++i) {
        l[i] = to_double(lines[i].slope);
        y[i] = lines[i].shift_y;
        beta[i] = lines[i].monodromy_beta;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (lines[i].slope == lines[j].slope) throw EvalError(ErrorKind::DomainError, "repeated slopes");
        }
    }
    const Pt p12 = meet(l[0], y[0], l[1], y[1]);
    const Pt e23 = meet(l[1], y[1], l[2], y[2]);
    CompositionResult res;
    for (long p : admissible_steps(lines[1].slope, radius)) {
        const double dp = static_cast<double>(p);
        const Pt p23{e23.x + dp, e23.t + l[1] * dp};
        const double y3 = l[2] * p23.x - p23.t;
        const Pt p31 = meet(l[0], y[0], l[2], y3);
        const std::vector<Pt> poly{p12, p23, p31};
        if (orientation(poly) != -1) continue;
        const double area = -shoelace(poly);
        const double xs[3] = {p31.x - p12.x, p12.x - p23.x, p23.x - p31.x};
        double hol = 0.0;
        for (int i = 0; i < 3; ++i) hol += beta[i] * xs[i];
        accumulate(res, lines[0].slope, lines[2].slope, y3 - y[2], e_of(tau.tau() * area + hol));
    }
    finish(res);
    return res;
}

}  // namespace klab
