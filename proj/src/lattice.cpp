#include "klab/lattice.hpp"

#include <cmath>
#include <limits>

namespace klab {

namespace mp = boost::multiprecision;

namespace {

Integer int_gcd(const Integer& a, const Integer& b) { return mp::gcd(mp::abs(a), mp::abs(b)); }

Integer int_lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return mp::abs(a) / int_gcd(a, b) * mp::abs(b);
}

// Floor modulo, result in [0, m).
Integer int_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

// x, y with a x + b y = gcd(a, b) >= 0.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

bool in_ideal(const Rational& n, const Rational& lambda) { return is_integer(n) && is_integer(n * lambda); }

int rsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

void require_distinct(const Rational* s, int count) {
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (s[i] == s[j]) throw EvalError(ErrorKind::DomainError, "slopes must be pairwise distinct");
        }
    }
}

double yij(const double* y, const double* l, int i, int j) { return (y[j] - y[i]) / (l[j] - l[i]); }
double ypij(const double* y, const double* l, int i, int j) { return (l[i] * y[j] - l[j] * y[i]) / (l[j] - l[i]); }

// Coordinates x_1..x_4 of the plane point with (x_2, x_3) given.
QVec plane_point(const std::array<Rational, 4>& l, const Rational& x2, const Rational& x3) {
    const Rational x1 = ((l[3] - l[1]) * x2 + (l[3] - l[2]) * x3) / (l[0] - l[3]);
    return {x1, x2, x3, -x1 - x2 - x3};
}

std::optional<Cone> build_cone(const std::array<Rational, 4>& l) {
    std::array<int, 4> sigma{1, 0, 0, 0};
    for (int i = 1; i < 4; ++i) sigma[i] = sigma[i - 1] * rsign(l[i - 1] - l[i]);
    if (sigma[3] * sigma[0] * rsign(l[3] - l[0]) <= 0) return std::nullopt;

    // Linear functionals x_i(x_2, x_3).
    std::array<std::array<Rational, 2>, 4> ell;
    ell[0] = {(l[3] - l[1]) / (l[0] - l[3]), (l[3] - l[2]) / (l[0] - l[3])};
    ell[1] = {Rational(1), Rational(0)};
    ell[2] = {Rational(0), Rational(1)};
    ell[3] = {-ell[0][0] - 1, -ell[0][1] - 1};

    struct Cand {
        std::array<Rational, 2> d;
        int coord;
    };
    std::vector<Cand> found;
    for (int i = 0; i < 4; ++i) {
        const std::array<Rational, 2> d{ell[i][1], -ell[i][0]};
        if (d[0] == 0 && d[1] == 0) continue;
        for (int s : {1, -1}) {
            const std::array<Rational, 2> v{d[0] * s, d[1] * s};
            const QVec x = plane_point(l, v[0], v[1]);
            bool ok = true;
            for (int j = 0; j < 4; ++j) ok = ok && (sigma[j] * x[j] >= 0);
            if (!ok) continue;
            bool dup = false;
            for (const auto& c : found) {
                if (c.d[0] * v[1] - c.d[1] * v[0] == 0 && c.d[0] * v[0] + c.d[1] * v[1] > 0) dup = true;
            }
            if (!dup) found.push_back({v, i});
        }
    }
    if (found.size() != 2) return std::nullopt;
    if (found[0].d[0] * found[1].d[1] - found[0].d[1] * found[1].d[0] == 0) return std::nullopt;
    Cone c;
    c.plus_signs = sigma;
    for (int k = 0; k < 2; ++k) {
        c.rays[k] = plane_point(l, found[k].d[0], found[k].d[1]);
        c.bounding_coords[k] = found[k].coord;
    }
    c.witness = plane_point(l, found[0].d[0] + found[1].d[0], found[0].d[1] + found[1].d[1]);
    for (int j = 0; j < 4; ++j) {
        if (sigma[j] * c.witness[j] <= 0) return std::nullopt;
    }
    return c;
}

double dot_real(const RVec& a, const RVec& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw EvalError(ErrorKind::DomainError, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const EvalError&) {
        throw;
    } catch (const std::exception&) {
        throw EvalError(ErrorKind::DomainError, "cannot parse rational '" + s + "'");
    }
}

std::string to_string(const Rational& r) {
    if (mp::denominator(r) == 1) return mp::numerator(r).str();
    return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

long to_long(const Integer& n) {
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min()) {
        throw EvalError(ErrorKind::DomainError, "integer out of machine range");
    }
    return n.convert_to<long>();
}

long ideal_of(const Rational& lambda) { return to_long(mp::denominator(lambda)); }

long triple_ideal(const Rational& l1, const Rational& l2, const Rational& l3) {
    const Rational s[3] = {l1, l2, l3};
    require_distinct(s, 3);
    const Rational scaled = (l3 - l1) / (l3 - l2) * Rational(ideal_of(l1));
    return to_long(int_lcm(Integer(ideal_of(l2)), mp::numerator(scaled)));
}

int hom_degree(const Rational& li, const Rational& lj) {
    if (li == lj) throw EvalError(ErrorKind::DomainError, "hom_degree of equal slopes");
    return li < lj ? 0 : 1;
}

long intersection_count(const Rational& li, const Rational& lj) {
    if (li == lj) throw EvalError(ErrorKind::DomainError, "parallel lines");
    const Integer n = mp::numerator(lj) * mp::denominator(li) - mp::numerator(li) * mp::denominator(lj);
    return to_long(mp::abs(n));
}

TorusPoint intersection_point(const LineOnTorus& li, const LineOnTorus& lj, long a, long b) {
    if (li.slope == lj.slope) throw EvalError(ErrorKind::DomainError, "parallel lines");
    const double l[2] = {to_double(li.slope), to_double(lj.slope)};
    const double y[2] = {li.shift_y, lj.shift_y};
    const double c = (static_cast<double>(a) * l[1] + static_cast<double>(b)) / (l[1] - l[0]);
    double x = yij(y, l, 0, 1) + c;
    double t = ypij(y, l, 0, 1) + l[0] * c;
    x -= std::floor(x);
    t -= std::floor(t);
    return {x, t};
}

long point_label(const Rational& first_slope, const Rational& last_slope, const Rational& c) {
    const Rational k = c * Rational(mp::denominator(last_slope));
    if (!is_integer(k)) throw EvalError(ErrorKind::DomainError, "shift is not a lattice shift of the last line");
    const Integer n(intersection_count(first_slope, last_slope));
    return to_long(int_mod(mp::numerator(k), n));
}

std::pair<Integer, Integer> decompose_shift(const Rational& c, const Rational& lambda) {
    const Integer r = mp::numerator(lambda);
    const Integer s = mp::denominator(lambda);
    const Rational jr = c * Rational(s);
    if (!is_integer(jr)) throw EvalError(ErrorKind::DomainError, "shift is not in (1/s)Z");
    const Integer j = mp::numerator(jr);
    Integer g, x, y;
    ext_gcd(r, s, g, x, y);
    return {x * j, y * j};
}

Rational snap_shift(double c, const Rational& lambda) {
    const double s = to_double(Rational(mp::denominator(lambda)));
    const double k = std::nearbyint(c * s);
    if (std::abs(c * s - k) > 1e-6) throw EvalError(ErrorKind::DomainError, "shift not on the lattice of the line");
    return Rational(Integer(static_cast<long long>(k)), mp::denominator(lambda));
}

QVec QuadLatticeConfig::point(const Integer& a, const Integer& b) const {
    QVec out;
    for (int i = 0; i < 4; ++i) out[i] = Rational(a) * basis_Lambda[0][i] + Rational(b) * basis_Lambda[1][i];
    return out;
}

RVec QuadLatticeConfig::point_real(double a, double b) const {
    RVec out;
    for (int i = 0; i < 4; ++i) out[i] = a * to_double(basis_Lambda[0][i]) + b * to_double(basis_Lambda[1][i]);
    return out;
}

QuadLatticeConfig build_quad_config(const std::array<Rational, 4>& slopes) {
    require_distinct(slopes.data(), 4);
    QuadLatticeConfig cfg;
    cfg.slopes = slopes;
    for (int i = 0; i < 4; ++i) cfg.ideals[i] = ideal_of(slopes[i]);
    const Rational g2(cfg.ideals[1]), g3(cfg.ideals[2]), g1(cfg.ideals[0]);
    cfg.basis_Lambda[0] = plane_point(slopes, g2, Rational(0));
    cfg.basis_Lambda[1] = plane_point(slopes, Rational(0), g3);

    // n1 in g1 Z  <=>  u a + w b in Z  <=>  A a + B b = 0 mod M.
    const Rational u = cfg.basis_Lambda[0][0] / g1;
    const Rational w = cfg.basis_Lambda[1][0] / g1;
    const Integer M = int_lcm(mp::denominator(u), mp::denominator(w));
    const Integer A = mp::numerator(u * Rational(M));
    const Integer B = mp::numerator(w * Rational(M));
    const Integer g = int_gcd(A, M);
    const Integer n1 = M / g;
    const Integer n2 = g / int_gcd(g, B);
    Integer t = 0;
    if (n1 > 1) {
        Integer gg, inv, dummy;
        ext_gcd(int_mod(A / g, n1), n1, gg, inv, dummy);
        const Integer rhs = -B * n2 / g;
        t = int_mod(rhs * inv, n1);
    }
    cfg.plus_hermite = {{{to_long(n1), 0}, {to_long(t), to_long(n2)}}};

    for (long i = 0; i < to_long(n1); ++i) {
        for (long j = 0; j < to_long(n2); ++j) {
            cfg.coset_ab.push_back({i, j});
            cfg.coset_reps.push_back(cfg.point(i, j));
        }
    }

    // Lagrange-Gauss reduction of the Lambda+ basis in the Euclidean metric of R^4.
    std::array<long, 2> b0 = cfg.plus_hermite[0], b1 = cfg.plus_hermite[1];
    auto vec = [&](const std::array<long, 2>& ab) {
        return cfg.point_real(static_cast<double>(ab[0]), static_cast<double>(ab[1]));
    };
    for (int iter = 0; iter < 1000; ++iter) {
        RVec v0 = vec(b0), v1 = vec(b1);
        if (dot_real(v1, v1) < dot_real(v0, v0)) {
            std::swap(b0, b1);
            std::swap(v0, v1);
        }
        const long mu = std::lround(dot_real(v0, v1) / dot_real(v0, v0));
        if (mu == 0) break;
        b1 = {b1[0] - mu * b0[0], b1[1] - mu * b0[1]};
    }
    cfg.plus_reduced = {b0, b1};
    cfg.basis_LambdaPlus[0] = cfg.point(b0[0], b0[1]);
    cfg.basis_LambdaPlus[1] = cfg.point(b1[0], b1[1]);

    cfg.cone = build_cone(slopes);
    return cfg;
}

bool on_subspace(const std::array<Rational, 4>& slopes, const QVec& n) {
    Rational s = 0, sl = 0;
    for (int i = 0; i < 4; ++i) {
        s += n[i];
        sl += slopes[i] * n[i];
    }
    return s == 0 && sl == 0;
}

bool in_lambda(const QuadLatticeConfig& cfg, const QVec& n) {
    return on_subspace(cfg.slopes, n) && in_ideal(n[1], cfg.slopes[1]) && in_ideal(n[2], cfg.slopes[2]);
}

bool in_lambda_plus(const QuadLatticeConfig& cfg, const QVec& n) {
    return in_lambda(cfg, n) && in_ideal(n[0], cfg.slopes[0]);
}

bool in_lambda_plus_via_last(const QuadLatticeConfig& cfg, const QVec& n) {
    return in_lambda(cfg, n) && in_ideal(n[3], cfg.slopes[3]);
}

Rational quadratic_Q_exact(const QuadLatticeConfig& cfg, const QVec& x) {
    const auto& l = cfg.slopes;
    return (l[2] - l[3]) * x[2] * x[3] + (l[0] - l[1]) * x[0] * x[1];
}

double quadratic_Q(const QuadLatticeConfig& cfg, const RVec& x) {
    double l[4];
    for (int i = 0; i < 4; ++i) l[i] = to_double(cfg.slopes[i]);
    double s = 0.0, sl = 0.0, norm = 0.0;
    for (int i = 0; i < 4; ++i) {
        s += x[i];
        sl += l[i] * x[i];
        norm = std::max(norm, std::abs(x[i]));
    }
    if (std::abs(s) + std::abs(sl) > 1e-12 * std::max(1.0, norm)) {
        throw EvalError(ErrorKind::DomainError, "quadratic_Q: vector is off the lattice plane");
    }
    return (l[2] - l[3]) * x[2] * x[3] + (l[0] - l[1]) * x[0] * x[1];
}

namespace {

// Returns 0 when x is outside C, 1 when inside; throws near the boundary.
bool inside_cone(const double* l, const RVec& x) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    const double floor_val = kGuard * norm2;
    double prod[4];
    for (int i = 0; i < 4; ++i) {
        const int p = (i + 3) % 4;
        prod[i] = (l[p] - l[i]) * x[i] * x[p];
    }
    for (double p : prod) {
        if (p < -floor_val) return false;
    }
    for (double p : prod) {
        if (!(std::abs(p) > floor_val)) {
            throw EvalError(ErrorKind::BoundaryProximity, "point within guard of the cone boundary");
        }
    }
    return true;
}

}  // namespace

ConeSide cone_membership(const QuadLatticeConfig& cfg, const RVec& x) {
    double l[4];
    for (int i = 0; i < 4; ++i) l[i] = to_double(cfg.slopes[i]);
    if (!inside_cone(l, x)) return ConeSide::Outside;
    return x[0] > 0.0 ? ConeSide::InPlus : ConeSide::InMinus;
}

ConeSide cone_membership(const QuadLatticeConfig& cfg, const RVec& x, const std::array<int, 4>& plus_signs) {
    double l[4];
    for (int i = 0; i < 4; ++i) l[i] = to_double(cfg.slopes[i]);
    if (!inside_cone(l, x)) return ConeSide::Outside;
    bool plus = true, minus = true;
    for (int i = 0; i < 4; ++i) {
        const int s = x[i] > 0.0 ? 1 : -1;
        plus = plus && s == plus_signs[i];
        minus = minus && s == -plus_signs[i];
    }
    if (plus) return ConeSide::InPlus;
    if (minus) return ConeSide::InMinus;
    throw EvalError(ErrorKind::DomainError, "sign pattern does not describe a component of the cone");
}

RVec shift_vector(const std::array<double, 4>& y, const std::array<Rational, 4>& slopes) {
    require_distinct(slopes.data(), 4);
    double l[4];
    for (int i = 0; i < 4; ++i) l[i] = to_double(slopes[i]);
    const double* yp = y.data();
    const double y12 = yij(yp, l, 0, 1), y23 = yij(yp, l, 1, 2), y34 = yij(yp, l, 2, 3), y14 = yij(yp, l, 0, 3);
    return {y14 - y12, y12 - y23, y23 - y34, y34 - y14};
}

double delta4(const std::array<double, 4>& y, const std::array<Rational, 4>& slopes) {
    require_distinct(slopes.data(), 4);
    double l[4];
    for (int i = 0; i < 4; ++i) l[i] = to_double(slopes[i]);
    const double* yp = y.data();
    const double a = yij(yp, l, 2, 3) - yij(yp, l, 0, 1);
    const double b = yij(yp, l, 1, 2) - yij(yp, l, 0, 3);
    const double c = ypij(yp, l, 2, 3) - ypij(yp, l, 0, 1);
    const double d = ypij(yp, l, 1, 2) - ypij(yp, l, 0, 3);
    return a * d - b * c;
}

double delta3(const std::array<double, 3>& y, const std::array<Rational, 3>& slopes) {
    require_distinct(slopes.data(), 3);
    double l[3];
    for (int i = 0; i < 3; ++i) l[i] = to_double(slopes[i]);
    const double* yp = y.data();
    const double a = yij(yp, l, 1, 2) - yij(yp, l, 0, 1);
    const double b = yij(yp, l, 0, 2) - yij(yp, l, 0, 1);
    const double c = ypij(yp, l, 1, 2) - ypij(yp, l, 0, 1);
    const double d = ypij(yp, l, 0, 2) - ypij(yp, l, 0, 1);
    return a * d - b * c;
}

}  // namespace klab
