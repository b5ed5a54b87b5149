#include "klab/fukaya.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "klab/appell.hpp"
#include "klab/kronecker.hpp"

namespace klab {

namespace {

void add_coefficient(std::vector<Coefficient>& out, const Coefficient& c) {
    for (auto& existing : out) {
        if (existing.label == c.label) {
            existing.series += c.series;
            return;
        }
    }
    out.push_back(c);
}

void sort_by_label(std::vector<Coefficient>& out) {
    std::sort(out.begin(), out.end(), [](const Coefficient& x, const Coefficient& y) { return x.label < y.label; });
}

template <std::size_t N>
std::array<double, N> slopes_real(const std::array<Rational, N>& s) {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = to_double(s[i]);
    return out;
}

CompositionResult m3_with_sign(const std::array<LineOnTorus, 4>& lines, const Modulus& tau,
                               const SummationBudget& budget, const std::optional<ConeSigns>& plus_signs,
                               Execution exec, int sign) {
    std::array<Rational, 4> sl;
    std::array<double, 4> y{}, beta{};
    for (int i = 0; i < 4; ++i) {
        sl[i] = lines[i].slope;
        y[i] = lines[i].shift_y;
        beta[i] = lines[i].monodromy_beta;
    }
    const QuadLatticeConfig cfg = build_quad_config(sl);
    CompositionResult res;
    if (!m3_degree_condition(sl)) {
        res.zero = true;
        return res;
    }
    if (!cfg.cone) throw EvalError(ErrorKind::DomainError, "m3: cone is empty for these slopes");
    const RVec v = shift_vector(y, sl);
    std::array<cplx, 4> z;
    double hol = 0.0;
    for (int i = 0; i < 4; ++i) {
        z[i] = tau.tau() * y[i] + beta[i];
        hol += beta[i] * v[i];
    }
    res.prefactor = e_of(tau.tau() / 2.0 * delta4(y, sl) + hol);
    res.sign = sign;
    for (const auto& k : cfg.coset_ab) {
        const QVec kv = cfg.point(k[0], k[1]);
        const Rational a = -kv[1] - kv[2];
        const Rational b = sl[1] * kv[1] + sl[2] * kv[2];
        const Rational c4 = a * sl[3] + b;
        Coefficient c;
        c.label = point_label(sl[0], sl[3], c4);
        c.a = to_long(boost::multiprecision::numerator(a));
        c.b = to_long(boost::multiprecision::numerator(b));
        c.series = F_series(cfg, k, z, tau, budget, plus_signs, exec).value;
        add_coefficient(res.coefficients, c);
    }
    sort_by_label(res.coefficients);
    return res;
}

}  // namespace

std::map<long, cplx> CompositionResult::values() const {
    std::map<long, cplx> out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) out[coefficients[k].label] += value(k);
    return out;
}

cplx m3_square(double a1, double a2, double b1, double b2, const Modulus& tau, const SummationBudget& budget) {
    const cplx t = tau.tau();
    const cplx pre = e_of(t * (a1 * a2) + a1 * b2 + a2 * b1);
    return pre * f_series({a1 * t + b1, a2 * t + b2}, tau, budget).value;
}

cplx m3_trapezoid(double a1, double a2, double b1, double b2, const Modulus& tau, const SummationBudget& budget) {
    const cplx t = tau.tau();
    const cplx pre = e_of((a1 + a2 / 2.0) * a2 * t + a2 * b1 + (a1 + a2) * b2);
    return pre * g_series({a1 * t + b1, a2 * t + b2}, tau, budget).value;
}

bool m2_degree_condition(const std::array<Rational, 3>& s) {
    return hom_degree(s[0], s[1]) + hom_degree(s[1], s[2]) == hom_degree(s[0], s[2]);
}

bool m3_degree_condition(const std::array<Rational, 4>& s) {
    return hom_degree(s[0], s[1]) + hom_degree(s[1], s[2]) + hom_degree(s[2], s[3]) == hom_degree(s[0], s[3]) + 1;
}

SeriesValue theta_triple(const std::array<Rational, 3>& slopes, long n0, const std::array<cplx, 3>& z,
                         const Modulus& tau, const SummationBudget& budget) {
    const Rational cq = (slopes[2] - slopes[1]) * (slopes[1] - slopes[0]) / (2 * (slopes[2] - slopes[0]));
    if (cq <= 0) throw EvalError(ErrorKind::DomainError, "theta_triple: Gaussian coefficient is not positive");
    const double c = to_double(cq);
    const auto l = slopes_real(slopes);
    const long period = triple_ideal(slopes[0], slopes[1], slopes[2]);
    const cplx w = (z[2] - z[1]) / (l[2] - l[1]) - (z[1] - z[0]) / (l[1] - l[0]);
    const cplx t = tau.tau();
    const double peak = -alpha(w, tau);
    const long center = std::lround((peak - static_cast<double>(n0)) / static_cast<double>(period));
    return sum_by_shells_1d(
        [&](long k) {
            const double u = static_cast<double>(k * period + n0);
            return e_of(c * t * (u * u) + 2.0 * c * u * w);
        },
        budget, center, 1);
}

CompositionResult m2_generic(const std::array<LineOnTorus, 3>& lines, const Modulus& tau,
                             const SummationBudget& budget) {
    std::array<Rational, 3> sl;
    std::array<double, 3> y{}, beta{};
    for (int i = 0; i < 3; ++i) {
        sl[i] = lines[i].slope;
        y[i] = lines[i].shift_y;
        beta[i] = lines[i].monodromy_beta;
    }
    CompositionResult res;
    const long period = triple_ideal(sl[0], sl[1], sl[2]);
    if (!m2_degree_condition(sl)) {
        res.zero = true;
        return res;
    }
    const auto l = slopes_real(sl);
    auto yij = [&](int i, int j) { return (y[j] - y[i]) / (l[j] - l[i]); };
    const double v[3] = {yij(0, 2) - yij(0, 1), yij(0, 1) - yij(1, 2), yij(1, 2) - yij(0, 2)};
    std::array<cplx, 3> z;
    double hol = 0.0;
    for (int i = 0; i < 3; ++i) {
        z[i] = tau.tau() * y[i] + beta[i];
        hol += beta[i] * v[i];
    }
    res.prefactor = e_of(-tau.tau() / 2.0 * delta3(y, sl) + hol);
    const long g2 = ideal_of(sl[1]);
    for (long n0 = 0; n0 < period; n0 += g2) {
        Coefficient c;
        const Rational shift = Rational(n0) * (sl[2] - sl[1]);
        c.label = point_label(sl[0], sl[2], shift);
        c.a = n0;
        c.b = to_long(boost::multiprecision::numerator(Rational(-sl[1] * n0)));
        c.series = theta_triple(sl, n0, z, tau, budget).value;
        add_coefficient(res.coefficients, c);
    }
    sort_by_label(res.coefficients);
    return res;
}

SeriesValue F_series(const QuadLatticeConfig& cfg, const std::array<long, 2>& n0, const std::array<cplx, 4>& z,
                     const Modulus& tau, const SummationBudget& budget, const std::optional<ConeSigns>& plus_signs,
                     Execution exec) {
    std::array<double, 4> az{};
    for (int i = 0; i < 4; ++i) az[i] = alpha(z[i], tau);
    const RVec v = shift_vector(az, cfg.slopes);
    const auto l = slopes_real(cfg.slopes);
    const auto& p0 = cfg.plus_reduced[0];
    const auto& p1 = cfg.plus_reduced[1];

    // Locate the cone apex -v in (i, j) coordinates of the coset n0 + i p0 + j p1.
    const double da = -v[1] / static_cast<double>(cfg.ideals[1]) - static_cast<double>(n0[0]);
    const double db = -v[2] / static_cast<double>(cfg.ideals[2]) - static_cast<double>(n0[1]);
    const double det = static_cast<double>(p0[0] * p1[1] - p0[1] * p1[0]);
    const double ci = (da * static_cast<double>(p1[1]) - db * static_cast<double>(p1[0])) / det;
    const double cj = (db * static_cast<double>(p0[0]) - da * static_cast<double>(p0[1])) / det;

    ShellOptions opt;
    opt.center = {std::lround(ci), std::lround(cj)};
    opt.min_radius = 2;
    opt.exec = exec;
    const cplx t = tau.tau();
    return sum_by_shells_2d(
        [&](long i, long j) -> cplx {
            const double a = static_cast<double>(n0[0] + i * p0[0] + j * p1[0]);
            const double b = static_cast<double>(n0[1] + i * p0[1] + j * p1[1]);
            const RVec n = cfg.point_real(a, b);
            RVec x;
            for (int k = 0; k < 4; ++k) x[k] = n[k] + v[k];
            const ConeSide side = plus_signs ? cone_membership(cfg, x, *plus_signs) : cone_membership(cfg, x);
            if (side == ConeSide::Outside) return {0.0, 0.0};
            const double eps = side == ConeSide::InPlus ? 1.0 : -1.0;
            const double q = (l[2] - l[3]) * n[2] * n[3] + (l[0] - l[1]) * n[0] * n[1];
            cplx lin{0.0, 0.0};
            for (int k = 0; k < 4; ++k) lin += n[k] * z[k];
            return eps * e_of(t / 2.0 * q + lin);
        },
        budget, opt);
}

int m3_orientation_sign(const std::array<Rational, 4>& slopes) {
    static std::mutex mu;
    static std::map<std::array<int, 4>, int> cache;
    std::array<int, 4> ranks{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) ranks[i] += slopes[j] < slopes[i] ? 1 : 0;
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(ranks);
        if (it != cache.end()) return it->second;
    }
    const double ys[4] = {0.137, 0.291, 0.418, 0.073};
    std::array<LineOnTorus, 4> lines;
    for (int i = 0; i < 4; ++i) lines[i] = {slopes[i], ys[i], 0.0};
    const Modulus tau(cplx{0.0, 1.0});
    const CompositionResult formula = m3_with_sign(lines, tau, {}, std::nullopt, Execution::serial, 1);
    const CompositionResult oracle = polygon_oracle(lines, tau, 10);
    const auto fv = formula.values();
    const auto ov = oracle.values();
    long best = 0;
    double best_abs = -1.0;
    for (const auto& [label, val] : ov) {
        if (std::abs(val) > best_abs) {
            best_abs = std::abs(val);
            best = label;
        }
    }
    if (best_abs <= 0.0 || !fv.count(best)) {
        throw EvalError(ErrorKind::DomainError, "m3 sign determination: no comparable coefficient");
    }
    const cplx ratio = fv.at(best) / ov.at(best);
    const int sign = ratio.real() > 0.0 ? 1 : -1;
    if (std::abs(ratio - static_cast<double>(sign)) > 1e-6) {
        throw EvalError(ErrorKind::DomainError, "m3 sign determination: formula and oracle disagree");
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[ranks] = sign;
    return sign;
}

CompositionResult m3_generic(const std::array<LineOnTorus, 4>& lines, const Modulus& tau,
                             const SummationBudget& budget, const std::optional<ConeSigns>& plus_signs,
                             Execution exec) {
    std::array<Rational, 4> sl;
    for (int i = 0; i < 4; ++i) sl[i] = lines[i].slope;
    int sign = 1;
    if (!plus_signs) {
        build_quad_config(sl);
        if (m3_degree_condition(sl)) sign = m3_orientation_sign(sl);
    }
    return m3_with_sign(lines, tau, budget, plus_signs, exec, sign);
}

double max_coefficient_gap(const std::map<long, cplx>& lhs, const std::map<long, cplx>& rhs) {
    double gap = 0.0;
    for (const auto& [k, v] : lhs) {
        auto it = rhs.find(k);
        gap = std::max(gap, std::abs(v - (it == rhs.end() ? cplx{} : it->second)));
    }
    for (const auto& [k, v] : rhs) {
        if (!lhs.count(k)) gap = std::max(gap, std::abs(v));
    }
    return gap;
}

namespace {

CompositionResult apply_op(const std::vector<LineOnTorus>& lines, const std::vector<int>& ids, const Modulus& tau,
                           const SummationBudget& budget, const ComposeOptions& options) {
    if (lines.size() == 3) return m2_generic({lines[0], lines[1], lines[2]}, tau, budget);
    if (lines.size() == 4) {
        std::optional<ConeSigns> signs;
        const std::array<int, 4> key{ids[0], ids[1], ids[2], ids[3]};
        auto it = options.cone_table.find(key);
        if (it != options.cone_table.end()) signs = it->second;
        return m3_generic({lines[0], lines[1], lines[2], lines[3]}, tau, budget, signs);
    }
    throw EvalError(ErrorKind::DomainError, "compose_nested: operations take three or four lines");
}

}  // namespace

std::map<long, cplx> compose_nested(const std::vector<LineOnTorus>& lines, std::size_t first, std::size_t last,
                                    const Modulus& tau, const SummationBudget& budget,
                                    const ComposeOptions& options) {
    const std::size_t n = lines.size();
    if (first >= last || last >= n) throw EvalError(ErrorKind::DomainError, "compose_nested: bad inner range");
    std::vector<LineOnTorus> inner_lines(lines.begin() + first, lines.begin() + last + 1);
    std::vector<int> inner_ids;
    for (std::size_t i = first; i <= last; ++i) inner_ids.push_back(static_cast<int>(i));
    const CompositionResult inner = apply_op(inner_lines, inner_ids, tau, budget, options);

    std::map<long, cplx> out;
    if (inner.zero) return out;
    const Rational& lam_mid = lines[last].slope;
    const Rational s_mid(boost::multiprecision::denominator(lam_mid));
    const long n_mid = intersection_count(lines[first].slope, lam_mid);
    const Rational s_end(boost::multiprecision::denominator(lines[n - 1].slope));

    for (std::size_t k = 0; k < inner.coefficients.size(); ++k) {
        const cplx inner_val = inner.value(k);
        const long rep = inner.coefficients[k].label + options.representative_offset * n_mid;
        const Rational c = Rational(rep) / s_mid;
        const auto [a, b] = decompose_shift(c, lam_mid);
        std::vector<LineOnTorus> outer;
        std::vector<int> outer_ids;
        Rational end_shift = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > first && i < last) continue;
            LineOnTorus li = lines[i];
            if (i >= last) {
                const Rational d = (i == last) ? c : Rational(a) * li.slope + Rational(b);
                li.shift_y += to_double(d);
                if (i == n - 1) end_shift = d;
            }
            outer.push_back(li);
            outer_ids.push_back(static_cast<int>(i));
        }
        const CompositionResult res = apply_op(outer, outer_ids, tau, budget, options);
        if (res.zero) continue;
        for (std::size_t j = 0; j < res.coefficients.size(); ++j) {
            const Rational total = end_shift + Rational(res.coefficients[j].label) / s_end;
            out[point_label(lines[0].slope, lines[n - 1].slope, total)] += inner_val * res.value(j);
        }
    }
    return out;
}

}  // namespace klab
