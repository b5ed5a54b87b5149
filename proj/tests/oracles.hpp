#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline cplx ex(cplx z) { return std::exp(cplx{0.0, 2.0 * kPi} * z); }
inline double al(cplx z, cplx t) { return z.imag() / t.imag(); }
inline double sgn(double x) { return x > 0 ? 1.0 : -1.0; }

// Symmetric partial sums over a fixed box, no shell logic.
inline cplx theta(cplx z, cplx t, int N = 40) {
    cplx s{};
    for (int n = -N; n <= N; ++n) s += ex(t * (n * n / 2.0) + static_cast<double>(n) * z);
    return s;
}

inline cplx f(cplx z1, cplx z2, cplx t, int R = 60) {
    const double a1 = al(z1, t), a2 = al(z2, t);
    cplx s{};
    for (int m = -R; m <= R; ++m)
        for (int n = -R; n <= R; ++n)
            if ((a1 + m) * (a2 + n) > 0) s += sgn(a1 + m) * ex(t * double(m * n) + double(n) * z1 + double(m) * z2);
    return s;
}

inline cplx g(cplx z1, cplx z2, cplx t, int R = 60) {
    const double a1 = al(z1, t), a2 = al(z2, t);
    cplx s{};
    for (int n = -R; n <= R; ++n)
        for (int m = -R; m <= R; ++m)
            if ((n + a1) * (m + a2) > 0)
                s += sgn(m + a2) * ex((n + m / 2.0) * m * t + double(m) * z1 + double(m + n) * z2);
    return s;
}

// h with the cone fixed at alpha = (1/2, 1/2) gives h0.
inline cplx h(cplx z1, cplx z2, cplx t, bool fixed_cone = false, int R = 60) {
    const double a1 = fixed_cone ? 0.5 : al(z1, t), a2 = fixed_cone ? 0.5 : al(z2, t);
    cplx s{};
    for (int m = -R; m <= R; ++m)
        for (int n = -R; n <= R; ++n)
            if ((m + a1) * (n + a2) > 0)
                s += sgn(m + a1) *
                     ex(t / 2.0 * double(2 * m * m + 4 * m * n + n * n) + 2.0 * double(m + n) * z1 + double(2 * m + n) * z2);
    return s;
}

inline cplx kappa(cplx y, cplx x, cplx t, int N = 60) {
    cplx s{};
    for (int n = -N; n <= N; ++n) s += ex(t * (n * n / 2.0) + double(n) * x) / (ex(double(n) * t) - ex(y));
    return s;
}

// mpmath values (30 digits, raw series definitions over boxes of radius 70).
struct Frozen {
    const char* name;
    cplx value;
};
inline const cplx kTheta0_i{1.0864348112133080146, 0.0};
inline const cplx kTheta0_2i{1.003734885487739091, 0.0};
inline const cplx kTheta_tau2{1.1063254875119249318, -0.16297369539114571479};  // z=0.3+0.2i, tau=0.3+0.9i
inline const cplx kEta3_i{0.99439770436693641708, 0.0};
inline const cplx kEta3_tau2{1.0032452592823908278, -0.0099874731482038193212};
inline const cplx kF_i{1.2772027977483995437, 0.38837617549700226711};       // z1=0.3+0.4i, z2=0.1+0.2i
inline const cplx kF_tau2{1.0807226610700720873, 0.43459735342679149877};
inline const cplx kG_i{0.24034043997453755777, 0.56955152241725738517};      // z1=0.2+0.3i, z2=0.45+0.6i
inline const cplx kG_i_shifted{0.001326147244532606755, 0.0055289536766418082116};  // z1=0.2+1.3i, z2=0.45-0.6i
inline const cplx kH_i{0.98634566225179918198, 0.0098975601652723444493};    // z1=0.2+0.3i, z2=0.1+0.55i
inline const cplx kH0_i{0.65000932268471925214, -0.047612060048815010235};   // z1=0.2, z2=0.1-0.3i
inline const cplx kKappa_i{1.0281755200069909622, 0.15364760791651757826};   // y=0.2+0.3i, x=0.1+0.7i

// Exact small fractions for lattice brute force.
struct Frac {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Frac() = default;
    Frac(std::int64_t num, std::int64_t den = 1) : p(num), q(den) {
        if (q < 0) p = -p, q = -q;
        const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) p /= g, q /= g;
    }
    friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
    friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
    friend Frac operator*(Frac a, Frac b) { return {a.p * b.p, a.q * b.q}; }
    friend Frac operator/(Frac a, Frac b) { return {a.p * b.q, a.q * b.p}; }
    friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
    bool integral() const { return q == 1; }
};

struct BruteLattice {
    std::array<Frac, 4> l;
    std::array<std::int64_t, 4> g;

    explicit BruteLattice(const std::array<Frac, 4>& slopes) : l(slopes) {
        for (int i = 0; i < 4; ++i) g[i] = slopes[i].q;
    }
    // n2 = a g2, n3 = b g3, n1 and n4 from sum n = 0 and sum lambda n = 0.
    std::array<Frac, 4> point(std::int64_t a, std::int64_t b) const {
        const Frac n2(a * g[1]), n3(b * g[2]);
        const Frac n1 = (l[3] * (n2 + n3) - (l[1] * n2 + l[2] * n3)) / (l[0] - l[3]);
        const Frac n4 = Frac(0) - n1 - n2 - n3;
        return {n1, n2, n3, n4};
    }
    bool plus_first(std::int64_t a, std::int64_t b) const { return (point(a, b)[0] / Frac(g[0])).integral(); }
    bool plus_last(std::int64_t a, std::int64_t b) const { return (point(a, b)[3] / Frac(g[3])).integral(); }
    // Box side after which both membership tests repeat in a and in b.
    std::int64_t period() const {
        std::int64_t p = 1;
        for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}}) {
            const auto n = point(a, b);
            p = std::lcm(p, (n[0] / Frac(g[0])).q);
            p = std::lcm(p, (n[3] / Frac(g[3])).q);
        }
        return p;
    }
    std::int64_t index() const {
        const std::int64_t P = period();
        std::int64_t count = 0;
        for (std::int64_t a = 0; a < P; ++a)
            for (std::int64_t b = 0; b < P; ++b) count += plus_first(a, b) ? 1 : 0;
        return P * P / count;
    }
};

}  // namespace oracle
