#include <gtest/gtest.h>

#include <random>
#include <set>

#include "klab/lattice.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

std::array<Rational, 4> R4(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

const std::vector<oracle::Frac>& small_slopes() {
    static const std::vector<oracle::Frac> s{{-1}, {-2, 3}, {-1, 2}, {-1, 3}, {0}, {1, 3}, {1, 2}, {2, 3}, {1}};
    return s;
}

Rational to_rat(oracle::Frac f) { return Rational(f.p, f.q); }

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_EQ(to_string(Rational(-2, 3)), "-2/3");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_THROW(parse_rational("1/0"), EvalError);
    EXPECT_THROW(parse_rational("abc"), EvalError);
}

TEST(Ideals, Basic) {
    EXPECT_EQ(ideal_of(Rational(3, 2)), 2);
    EXPECT_EQ(ideal_of(Rational(5)), 1);
    EXPECT_EQ(ideal_of(Rational(0)), 1);
}

TEST(Ideals, TripleIdealMatchesBruteForce) {
    // n in I_{l2} and n (l3 - l2)/(l3 - l1) in I_{l1}
    auto brute = [](oracle::Frac l1, oracle::Frac l2, oracle::Frac l3) {
        for (std::int64_t n = 1; n < 1000; ++n) {
            const oracle::Frac m = oracle::Frac(n) * (l3 - l2) / (l3 - l1);
            if ((oracle::Frac(n) * l2).integral() && m.integral() && (m * l1).integral()) return n;
        }
        return std::int64_t{-1};
    };
    const auto& s = small_slopes();
    for (auto a : s)
        for (auto b : s)
            for (auto c : s) {
                if (a == b || b == c || a == c) continue;
                EXPECT_EQ(triple_ideal(to_rat(a), to_rat(b), to_rat(c)), brute(a, b, c));
                EXPECT_EQ(triple_ideal(to_rat(a), to_rat(b), to_rat(c)), triple_ideal(to_rat(c), to_rat(b), to_rat(a)));
            }
    EXPECT_EQ(triple_ideal(0, 1, 2), 2);
    EXPECT_EQ(triple_ideal(0, 2, 3), brute({0}, {2}, {3}));
}

TEST(Degrees, HomDegree) {
    EXPECT_EQ(hom_degree(0, 1), 0);
    EXPECT_EQ(hom_degree(1, 0), 1);
    EXPECT_THROW(hom_degree(1, 1), EvalError);
    EXPECT_EQ(intersection_count(Rational(0), Rational(2)), 2);
    EXPECT_EQ(intersection_count(Rational(1, 2), Rational(1, 3)), 1);
}

TEST(Points, IntersectionPoint) {
    const LineOnTorus li{Rational(0), 0.0, 0.0}, lj{Rational(1), 0.5, 0.0};
    const auto p = intersection_point(li, lj, 0, 0);
    EXPECT_NEAR(p.x, 0.5, 1e-15);
    EXPECT_NEAR(p.t, 0.0, 1e-15);
}

TEST(Points, ShiftRule) {
    const LineOnTorus li{Rational(1, 2), 0.13, 0.0}, lj{Rational(-1, 3), 0.41, 0.0};
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            const auto p = intersection_point(li, lj, a, b);
            LineOnTorus shifted = lj;
            shifted.shift_y += a * to_double(lj.slope) + b;
            const auto q = intersection_point(li, shifted, 0, 0);
            EXPECT_LT(std::abs(std::remainder(p.x - q.x, 1.0)), 1e-12);
            EXPECT_LT(std::abs(std::remainder(p.t - q.t, 1.0)), 1e-12);
        }
    }
}

TEST(Points, DistinctPointsCount) {
    const LineOnTorus li{Rational(0), 0.1, 0.0}, lj{Rational(2), 0.3, 0.0};
    std::vector<TorusPoint> pts;
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            const auto p = intersection_point(li, lj, a, b);
            bool seen = false;
            for (const auto& q : pts) {
                seen = seen || (std::abs(std::remainder(p.x - q.x, 1.0)) < 1e-9 &&
                                std::abs(std::remainder(p.t - q.t, 1.0)) < 1e-9);
            }
            if (!seen) pts.push_back(p);
        }
    }
    EXPECT_EQ(pts.size(), 2u);
}

TEST(Points, LabelsAndDecomposition) {
    const Rational l1(1, 2), l4(-2, 3);
    const long n = intersection_count(l1, l4);
    std::set<long> labels;
    for (long k = 0; k < 3 * n; ++k) {
        const Rational c = Rational(k, 3);
        const long lab = point_label(l1, l4, c);
        EXPECT_GE(lab, 0);
        EXPECT_LT(lab, n);
        labels.insert(lab);
        const auto [a, b] = decompose_shift(c, l4);
        EXPECT_EQ(Rational(a) * l4 + Rational(b), c);
    }
    EXPECT_EQ(static_cast<long>(labels.size()), n);
    EXPECT_EQ(snap_shift(0.3333333333333, Rational(2, 3)), Rational(1, 3));
    EXPECT_THROW(snap_shift(0.25, Rational(2, 3)), EvalError);
}

TEST(QuadConfig, Example0123) {
    const auto cfg = build_quad_config(R4(0, 1, 2, 3));
    EXPECT_EQ(cfg.index(), 3);
    for (const auto& v : cfg.basis_Lambda) EXPECT_TRUE(on_subspace(cfg.slopes, v));
    // Lambda = {((-2a-b)/3, a, b, -(a+2b)/3)}
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            const QVec n = cfg.point(a, b);
            EXPECT_EQ(n[0], Rational(-2 * a - b, 3));
            EXPECT_EQ(n[3], Rational(-(a + 2 * b), 3));
        }
    }
    ASSERT_EQ(cfg.coset_reps.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            QVec d;
            for (int k = 0; k < 4; ++k) d[k] = cfg.coset_reps[i][k] - cfg.coset_reps[j][k];
            EXPECT_FALSE(in_lambda_plus(cfg, d));
        }
    }
}

TEST(QuadConfig, RejectsRepeatedSlopes) { EXPECT_THROW(build_quad_config(R4(0, 1, 1, 3)), EvalError); }

TEST(QuadConfig, ExhaustiveAgainstBruteForce) {
    const auto& s = small_slopes();
    int configs = 0;
    for (auto a : s)
        for (auto b : s)
            for (auto c : s)
                for (auto d : s) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    const oracle::BruteLattice brute({a, b, c, d});
                    const auto cfg = build_quad_config({to_rat(a), to_rat(b), to_rat(c), to_rat(d)});
                    ASSERT_EQ(cfg.index(), brute.index());
                    ASSERT_EQ(static_cast<long>(cfg.coset_ab.size()), cfg.index());
                    // Every box point lies in exactly one listed coset.
                    const std::int64_t P = brute.period();
                    for (std::int64_t x = 0; x < P; ++x) {
                        for (std::int64_t y = 0; y < P; ++y) {
                            int hits = 0;
                            for (const auto& r : cfg.coset_ab) hits += brute.plus_first(x - r[0], y - r[1]) ? 1 : 0;
                            ASSERT_EQ(hits, 1);
                            ASSERT_EQ(brute.plus_first(x, y), brute.plus_last(x, y));
                        }
                    }
                    ++configs;
                }
    EXPECT_EQ(configs, 9 * 8 * 7 * 6);
}

TEST(QuadConfig, MembershipPredicatesAgreeWithBruteForce) {
    const auto& s = small_slopes();
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        std::array<oracle::Frac, 4> q;
        std::vector<oracle::Frac> pool = s;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::copy_n(pool.begin(), 4, q.begin());
        const oracle::BruteLattice brute(q);
        const auto cfg = build_quad_config({to_rat(q[0]), to_rat(q[1]), to_rat(q[2]), to_rat(q[3])});
        const std::int64_t P = brute.period();
        for (std::int64_t x = 0; x < P; x += std::max<std::int64_t>(1, P / 7)) {
            for (std::int64_t y = 0; y < P; y += std::max<std::int64_t>(1, P / 7)) {
                const QVec n = cfg.point(x, y);
                const auto bn = brute.point(x, y);
                for (int i = 0; i < 4; ++i) ASSERT_EQ(n[i], Rational(bn[i].p, bn[i].q));
                ASSERT_TRUE(in_lambda(cfg, n));
                ASSERT_EQ(in_lambda_plus(cfg, n), brute.plus_first(x, y));
                ASSERT_EQ(in_lambda_plus_via_last(cfg, n), brute.plus_last(x, y));
            }
        }
    }
}

TEST(QuadraticForm, IntegerOnLambdaPlusAndEven) {
    const auto cfg = build_quad_config(R4(0, 1, 2, 3));
    EXPECT_EQ(quadratic_Q_exact(cfg, {0, 0, 0, 0}), Rational(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-20, 20);
    int found = 0;
    while (found < 50) {
        const QVec n = cfg.point(d(rng), d(rng));
        if (!in_lambda_plus(cfg, n)) continue;
        const Rational q = quadratic_Q_exact(cfg, n);
        EXPECT_EQ(boost::multiprecision::denominator(q), 1);
        QVec m;
        for (int i = 0; i < 4; ++i) m[i] = -n[i];
        EXPECT_EQ(quadratic_Q_exact(cfg, m), q);
        ++found;
    }
    EXPECT_THROW(quadratic_Q(cfg, {1.0, 0.0, 0.0, 0.0}), EvalError);
}

TEST(Cone, WitnessAntipodeAndPositivity) {
    const auto& s = small_slopes();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    int with_cone = 0;
    for (int k = 0; k < 300; ++k) {
        std::vector<oracle::Frac> pool = s;
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::array<Rational, 4> sl{to_rat(pool[0]), to_rat(pool[1]), to_rat(pool[2]), to_rat(pool[3])};
        const auto cfg = build_quad_config(sl);
        if (!cfg.cone) continue;
        ++with_cone;
        RVec w, mw;
        for (int i = 0; i < 4; ++i) {
            w[i] = to_double(cfg.cone->witness[i]);
            mw[i] = -w[i];
        }
        EXPECT_EQ(cone_membership(cfg, w), ConeSide::InPlus);
        EXPECT_EQ(cone_membership(cfg, mw), ConeSide::InMinus);
        for (int j = 0; j < 20; ++j) {
            const RVec x = cfg.point_real(u(rng), u(rng));
            RVec mx;
            for (int i = 0; i < 4; ++i) mx[i] = -x[i];
            const ConeSide side = cone_membership(cfg, x);
            if (side == ConeSide::Outside) {
                EXPECT_EQ(cone_membership(cfg, mx), ConeSide::Outside);
                continue;
            }
            EXPECT_GT(quadratic_Q(cfg, x), 0.0);
            EXPECT_EQ(cone_membership(cfg, mx), side == ConeSide::InPlus ? ConeSide::InMinus : ConeSide::InPlus);
        }
    }
    EXPECT_GT(with_cone, 50);
}

TEST(Cone, BoundaryGuard) {
    const auto cfg = build_quad_config(R4(0, 2, 1, 3));
    ASSERT_TRUE(cfg.cone);
    RVec ray;
    for (int i = 0; i < 4; ++i) ray[i] = to_double(cfg.cone->rays[0][i]);
    try {
        cone_membership(cfg, ray);
        FAIL();
    } catch (const EvalError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundaryProximity);
    }
}

TEST(Cone, StandardTableFor2345) {
    // Lines 2..5 of the five-line configuration with slopes (0, 2, -1, 1, 3).
    const auto cfg = build_quad_config(R4(2, -1, 1, 3));
    const std::array<int, 4> table{1, 1, -1, 1};
    ASSERT_TRUE(cfg.cone);
    RVec x;
    for (int i = 0; i < 4; ++i) x[i] = to_double(cfg.cone->witness[i]);
    if (x[0] < 0) {
        for (double& v : x) v = -v;
    }
    for (int i = 0; i < 4; ++i) ASSERT_GT(x[i] * table[i], 0.0);
    EXPECT_EQ(cone_membership(cfg, x, table), ConeSide::InPlus);
    RVec mx;
    for (int i = 0; i < 4; ++i) mx[i] = -x[i];
    EXPECT_EQ(cone_membership(cfg, mx, table), ConeSide::InMinus);
    EXPECT_THROW(cone_membership(cfg, x, {1, 1, 1, 1}), EvalError);
}

TEST(ShiftVector, TelescopesAndLiesOnPlane) {
    const auto sl = R4(0, 1, 2, 3);
    const RVec zero = shift_vector({0, 0, 0, 0}, sl);
    for (double v : zero) EXPECT_EQ(v, 0.0);
    const RVec v = shift_vector({0, 1, 0, 1}, sl);
    EXPECT_NEAR(v[0] + v[1] + v[2] + v[3], 0.0, 1e-14);
    EXPECT_NEAR(0 * v[0] + 1 * v[1] + 2 * v[2] + 3 * v[3], 0.0, 1e-14);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto sl2 = R4(Rational(1, 2), Rational(-1, 3), 2, Rational(2, 3));
    for (int k = 0; k < 20; ++k) {
        const RVec w = shift_vector({u(rng), u(rng), u(rng), u(rng)}, sl2);
        double s = 0.0, ls = 0.0;
        for (int i = 0; i < 4; ++i) {
            s += w[i];
            ls += to_double(sl2[i]) * w[i];
        }
        EXPECT_NEAR(s, 0.0, 1e-13);
        EXPECT_NEAR(ls, 0.0, 1e-13);
    }
}
