#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tomo/sections.hpp"

using namespace tomo;

namespace {

RuleBook book(int n, int section_level, int support_level = 4)
{
    RuleConfig c = RuleConfig::defaults(n);
    c.section_level = section_level;
    c.radon_level = section_level;
    c.support_level = support_level;
    return RuleBook(n, c);
}

} // namespace

TEST(SectionArea, BallExample)
{
    const auto rules = book(3, 8);
    EXPECT_NEAR(section_area(make_body("ball", 3), Direction::axis(3, 2), 0.5, rules), 0.75 * oracle::pi, 1e-7);
}

TEST(SectionArea, EllipsoidMatchesClosedForm)
{
    const auto rules = book(3, 16);
    const auto b = make_body("ellipsoid:a=1,1,2", 3);
    const auto xi = Direction::axis(3, 2);
    EXPECT_NEAR(section_area(b, xi, 1.0, rules), *analytic_sections(b, xi, 1.0), 1e-6);
    EXPECT_NEAR(section_area(b, xi, 1.0, rules), oracle::ellipsoid_section({1, 1, 2}, {0, 0, 1}, 1.0), 1e-6);
}

TEST(SectionArea, VanishesBeyondSupport)
{
    const auto rules = book(4, 4);
    for (const char* spec : {"ball:r=1", "ellipsoid:a=1,2,1.5,1", "pball:eps=0.5,d=4", "lp:p=0.8"}) {
        const auto b = make_body(spec, 4);
        const SectionEvaluator eval(b, Direction::normalized(VecN{1, 2, 0, -1}), rules);
        EXPECT_EQ(eval.area(2.0 * b.r_max()), 0.0) << spec;
        EXPECT_EQ(eval.area(eval.support()), 0.0) << spec;
        EXPECT_GT(eval.area(0.9 * eval.support()), 0.0) << spec;
    }
}

TEST(SectionArea, NegativeOffsetRejected)
{
    EXPECT_THROW(section_area(make_body("ball", 3), Direction::axis(3, 0), -0.1, book(3, 4)), ArgumentError);
}

TEST(SectionArea, AgreesWithClosedFormOnGrid)
{
    for (int n = 3; n <= 5; ++n) {
        const auto rules = book(n, n == 3 ? 24 : n == 4 ? 14 : 9);
        std::vector<double> a;
        std::string spec = "ellipsoid:a=";
        for (int i = 0; i < n; ++i) {
            a.push_back(1.0 + 0.15 * i);
            spec += (i ? "," : "") + std::to_string(a.back());
        }
        const auto b = make_body(spec, n);
        for (const auto& xi : random_directions(n, 4, 20 + n)) {
            const SectionEvaluator eval(b, xi, rules);
            for (double f : {0.0, 0.3, 0.6, 0.9}) {
                const double t = f * eval.support();
                const double ref = oracle::ellipsoid_section(a, xi.vec().to_vector(), t);
                EXPECT_NEAR(eval.area(t), ref, 1e-6 * oracle::ellipsoid_section(a, xi.vec().to_vector(), 0.0))
                    << n << " " << f;
            }
        }
    }
}

TEST(SectionArea, CentralSectionPolarFormula)
{
    const auto reference = [](const StarBody& b, const Direction& xi, int level) {
        const auto sub = embed_rule(sphere_rule(2, level), orthonormal_complement(xi));
        return sub.integrate([&](const VecN& u) { return std::pow(b.radial_unit(u), 3); }) / 3.0;
    };
    // smooth bodies: level 16 already matches a level-40 polar sum
    for (const char* spec : {"ellipsoid:a=1,1.4,0.8,1.2", "pball:eps=0.6,d=4"}) {
        const auto b = make_body(spec, 4);
        for (const auto& xi : random_directions(4, 5, 31)) {
            const double ref = reference(b, xi, 40);
            EXPECT_NEAR(SectionEvaluator(b, xi, book(4, 16)).area(0.0), ref, 1e-6 * ref) << spec;
        }
    }
    // |x|^3 has limited smoothness; compare against the polar sum on the same nodes
    const auto lp = make_body("lp:p=3", 4);
    for (const auto& xi : random_directions(4, 5, 31)) {
        const double ref = reference(lp, xi, 12);
        EXPECT_NEAR(SectionEvaluator(lp, xi, book(4, 12)).area(0.0), ref, 1e-9 * ref);
    }
}

TEST(SectionArea, ZonalCentralSectionOracle)
{
    const auto rules = book(5, 9, 6);
    const auto b = make_body("pball:eps=-0.9,d=4", 5);
    for (double c : {0.0, 0.3, 0.8, 1.0}) {
        const auto xi = Direction::normalized(VecN{std::sqrt(1 - c * c), 0, 0, 0, c});
        const double ref =
            oracle::zonal_central_section(5, [](double x) { return 1.0 - 0.9 * oracle::legendre(5, 4, x); }, c);
        EXPECT_NEAR(SectionEvaluator(b, xi, rules).area(0.0), ref, 1e-10 * ref) << c;
    }
}

TEST(SectionArea, NonConvexCrossPolytopeStar)
{
    // |x|^p + |y|^p + |z|^p <= 1 with p = 1/2; the slice x = t is the same region scaled by (1 - sqrt t)^2,
    // and the p = 1/2 region in the plane has area 2/3. The circle rule lands on the four cusps, so
    // convergence is algebraic: roughly L^{-3/2}.
    const auto b = make_body("lp:p=0.5", 3);
    double prev = 1.0;
    for (int L : {64, 256, 1024}) {
        const auto rules = book(3, L);
        double worst = 0.0;
        for (double t : {0.0, 0.04, 0.25}) {
            const double c = (1.0 - std::sqrt(t)) * (1.0 - std::sqrt(t));
            const double ref = 2.0 / 3.0 * c * c;
            worst = std::max(worst, std::abs(SectionEvaluator(b, Direction::axis(3, 0), rules).area(t) - ref) / ref);
        }
        EXPECT_LT(worst, prev / 5.0) << L;
        prev = worst;
    }
    EXPECT_LT(prev, 2e-3);
}

TEST(SectionArea, EvenUnderReflection)
{
    const auto rules = book(4, 6);
    for (const char* spec : {"ellipsoid:a=1,1.4,0.8,1.2", "pball:eps=0.6,d=4", "lp:p=0.8"}) {
        const auto b = make_body(spec, 4);
        for (const auto& xi : random_directions(4, 3, 41)) {
            const SectionEvaluator plus(b, xi, rules), minus(b, -xi, rules);
            for (double f : {0.0, 0.2, 0.5, 0.8}) {
                const double t = f * plus.support();
                EXPECT_NEAR(plus.area(t), minus.area(t), 1e-9 * std::max(1.0, plus.area(0.0))) << spec;
            }
        }
    }
}

TEST(SupportBound, Examples)
{
    const auto seeds3 = sphere_rule(2, 6);
    EXPECT_GE(support_bound(make_body("ball:r=2", 3), Direction::axis(3, 0), seeds3), 2.0);
    EXPECT_LE(support_bound(make_body("ball:r=2", 3), Direction::axis(3, 0), seeds3), 2.0 * 1.02 + 1e-12);
    const auto ell = make_body("ellipsoid:a=1,2,3", 3);
    for (int i = 0; i < 3; ++i) EXPECT_GE(support_bound(ell, Direction::axis(3, i), seeds3), i + 1.0);
    const auto pb = make_body("pball:eps=0.3,d=2", 3);
    for (const auto& xi : random_directions(3, 10, 5)) {
        const double s = support_bound(pb, xi, seeds3);
        EXPECT_GE(s, 1.0 - 0.3);
        EXPECT_LE(s, 1.3 * 1.02);
    }
    EXPECT_THROW(support_bound(ell, Direction::axis(3, 0), sphere_rule(1, 4)), ArgumentError);
}

TEST(SupportPoint, EllipsoidWidth)
{
    const std::vector<double> a{1.0, 1.5, 2.0, 0.7};
    const auto b = make_body("ellipsoid:a=1,1.5,2,0.7", 4);
    for (const auto& xi : random_directions(4, 8, 6)) {
        const auto sp = support_point(b, xi, sphere_rule(3, 4));
        EXPECT_NEAR(sp.value, oracle::ellipsoid_width(a, xi.vec().to_vector()), 1e-12);
    }
}

TEST(Profile, BallFourDimensions)
{
    const auto rules = book(4, 6);
    const auto b = make_body("ball", 4);
    const auto p = profile(b, Direction::axis(4, 3), uniform_grid(0.05, 25), rules);
    for (std::size_t j = 0; j < p.ts.size(); ++j) {
        const double ref = oracle::ball_section(4, 1.0, p.ts[j]);
        EXPECT_NEAR(p.values[j], ref, 1e-6) << p.ts[j];
        if (p.ts[j] >= 1.0) EXPECT_EQ(p.values[j], 0.0);
    }
}

TEST(Profile, AnalyticSwitch)
{
    const auto rules = book(3, 6);
    const auto b = make_body("ellipsoid:a=1,1.2,1.4", 3);
    const auto xi = Direction::axis(3, 1);
    const auto p = profile(b, xi, uniform_grid(0.1, 5), rules, true);
    for (std::size_t j = 0; j < p.ts.size(); ++j) EXPECT_EQ(p.values[j], *analytic_sections(b, xi, p.ts[j]));
}

TEST(Profile, LevelDoublingConverges)
{
    const auto b = make_body("ellipsoid:a=1,1.3,1.7", 3);
    const auto xi = Direction::normalized(VecN{0.3, -0.5, 0.8});
    const auto coarse = profile(b, xi, uniform_grid(0.1, 15), book(3, 16));
    const auto fine = profile(b, xi, uniform_grid(0.1, 15), book(3, 32));
    for (std::size_t j = 0; j < coarse.ts.size(); ++j) EXPECT_NEAR(coarse.values[j], fine.values[j], 1e-6);
}

TEST(EvenDerivative, BallSecondDerivative)
{
    const auto rules = book(4, 8);
    const auto b = make_body("ball", 4);
    const SectionEvaluator eval(b, Direction::axis(4, 0), rules);
    const double h = eval.support() / 400.0;
    const auto p = profile(b, eval, uniform_grid(h, derivative_stencil_size(2)));
    EXPECT_NEAR(even_derivative_at_zero(p, 2).value, -4.0 * oracle::pi, 1e-4 * 4.0 * oracle::pi);
}

TEST(EvenDerivative, Monomials)
{
    SectionProfile flat{Direction::axis(3, 0), uniform_grid(0.1, 9), std::vector<double>(9, 2.5), 10.0};
    EXPECT_NEAR(even_derivative_at_zero(flat, 2).value, 0.0, 1e-10);

    SectionProfile quartic{Direction::axis(3, 0), uniform_grid(0.1, 9), {}, 10.0};
    for (double t : quartic.ts) quartic.values.push_back(t * t * t * t);
    EXPECT_NEAR(even_derivative_at_zero(quartic, 4).value, 24.0, 1e-6);
    EXPECT_NEAR(even_derivative_at_zero(quartic, 2).value, 0.0, 1e-8);

    SectionProfile sixth{Direction::axis(3, 0), uniform_grid(0.2, 9), {}, 10.0};
    for (double t : sixth.ts) sixth.values.push_back(std::pow(t, 6) - 3.0 * t * t);
    EXPECT_NEAR(even_derivative_at_zero(sixth, 6).value, 720.0, 1e-5);
    EXPECT_NEAR(even_derivative_at_zero(sixth, 2).value, -6.0, 1e-8);
}

TEST(EvenDerivative, ObservedOrderOnAnalyticBall)
{
    auto err = [](double h) {
        SectionProfile p{Direction::axis(6, 0), uniform_grid(h, derivative_stencil_size(4)), {}, 1.0};
        for (double t : p.ts) p.values.push_back(oracle::ball_section(6, 1.0, t));
        return std::abs(even_derivative_at_zero(p, 4).value - 24.0 * oracle::pi * oracle::pi);
    };
    const double e1 = err(0.08), e2 = err(0.04), e3 = err(0.02);
    EXPECT_GE(std::log2(e1 / e2), 2.0);
    EXPECT_GE(std::log2(e2 / e3), 2.0);
}

TEST(EvenDerivative, ResolutionErrors)
{
    SectionProfile short_p{Direction::axis(3, 0), uniform_grid(0.1, 4), std::vector<double>(4, 1.0), 10.0};
    EXPECT_THROW(even_derivative_at_zero(short_p, 4), ResolutionError);
    SectionProfile wide{Direction::axis(3, 0), uniform_grid(0.3, 9), std::vector<double>(9, 1.0), 1.0};
    EXPECT_THROW(even_derivative_at_zero(wide, 4), ResolutionError);
    SectionProfile uneven{Direction::axis(3, 0), {0.0, 0.1, 0.25, 0.3, 0.4}, std::vector<double>(5, 1.0), 10.0};
    EXPECT_THROW(even_derivative_at_zero(uneven, 2), ResolutionError);
    EXPECT_THROW(even_derivative_at_zero(short_p, 3), ArgumentError);
}

TEST(ChordProfile, BallAtOrigin)
{
    const auto c3 = chord_profile(make_body("ball", 3), Direction::axis(3, 2), sphere_rule(1, 8), {0.0, 0.5, 1.2});
    EXPECT_NEAR(c3.values[0], 4.0 * oracle::pi, 1e-12);
    EXPECT_NEAR(c3.values[1], 2.0 * oracle::pi * 2.0 * std::sqrt(0.75), 1e-12);
    EXPECT_EQ(c3.values[2], 0.0);
    const auto c4 = chord_profile(make_body("ball", 4), Direction::axis(4, 0), sphere_rule(2, 6), {0.0});
    EXPECT_NEAR(c4.values[0], 8.0 * oracle::pi, 1e-12);
    EXPECT_THROW(chord_profile(make_body("ball", 4), Direction::axis(4, 0), sphere_rule(1, 6), {0.0}), ArgumentError);
}

TEST(ChordLength, EllipsoidAxis)
{
    const auto b = make_body("ellipsoid:a=1,2,3", 3);
    EXPECT_NEAR(chord_length(b, Direction::axis(3, 2), VecN{0.5, 0.0, 0.0}), 2.0 * 3.0 * std::sqrt(0.75), 1e-12);
    EXPECT_EQ(chord_length(b, Direction::axis(3, 2), VecN{5.0, 0.0, 0.0}), 0.0);
}
