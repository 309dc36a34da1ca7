#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tomo/bodies.hpp"

using namespace tomo;

TEST(Radial, Catalog)
{
    const auto ball = make_body("ball:r=1", 3);
    const auto ell = make_body("ellipsoid:a=1,2,3", 3);
    const auto flat = make_body("pball:eps=0,d=4", 5);
    const auto unit5 = make_body("ball", 5);
    for (const auto& x : random_directions(3, 20, 1)) EXPECT_EQ(ball.radial(x), 1.0);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(ell.radial(Direction::axis(3, i)), i + 1.0, 1e-15);
    for (const auto& x : random_directions(5, 20, 2)) EXPECT_DOUBLE_EQ(flat.radial(x), unit5.radial(x));
}

TEST(Radial, EvenForEveryKind)
{
    for (const char* spec : {"ball:r=1.7", "ellipsoid:a=1,1.5,2,0.7", "lp:p=1.5", "lp:p=0.6", "pball:eps=0.4,d=2",
                             "pball:eps=-0.3,d=6,axis=2"}) {
        const auto b = make_body(spec, 4);
        for (const auto& x : random_directions(4, 30, 3)) EXPECT_EQ(b.radial(x), b.radial(-x)) << spec;
    }
}

TEST(Radial, WithinBounds)
{
    for (const char* spec : {"ellipsoid:a=1,1.5,2,0.7", "lp:p=1.5", "lp:p=0.6", "pball:eps=0.9,d=4"}) {
        const auto b = make_body(spec, 4);
        for (const auto& x : random_directions(4, 500, 4)) {
            EXPECT_LE(b.r_min(), b.radial(x)) << spec;
            EXPECT_GE(b.r_max(), b.radial(x)) << spec;
        }
    }
}

TEST(Radial, PerturbedBallFormula)
{
    const auto b = make_body("pball:eps=0.3,d=4,axis=2", 5);
    for (const auto& x : random_directions(5, 20, 5))
        EXPECT_NEAR(b.radial(x), 1.0 + 0.3 * oracle::legendre(5, 4, x[1]), 1e-14);
}

TEST(Radial, LpFormula)
{
    const auto b = make_body("lp:p=1", 3);
    EXPECT_NEAR(b.radial(Direction::normalized(VecN{1.0, 1.0, 1.0})), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_FALSE(b.smooth());
    EXPECT_FALSE(b.note().empty());
    EXPECT_TRUE(make_body("lp:p=4", 3).smooth());
    EXPECT_TRUE(b.convex());
    EXPECT_FALSE(make_body("lp:p=0.7", 3).convex());
}

TEST(ZonalLegendre, MatchesGegenbauer)
{
    for (int n = 3; n <= 8; ++n)
        for (int d : {0, 1, 2, 4, 6})
            for (double x : {-1.0, -0.7, -0.2, 0.0, 0.35, 0.9, 1.0})
                EXPECT_NEAR(zonal_legendre(n, d, x), oracle::legendre(n, d, x), 1e-13) << n << " " << d << " " << x;
}

TEST(Contains, Examples)
{
    const auto ball = make_body("ball:r=1", 3);
    EXPECT_TRUE(contains(ball, VecN{0.5, 0.0, 0.0}));
    EXPECT_FALSE(contains(ball, VecN{1.1, 0.0, 0.0}));
    EXPECT_TRUE(contains(make_body("ellipsoid:a=1,2,3", 3), VecN{0.0, 0.0, 2.9}));
    EXPECT_FALSE(contains(make_body("ellipsoid:a=1,2,3", 3), VecN{0.0, 2.1, 0.0}));
    EXPECT_TRUE(contains(ball, VecN{0.0, 0.0, 0.0}));
    EXPECT_THROW(contains(ball, VecN{0.0, 0.0}), ArgumentError);
}

TEST(Volume, ClosedForms)
{
    EXPECT_NEAR(volume(make_body("ball:r=1", 3), sphere_rule(2, 8)), 4.0 * oracle::pi / 3.0, 1e-8);
    EXPECT_NEAR(volume(make_body("ball:r=2", 4), sphere_rule(3, 6)), 8.0 * oracle::pi * oracle::pi, 1e-6);
    EXPECT_NEAR(volume(make_body("ellipsoid:a=1,2,3", 3), sphere_rule(2, 40)), 8.0 * oracle::pi, 1e-6);
    EXPECT_THROW(volume(make_body("ball", 3), sphere_rule(3, 2)), ArgumentError);
}

TEST(Volume, MonteCarloCrossCheck)
{
    const auto ell = make_body("ellipsoid:a=1,2,3", 3);
    const auto mc = oracle::monte_carlo_volume(
        3, 3.0, [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1] / 4 + x[2] * x[2] / 9 <= 1.0; },
        400000, 11);
    EXPECT_NEAR(volume(ell, sphere_rule(2, 40)), mc.value, 4.0 * mc.sigma);

    const auto star = make_body("pball:eps=0.6,d=4", 4);
    const auto mc2 = oracle::monte_carlo_volume(
        4, star.r_max(),
        [&](const std::vector<double>& x) { return star.contains(VecN::from(x)); }, 400000, 12);
    EXPECT_NEAR(volume(star, sphere_rule(3, 10)), mc2.value, 4.0 * mc2.sigma);
}

TEST(Volume, ZonalQuadratureCrossCheck)
{
    const auto b = make_body("pball:eps=-0.5,d=6", 5);
    const double ref = oracle::zonal_volume(5, [](double c) { return 1.0 - 0.5 * oracle::legendre(5, 6, c); });
    // rho^5 is a degree-30 polynomial in <x, e_5>; level 16 integrates it exactly
    EXPECT_NEAR(volume(b, sphere_rule(4, 16)), ref, 1e-10 * ref);
    EXPECT_GT(std::abs(volume(b, sphere_rule(4, 10)) - ref), 1e-7);
}

TEST(Volume, ScalesWithRadius)
{
    for (int n = 3; n <= 6; ++n) {
        const auto rule = sphere_rule(n - 1, 6);
        const double v1 = volume(make_body("pball:eps=0.2,d=2", n), rule);
        const double v2 = volume(make_body("pball:eps=0.2,d=2,r=1.5", n), rule);
        EXPECT_NEAR(v2, std::pow(1.5, n) * v1, 1e-10 * v2);
    }
}

TEST(AnalyticSections, Examples)
{
    EXPECT_NEAR(*analytic_sections(make_body("ball", 3), Direction::axis(3, 0), 0.0), oracle::pi, 1e-14);
    EXPECT_NEAR(*analytic_sections(make_body("ball", 4), Direction::axis(4, 1), 0.0), 4.0 * oracle::pi / 3.0, 1e-14);
    EXPECT_NEAR(*analytic_sections(make_body("ellipsoid:a=1,1,2", 3), Direction::axis(3, 2), 0.0), oracle::pi, 1e-14);
    EXPECT_EQ(*analytic_sections(make_body("ball", 3), Direction::axis(3, 0), 1.5), 0.0);
    EXPECT_FALSE(analytic_sections(make_body("pball:eps=0.1,d=2", 3), Direction::axis(3, 0), 0.0).has_value());
    EXPECT_FALSE(analytic_sections(make_body("lp:p=3", 3), Direction::axis(3, 0), 0.0).has_value());
}

TEST(AnalyticSections, EllipsoidMatchesOracle)
{
    const std::vector<double> a{1.0, 1.3, 1.7, 0.8};
    const auto b = make_body("ellipsoid:a=1,1.3,1.7,0.8", 4);
    for (const auto& xi : random_directions(4, 10, 9))
        for (double t : {0.0, 0.3, 0.7})
            EXPECT_NEAR(*analytic_sections(b, xi, t), oracle::ellipsoid_section(a, xi.vec().to_vector(), t), 1e-13);
}

TEST(BodySpec, ParseAndPrint)
{
    EXPECT_EQ(to_string(parse_body_spec("ball:r=1")), "ball:r=1");
    EXPECT_EQ(to_string(parse_body_spec("ball")), "ball:r=1");
    EXPECT_EQ(to_string(parse_body_spec("ellipsoid:a=1,2,3")), "ellipsoid:a=1,2,3");
    EXPECT_EQ(to_string(parse_body_spec("lp:p=1.5")), "lp:p=1.5");
    EXPECT_EQ(to_string(parse_body_spec("pball:eps=0.3,d=4,axis=last")), "pball:eps=0.3,d=4,axis=last");
    EXPECT_EQ(to_string(parse_body_spec("pball:eps=-0.95,d=4,r=0.991525")), "pball:eps=-0.95,d=4,axis=last,r=0.991525");
    const auto pb = std::get<PerturbedBall>(parse_body_spec("pball:eps=0.3,d=6,axis=2"));
    EXPECT_EQ(pb.axis, 1);
    EXPECT_EQ(pb.degree, 6);
    EXPECT_EQ(std::get<PerturbedBall>(parse_body_spec("pball:eps=0.3,axis=first")).axis, 0);
}

TEST(BodySpec, Errors)
{
    EXPECT_THROW(parse_body_spec("cube:s=1"), ArgumentError);
    EXPECT_THROW(parse_body_spec("ball:r=abc"), ArgumentError);
    EXPECT_THROW(parse_body_spec("ball:q=1"), ArgumentError);
    EXPECT_THROW(parse_body_spec("lp"), ArgumentError);
    EXPECT_THROW(parse_body_spec("pball:d=4"), ArgumentError);
    EXPECT_THROW(parse_body_spec("pball:eps=0.1,d=2.5"), ArgumentError);
    EXPECT_THROW(parse_body_spec("ellipsoid:1,2"), ArgumentError);
    EXPECT_THROW(parse_body_spec("ellipsoid:a="), ArgumentError);
}

TEST(StarBody, Validation)
{
    EXPECT_THROW(make_body("ellipsoid:a=1,2", 3), ArgumentError);
    EXPECT_THROW(make_body("ellipsoid:a=1,0,2", 3), ArgumentError);
    EXPECT_THROW(make_body("ball:r=-1", 3), ArgumentError);
    EXPECT_THROW(make_body("lp:p=0.4", 3), ArgumentError);
    EXPECT_THROW(make_body("pball:eps=0.3,d=3", 3), ArgumentError);
    EXPECT_THROW(make_body("pball:eps=0.96,d=2", 3), ArgumentError);
    EXPECT_THROW(make_body("pball:eps=0.3,d=2,axis=5", 4), ArgumentError);
    EXPECT_THROW(make_body("ball", 2), ArgumentError);
    EXPECT_THROW(make_body("ball", 9), ArgumentError);
    EXPECT_NO_THROW(make_body("pball:eps=-0.95,d=6", 8));
    EXPECT_THROW(make_body("ball", 3).radial(Direction::axis(4, 0)), ArgumentError);
}
