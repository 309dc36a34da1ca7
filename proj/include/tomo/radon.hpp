#pragma once

// Spherical Radon (Funk) transform Rf(xi) = integral of f over S^{n-1} cap xi^perp,
// and the slice identity that links R(xi -> A_xi(t)) to the chord profile.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "tomo/bodies.hpp"
#include "tomo/errors.hpp"
#include "tomo/geom.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/rules.hpp"
#include "tomo/sections.hpp"

namespace tomo {

struct SphereFunction {
    int dim = 0;
    std::function<double(const VecN&)> eval;
    bool even = false; ///< f(x) = f(-x); the transform then visits one node of each antipodal pair
};

/// Integrates fn over the rule carried onto xi^perp; `even` halves the work.
template <class F>
double radon_apply(F&& fn, const Direction& xi, const SphereRule& rule, bool even)
{
    if (rule.d != xi.dim() - 2) throw ArgumentError("radon: rule must live on S^{n-2}");
    const auto frame = orthonormal_complement(xi);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        if (even && rule.antipode[i] < i) continue;
        const double w = even ? 2.0 * rule.weights[i] : rule.weights[i];
        s += w * fn(frame.embed(rule.nodes[i]));
    }
    return s;
}

inline double radon(const SphereFunction& f, const Direction& xi, const SphereRule& rule)
{
    if (f.dim != xi.dim()) throw ArgumentError("radon: dimension mismatch");
    return radon_apply(f.eval, xi, rule, f.even);
}

inline std::vector<double> radon_field(const SphereFunction& f, const std::vector<Direction>& grid,
                                       const SphereRule& rule)
{
    std::vector<double> out;
    out.reserve(grid.size());
    for (const auto& xi : grid) out.push_back(radon(f, xi, rule));
    return out;
}

/// Radial function of the projection of K onto e^perp in direction u, with the
/// e-coordinate of a boundary point of K that projects onto it.
struct ProjectionExtent {
    double radius;
    double height;
};

inline ProjectionExtent projection_extent(const StarBody& body, const Direction& e, const VecN& u)
{
    auto g = [&](double a) {
        const VecN v = std::cos(a) * u + std::sin(a) * e.vec();
        return body.radial_unit(v) * std::cos(a);
    };
    constexpr int samples = 64;
    const double half = 0.5 * std::numbers::pi;
    int best = 0;
    double gbest = -1.0;
    for (int i = 0; i < samples; ++i) {
        const double a = -half + (i + 0.5) * (2.0 * half / samples);
        const double ga = g(a);
        if (ga > gbest) {
            gbest = ga;
            best = i;
        }
    }
    // golden section on the bracketing cell pair
    double lo = -half + std::max(0, best - 1) * (2.0 * half / samples);
    double hi = -half + std::min(samples, best + 2) * (2.0 * half / samples);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    while (hi - lo > 1e-12) {
        if (g1 < g2) {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = g(x1);
        }
    }
    const double a = 0.5 * (lo + hi);
    const double r = body.radial_unit(std::cos(a) * u + std::sin(a) * e.vec());
    return {r * std::cos(a), r * std::sin(a)};
}

struct SliceSides {
    double lhs; ///< R(xi -> A_xi(t))(e)
    double rhs; ///< s_{n-3} * integral_t^inf r (r^2 - t^2)^{(n-4)/2} Phi(r) dr
};

/// Both sides of the slice identity, each by quadrature.
///
/// The right side is evaluated with the order of the u-average and the r-integral
/// swapped, using r = sqrt(t^2 + x^2) and x = X(u) sin(theta), which removes the
/// square-root behaviour of the chord length at the edge of the projection.
inline SliceSides slice_identity_sides(const StarBody& body, const Direction& e, double t, const RuleBook& rules,
                                       int radial_nodes = 48)
{
    const int n = body.dim();
    if (e.dim() != n) throw ArgumentError("slice identity: dimension mismatch");
    if (n < 4) throw UnsupportedError("slice identity is evaluated for n >= 4 only");
    if (t < 0.0) throw ArgumentError("slice identity: t must be non-negative");
    const int scan = rules.config().scan_points;

    const double lhs = radon_apply(
        [&](const VecN& v) { return SectionEvaluator(body, Direction::normalized(v), rules).area(t); }, e,
        rules.radon(), true);

    const auto theta = gauss_rule(radial_nodes, 0.0, 0.5 * std::numbers::pi);
    const double s_nm3 = sphere_area(n - 3);
    const double rhs = s_nm3 * radon_apply(
                                   [&](const VecN& u) {
                                       const auto ext = projection_extent(body, e, u);
                                       if (ext.radius <= t) return 0.0;
                                       const double X = std::sqrt(ext.radius * ext.radius - t * t);
                                       return theta.integrate([&](double th) {
                                           const double x = X * std::sin(th);
                                           const double r = std::sqrt(t * t + x * x);
                                           const double hint = ext.height * r / ext.radius;
                                           const double phi = chord_length(body, e, r * u, scan, hint);
                                           return std::pow(x, n - 3) * phi * X * std::cos(th);
                                       });
                                   },
                                   e, rules.radon(), false);
    return {lhs, rhs};
}

inline double slice_identity_residual(const StarBody& body, const Direction& e, double t, const RuleBook& rules)
{
    const auto s = slice_identity_sides(body, e, t, rules);
    return std::abs(s.lhs - s.rhs);
}

} // namespace tomo
