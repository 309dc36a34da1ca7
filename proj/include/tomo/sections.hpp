#pragma once

// Parallel section function A_xi(t) = Vol_{n-1}(K cap (t xi + xi^perp)),
// its even derivatives at t = 0, and chord profiles along a fixed axis.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/tools/toms748_solve.hpp>

#include "tomo/bodies.hpp"
#include "tomo/errors.hpp"
#include "tomo/geom.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/rules.hpp"

namespace tomo {

namespace detail {

// Root of the boundary gap on a bracket [a, b] with ga, gb of opposite sign.
template <class Gap>
double refine_crossing(Gap&& gap, double a, double b, double ga, double gb)
{
    if (ga == 0.0) return a;
    if (gb == 0.0) return b;
    std::uintmax_t iters = 60;
    const auto r = boost::math::tools::toms748_solve(gap, a, b, ga, gb,
                                                     boost::math::tools::eps_tolerance<double>(), iters);
    return 0.5 * (r.first + r.second);
}

} // namespace detail

/// Calls emit(lo, hi) for every maximal s-interval of [s0, s1] with origin + s*dir in K.
/// Membership is sampled on `scan` uniform steps; each crossing is refined to machine
/// precision. `inside_hint`, when given, is an s known to be inside and is added to the scan.
template <class Emit>
void line_intervals(const StarBody& body, const VecN& origin, const VecN& dir, double s0, double s1, int scan,
                    Emit&& emit, std::optional<double> inside_hint = std::nullopt)
{
    if (!(s1 > s0)) return;
    auto gap = [&](double s) { return body.boundary_gap(origin + s * dir); };
    const double step = (s1 - s0) / scan;

    double prev_s = s0;
    double prev_g = gap(s0);
    bool inside = prev_g <= 0.0;
    double start = s0;
    auto visit = [&](double s) {
        const double g = gap(s);
        const bool in = g <= 0.0;
        if (in != inside) {
            const double root = detail::refine_crossing(gap, prev_s, s, prev_g, g);
            if (in) start = root;
            else emit(start, root);
            inside = in;
        }
        prev_s = s;
        prev_g = g;
    };
    const bool use_hint = inside_hint && *inside_hint > s0 && *inside_hint < s1;
    for (int i = 1; i <= scan; ++i) {
        const double s = i == scan ? s1 : s0 + i * step;
        if (use_hint && *inside_hint > prev_s && *inside_hint < s) visit(*inside_hint);
        visit(s);
    }
    if (inside) emit(start, s1);
}

/// Upper bound for the support of A_xi: 1.02 * max of rho(v) max(<v,xi>, 0) over the rule
/// nodes and xi itself.
inline double support_bound(const StarBody& body, const Direction& xi, const SphereRule& rule)
{
    if (rule.d != body.dim() - 1) throw ArgumentError("support_bound: rule must live on S^{n-1}");
    double best = body.radial(xi);
    for (const auto& v : rule.nodes) {
        const double c = dot(xi, v);
        if (c > 0.0) best = std::max(best, body.radial_unit(v) * c);
    }
    return 1.02 * best;
}

/// Support function h_K(xi) = max_v rho(v) <v, xi> together with a maximizing direction.
struct SupportPoint {
    double value;
    Direction apex;
};

/// Seeds from the rule nodes and xi itself, then a compass search on the sphere.
inline SupportPoint support_point(const StarBody& body, const Direction& xi, const SphereRule& seeds)
{
    const int n = body.dim();
    auto f = [&](const VecN& v) { return body.radial_unit(v) * dot(xi, v); };
    VecN best = xi.vec();
    double fbest = f(best);
    for (const auto& v : seeds.nodes) {
        const double fv = f(v);
        if (fv > fbest) {
            fbest = fv;
            best = v;
        }
    }
    double step = 0.5 * std::numbers::pi / std::max(2, seeds.level);
    while (step > 1e-10) {
        bool moved = false;
        const auto frame = orthonormal_complement(Direction::normalized(best));
        for (const auto& b : frame.basis) {
            for (double sgn : {1.0, -1.0}) {
                VecN cand = best + (sgn * step) * b;
                cand *= 1.0 / norm(cand);
                const double fc = f(cand);
                if (fc > fbest) {
                    fbest = fc;
                    best = cand;
                    moved = true;
                }
            }
        }
        if (!moved) step *= 0.5;
    }
    (void)n;
    return {fbest, Direction::normalized(best)};
}

/// Everything needed to evaluate t -> A_xi(t) repeatedly for one direction.
///
/// The polar integration over the section is centred at t * apex / <apex, xi>,
/// which lies on the segment from the origin to the support point and hence in
/// K cap (t xi + xi^perp) for 0 <= t <= h_K(xi).
class SectionEvaluator {
public:
    SectionEvaluator(const StarBody& body, const Direction& xi, const SphereRule& rule, const SphereRule& seeds,
                     int scan_points)
        : body_(&body), xi_(xi), scan_(scan_points)
    {
        const int n = body.dim();
        if (xi.dim() != n) throw ArgumentError("section: dimension mismatch");
        if (rule.d != n - 2) throw ArgumentError("section: rule must live on S^{n-2}");
        nodes_ = embed_rule(rule, orthonormal_complement(xi));
        const auto sp = support_point(body, xi, seeds);
        support_ = sp.value;
        center_dir_ = sp.apex.vec() * (1.0 / dot(xi, sp.apex));
        support_bound_ = tomo::support_bound(body, xi, seeds);
        support_bound_ = std::max(support_bound_, support_);
    }
    SectionEvaluator(const StarBody& body, const Direction& xi, const RuleBook& rules)
        : SectionEvaluator(body, xi, rules.section(), rules.support(), rules.config().scan_points)
    {
    }

    const Direction& xi() const noexcept { return xi_; }
    /// h_K(xi): A_xi(t) = 0 for t >= support().
    double support() const noexcept { return support_; }
    /// The 2%-inflated node maximum, never below support().
    double support_bound() const noexcept { return support_bound_; }

    double area(double t) const
    {
        t = std::abs(t);
        if (t >= support_) return 0.0;
        const int n = body_->dim();
        const VecN p = t * center_dir_;
        const double rmax2 = body_->r_max() * body_->r_max();
        const double p2 = dot(p, p);
        const double inv = 1.0 / (n - 1);
        double total = 0.0;
        const double gap_p = body_->boundary_gap(p);
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            const VecN& u = nodes_.nodes[i];
            const double pu = dot(p, u);
            const double smax = -pu + std::sqrt(std::max(0.0, pu * pu + rmax2 - p2));
            if (body_->convex() && gap_p < 0.0) {
                if (const auto exit = body_->exit_distance(p, u)) {
                    total += nodes_.weights[i] * std::pow(*exit, n - 1) * inv;
                    continue;
                }
                auto gap = [&](double s) { return body_->boundary_gap(p + s * u); };
                const double gmax = gap(smax);
                const double exit = gmax <= 0.0 ? smax : detail::refine_crossing(gap, 0.0, smax, gap_p, gmax);
                total += nodes_.weights[i] * std::pow(exit, n - 1) * inv;
                continue;
            }
            double acc = 0.0;
            line_intervals(*body_, p, u, 0.0, smax, scan_, [&](double lo, double hi) {
                acc += (std::pow(hi, n - 1) - std::pow(lo, n - 1)) * inv;
            });
            total += nodes_.weights[i] * acc;
        }
        return total;
    }

private:
    const StarBody* body_;
    Direction xi_;
    int scan_;
    SphereRule nodes_;
    VecN center_dir_;
    double support_ = 0.0;
    double support_bound_ = 0.0;
};

/// A_xi(t) by quadrature over directions u of xi^perp of the radial integral
/// of s^{n-2} over the chord set found by membership bracketing.
inline double section_area(const StarBody& body, const Direction& xi, double t, const RuleBook& rules)
{
    if (t < 0.0) throw ArgumentError("section_area: t must be non-negative");
    return SectionEvaluator(body, xi, rules).area(t);
}

inline double section_area(const StarBody& body, const Direction& xi, double t, const SphereRule& rule,
                           int scan_points = 32)
{
    if (t < 0.0) throw ArgumentError("section_area: t must be non-negative");
    const auto seeds = sphere_rule(body.dim() - 1, 4);
    return SectionEvaluator(body, xi, rule, seeds, scan_points).area(t);
}

struct SectionProfile {
    Direction xi;
    std::vector<double> ts;
    std::vector<double> values;
    double support = 0.0;
};

inline std::vector<double> uniform_grid(double step, int count)
{
    std::vector<double> ts(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) ts[static_cast<std::size_t>(j)] = j * step;
    return ts;
}

/// Samples A_xi on ts. With use_analytic, closed forms replace quadrature where they exist.
inline SectionProfile profile(const StarBody& body, const SectionEvaluator& eval, std::vector<double> ts,
                              bool use_analytic = false)
{
    SectionProfile p{eval.xi(), std::move(ts), {}, eval.support()};
    p.values.reserve(p.ts.size());
    for (double t : p.ts) {
        std::optional<double> v;
        if (use_analytic) v = analytic_sections(body, eval.xi(), t);
        p.values.push_back(v ? *v : eval.area(t));
    }
    return p;
}

inline SectionProfile profile(const StarBody& body, const Direction& xi, std::vector<double> ts,
                              const RuleBook& rules, bool use_analytic = false)
{
    return profile(body, SectionEvaluator(body, xi, rules), std::move(ts), use_analytic);
}

struct DerivativeEstimate {
    double value;
    double error;
};

namespace detail {

// Weights c_j with sum_j c_j f(j) = coefficient of x^k of the polynomial in x = t^2
// interpolating f at t = 0, 1, ..., m (unit spacing).
inline std::vector<double> even_interp_weights(int k, int m)
{
    Eigen::MatrixXd V(m + 1, m + 1);
    for (int j = 0; j <= m; ++j)
        for (int p = 0; p <= m; ++p) V(j, p) = std::pow(static_cast<double>(j * j), p);
    // coefficient vector = V^{-1} f, so the weights are row k of V^{-1}
    const Eigen::MatrixXd Vinv = V.fullPivLu().inverse();
    std::vector<double> w(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) w[static_cast<std::size_t>(j)] = Vinv(k, j);
    return w;
}

inline double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace detail

/// Number of uniform samples t_j = j h, j = 0..2m, needed for a derivative of this order.
inline int derivative_stencil_size(int order) { return 2 * (order / 2 + 1) + 1; }

/// A^{(2k)}(0) from samples t_j = j h of an even function: even-polynomial
/// interpolation (fourth order in h) at steps h and 2h, one Richardson level.
inline DerivativeEstimate even_derivative_at_zero(const SectionProfile& p, int order)
{
    if (order < 0 || order > 8 || order % 2 != 0)
        throw ArgumentError("even_derivative_at_zero: order must be even and at most 8");
    if (p.ts.empty() || p.ts.front() != 0.0 || p.values.size() != p.ts.size())
        throw ResolutionError("profile must start at t = 0");
    if (order == 0) return {p.values.front(), 0.0};
    const int k = order / 2;
    const int m = k + 1;
    const int need = 2 * m + 1;
    if (static_cast<int>(p.ts.size()) < need)
        throw ResolutionError("profile too coarse near 0 for derivative order " + std::to_string(order));
    const double h = p.ts[1];
    if (!(h > 0.0)) throw ResolutionError("profile grid must be increasing");
    for (int j = 0; j < need; ++j)
        if (std::abs(p.ts[static_cast<std::size_t>(j)] - j * h) > 1e-9 * h)
            throw ResolutionError("profile grid must be uniform near 0");
    if (2 * m * h >= p.support && p.support > 0.0)
        throw ResolutionError("derivative stencil reaches the end of the support");

    static const std::array<std::vector<double>, 5> weights = [] {
        std::array<std::vector<double>, 5> t;
        for (int j = 1; j <= 4; ++j) t[static_cast<std::size_t>(j)] = detail::even_interp_weights(j, j + 1);
        return t;
    }();
    const auto& w = weights[static_cast<std::size_t>(k)];
    double fine = 0.0, coarse = 0.0;
    for (int j = 0; j <= m; ++j) {
        fine += w[static_cast<std::size_t>(j)] * p.values[static_cast<std::size_t>(j)];
        coarse += w[static_cast<std::size_t>(j)] * p.values[static_cast<std::size_t>(2 * j)];
    }
    const double scale = detail::factorial(order);
    fine *= scale / std::pow(h, order);
    coarse *= scale / std::pow(2.0 * h, order);
    return {(16.0 * fine - coarse) / 15.0, std::abs(fine - coarse) / 15.0};
}

/// phi(y) = Vol_1(K cap (y + R e)).
inline double chord_length(const StarBody& body, const Direction& e, const VecN& y, int scan_points = 32,
                           std::optional<double> inside_hint = std::nullopt)
{
    const double rmax = body.r_max();
    const double y2 = dot(y, y);
    if (y2 >= rmax * rmax) return 0.0;
    const double z = std::sqrt(rmax * rmax - y2);
    double len = 0.0;
    line_intervals(body, y, e.vec(), -z, z, scan_points, [&](double lo, double hi) { len += hi - lo; },
                   inside_hint);
    return len;
}

struct ChordProfile {
    Direction e;
    std::vector<double> xs;
    std::vector<double> values; ///< Phi(x) = integral over S^{n-2} of phi(x u)
};

inline ChordProfile chord_profile(const StarBody& body, const Direction& e, const SphereRule& rule,
                                  std::vector<double> xs, int scan_points = 32)
{
    if (rule.d != body.dim() - 2) throw ArgumentError("chord_profile: rule must live on S^{n-2}");
    const auto sub = embed_rule(rule, orthonormal_complement(e));
    ChordProfile out{e, std::move(xs), {}};
    out.values.reserve(out.xs.size());
    for (double x : out.xs) {
        double acc = 0.0;
        for (std::size_t i = 0; i < sub.size(); ++i)
            acc += sub.weights[i] * chord_length(body, e, std::abs(x) * sub.nodes[i], scan_points);
        out.values.push_back(acc);
    }
    return out;
}

} // namespace tomo
