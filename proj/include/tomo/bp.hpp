#pragma once

// Busemann-Petty experiments: sign scans of R^{-1} rho_K and comparisons of
// central sections and volumes for pairs of bodies.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tomo/bodies.hpp"
#include "tomo/errors.hpp"
#include "tomo/inversion.hpp"
#include "tomo/rules.hpp"
#include "tomo/sections.hpp"

namespace tomo {

struct PositivityResult {
    double min_value;        ///< s_{n-2} * min over the grid of R^{-1} rho_K (1 for the unit ball)
    Direction argmin;
    InverseRadonField field;
};

/// Sign of R^{-1} rho_K over a direction grid; K is an intersection body only if it is non-negative.
/// Curvature positivity and smoothness of K are not checked here.
inline PositivityResult positivity_scan(const StarBody& body, const std::vector<Direction>& grid,
                                        const RuleBook& rules)
{
    auto field = inverse_radon(body, grid, rules, false);
    const double m = field.normalized_min();
    const Direction arg = field.grid[field.argmin];
    return {m, arg, std::move(field)};
}

/// R^{-1} rho_K(xi) = -A''_xi(0) / (16 pi^2) in R^4.
inline double n4_remark_value(const StarBody& body, const Direction& xi, const RuleBook& rules)
{
    if (body.dim() != 4) throw ArgumentError("n4_remark_value: requires n = 4");
    const SectionEvaluator eval(body, xi, rules);
    const double a2 = derivative_at_zero(eval, rules.config(), 2).value;
    return -a2 / (16.0 * std::numbers::pi * std::numbers::pi);
}

struct DominanceVerdict {
    bool holds = true;
    std::size_t violations = 0;
    double worst_margin = 0.0;   ///< min over the grid of A_L(0) - A_K(0)
    double margin_error = 0.0;   ///< estimated quadrature error of the margin
    std::vector<double> sections_k;
    std::vector<double> sections_l;
};

namespace detail {

inline double central_section(const StarBody& body, const Direction& xi, const SphereRule& rule)
{
    // at t = 0 every chord from the origin is [0, rho(u)]
    const auto nodes = embed_rule(rule, orthonormal_complement(xi));
    const int n = body.dim();
    return nodes.integrate([&](const VecN& u) { return std::pow(body.radial_unit(u), n - 1); }) / (n - 1);
}

// Error estimates compare against rules two levels finer.
inline RuleConfig finer(const RuleConfig& c)
{
    RuleConfig out = c;
    out.section_level = c.section_level + 2;
    out.support_level = c.support_level + 2;
    return out;
}

} // namespace detail

/// Checks A_{K,xi}(0) <= A_{L,xi}(0) (1 + 1e-9) on the grid.
inline DominanceVerdict section_dominance(const StarBody& k, const StarBody& l, const std::vector<Direction>& grid,
                                          const RuleBook& rules)
{
    if (k.dim() != l.dim()) throw ArgumentError("section_dominance: dimension mismatch");
    DominanceVerdict v;
    v.worst_margin = std::numeric_limits<double>::infinity();
    const auto fine_rule = sphere_rule(k.dim() - 2, detail::finer(rules.config()).section_level);
    for (const auto& xi : grid) {
        const double ak = SectionEvaluator(k, xi, rules).area(0.0);
        const double al = SectionEvaluator(l, xi, rules).area(0.0);
        v.sections_k.push_back(ak);
        v.sections_l.push_back(al);
        if (ak > al * (1.0 + 1e-9)) {
            v.holds = false;
            ++v.violations;
        }
        v.worst_margin = std::min(v.worst_margin, al - ak);
        const double ak_f = detail::central_section(k, xi, fine_rule);
        const double al_f = detail::central_section(l, xi, fine_rule);
        v.margin_error = std::max(v.margin_error, std::abs((al - ak) - (al_f - ak_f)));
    }
    return v;
}

struct BPReport {
    std::string body_k;
    std::string body_l;
    std::optional<double> min_inverse_l; ///< s_{n-2} min R^{-1} rho_L, if requested
    DominanceVerdict dominance;
    double volume_k = 0.0;
    double volume_l = 0.0;
    double volume_error = 0.0;
    std::string verdict; ///< consistent | counterexample-candidate | hypothesis-fails | inconclusive
};

/// Sections of K dominated by those of L, does Vol(K) <= Vol(L) follow?
inline BPReport bp_experiment(const StarBody& k, const StarBody& l, const std::vector<Direction>& grid,
                              const RuleBook& rules, bool scan_l = false)
{
    if (k.dim() != l.dim()) throw ArgumentError("bp_experiment: dimension mismatch");
    BPReport r;
    r.body_k = k.name();
    r.body_l = l.name();
    r.dominance = section_dominance(k, l, grid, rules);
    r.volume_k = volume(k, rules.support());
    r.volume_l = volume(l, rules.support());
    const auto fine = sphere_rule(k.dim() - 1, detail::finer(rules.config()).support_level);
    r.volume_error = std::abs(r.volume_k - volume(k, fine)) + std::abs(r.volume_l - volume(l, fine));
    if (scan_l) r.min_inverse_l = positivity_scan(l, grid, rules).min_value;

    const double vol_tol = 1e-9 * std::max(r.volume_k, r.volume_l);
    if (!r.dominance.holds) {
        r.verdict = "hypothesis-fails";
    } else if (r.volume_k <= r.volume_l + std::max(vol_tol, 3.0 * r.volume_error)) {
        r.verdict = "consistent";
    } else if (r.dominance.worst_margin > 3.0 * r.dominance.margin_error &&
               r.volume_k - r.volume_l > 3.0 * r.volume_error) {
        r.verdict = "counterexample-candidate";
    } else {
        r.verdict = "inconclusive";
    }
    return r;
}

struct ScanRow {
    double eps;
    double min_value;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::optional<double> first_negative; ///< smallest scanned eps with a negative minimum
};

/// Directions in the plane of the first coordinate axis and the perturbation axis,
/// covering the zonal variable <xi, axis> from 0 to 1.
inline std::vector<Direction> meridian_grid(int n, int count, int axis = -1)
{
    require_dim(n);
    const int ax = axis < 0 ? n - 1 : axis;
    const int other = ax == 0 ? 1 : 0;
    std::vector<Direction> out;
    for (int i = 0; i < count; ++i) {
        const double th = 0.5 * std::numbers::pi * i / std::max(1, count - 1);
        VecN v(n);
        v[ax] = std::cos(th);
        v[other] = std::sin(th);
        out.push_back(Direction::normalized(v));
    }
    return out;
}

/// Positivity scan over perturbed balls rho = 1 + eps P_d(<x, e_n>).
inline ScanResult perturbation_scan(int n, int degree, const std::vector<double>& eps_list,
                                    const std::vector<Direction>& grid, const RuleBook& rules)
{
    require_dim(n);
    for (double e : eps_list)
        if (!(std::abs(e) <= 0.95)) throw ArgumentError("perturbation_scan: eps outside the admissible range");
    ScanResult res;
    for (double e : eps_list) {
        const StarBody body(PerturbedBall{e, degree, -1, 1.0}, n);
        const double m = positivity_scan(body, grid, rules).min_value;
        res.rows.push_back({e, m});
        if (m < 0.0 && !res.first_negative) res.first_negative = e;
    }
    return res;
}

} // namespace tomo
