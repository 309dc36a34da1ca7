#pragma once

// Inversion of the spherical Radon transform of rho_K from the section function:
//
//   n even:  kappa_n rho_K = R( xi -> A_xi^{(n-2)}(0) )
//   n odd:   kappa_n rho_K = R( xi -> J(xi) ),
//            J(xi) = int_0^inf t^{1-n} ( A_xi(t) - sum_{2k <= n-3} A_xi^{(2k)}(0) t^{2k}/(2k)! ) dt
//
// with kappa_n = (-1)^{(n-2)/2} 2^n pi^{n-2}           (n even)
//      kappa_n = (-1)^{(n-1)/2} (2 pi)^{n-1} / (n-2)!  (n odd).

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tomo/bodies.hpp"
#include "tomo/errors.hpp"
#include "tomo/geom.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/radon.hpp"
#include "tomo/rules.hpp"
#include "tomo/sections.hpp"

namespace tomo {

struct InversionConstants {
    int n = 0;
    std::vector<double> a;              ///< a_k = (-1)^k binom((n-2)/2, k), leading terms
    std::optional<double> series_sum;   ///< S_n = sum_k a_k / (n-2-2k); odd n only
    double series_tail = 0.0;           ///< bound on |S_n - series_sum|
    long terms = 0;                     ///< series terms summed
    bool accelerated = false;           ///< Richardson extrapolation was needed
    double kappa = 0.0;
};

inline double theorem_scale(int n)
{
    constexpr double pi = std::numbers::pi;
    if (n % 2 == 0) {
        const double sign = ((n - 2) / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * std::pow(2.0, n) * std::pow(pi, n - 2);
    }
    const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(2.0 * pi, n - 1) / std::tgamma(static_cast<double>(n - 1));
}

/// Binomial-type coefficients by the running product a_k = -a_{k-1} ((n-2)/2 - k + 1) / k.
inline std::vector<double> binomial_coefficients(int n, int count)
{
    const double alpha = 0.5 * (n - 2);
    std::vector<double> a(static_cast<std::size_t>(count));
    double ak = 1.0;
    for (int k = 0; k < count; ++k) {
        if (k > 0) ak *= -(alpha - k + 1) / k;
        a[static_cast<std::size_t>(k)] = ak;
    }
    return a;
}

/// a_k, S_n and kappa_n. The series is summed until the tail estimate
/// |term| k / (n/2) drops below tol; past 10^6 terms the partial sums at
/// N, 2N, ..., 64N are Richardson-extrapolated in powers N^{-n/2-j}.
inline InversionConstants coefficients(int n, double tol = 1e-12, int report = 12)
{
    if (n < 3) throw ArgumentError("coefficients: n must be at least 3");
    InversionConstants c;
    c.n = n;
    c.kappa = theorem_scale(n);
    c.a = binomial_coefficients(n, std::max(report, n));
    if (n % 2 == 0) return c;

    constexpr long cap = 1'000'000;
    constexpr int levels = 6;
    const double alpha = 0.5 * (n - 2);
    const double p = 0.5 * n;
    std::vector<double> checkpoints;
    long next_check = cap >> levels;

    // Neumaier-compensated running sum
    double sum = 0.0, comp = 0.0;
    auto add = [&](double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    };
    double ak = 1.0;
    add(ak / (n - 2));
    long k = 1;
    for (; k <= cap; ++k) {
        ak *= -(alpha - k + 1) / k;
        const double term = ak / (n - 2 - 2 * k);
        add(term);
        if (k == next_check) {
            checkpoints.push_back(sum + comp);
            next_check *= 2;
        }
        if (std::abs(term) * k / p < tol) {
            c.series_sum = sum + comp;
            c.series_tail = std::abs(term) * k / p;
            c.terms = k + 1;
            return c;
        }
    }
    c.terms = cap + 1;
    c.accelerated = true;
    // Richardson table over checkpoints N_j = N_0 2^j
    const std::size_t m = checkpoints.size();
    std::vector<std::vector<double>> T(m);
    for (std::size_t j = 0; j < m; ++j) {
        T[j].push_back(checkpoints[j]);
        for (std::size_t i = 1; i <= j; ++i) {
            const double f = std::pow(2.0, p + static_cast<double>(i) - 1.0);
            T[j].push_back((f * T[j][i - 1] - T[j - 1][i - 1]) / (f - 1.0));
        }
    }
    c.series_sum = T[m - 1][m - 1];
    c.series_tail = std::abs(T[m - 1][m - 1] - T[m - 1][m - 2]);
    return c;
}

/// A_xi^{(2k)}(0) for k = 0..max_order/2 with error estimates.
struct TaylorData {
    std::vector<double> derivs;
    std::vector<double> errors;
};

/// A_xi^{(order)}(0) from a stencil of steps h = step_fraction(order) * support bound.
inline DerivativeEstimate derivative_at_zero(const SectionEvaluator& eval, const RuleConfig& config, int order,
                                             std::optional<double> area_at_zero = std::nullopt)
{
    const double h = config.step_fraction(order) * eval.support_bound();
    SectionProfile p{eval.xi(), uniform_grid(h, derivative_stencil_size(order)), {}, eval.support()};
    p.values.reserve(p.ts.size());
    p.values.push_back(area_at_zero ? *area_at_zero : eval.area(0.0));
    for (std::size_t j = 1; j < p.ts.size(); ++j) p.values.push_back(eval.area(p.ts[j]));
    return even_derivative_at_zero(p, order);
}

inline TaylorData taylor_at_zero(const SectionEvaluator& eval, const RuleConfig& config, int max_order)
{
    TaylorData td;
    const double a0 = eval.area(0.0);
    td.derivs.push_back(a0);
    td.errors.push_back(0.0);
    for (int order = 2; order <= max_order; order += 2) {
        const auto d = derivative_at_zero(eval, config, order, a0);
        td.derivs.push_back(d.value);
        td.errors.push_back(d.error);
    }
    return td;
}

/// Pieces of the regularized integral int_0^inf t^{1-n} (A(t) - P(t)) dt.
struct RegularizedParts {
    double head = 0.0; ///< [0, delta], Taylor continuation
    double body = 0.0; ///< [delta, T], composite Gauss
    double tail = 0.0; ///< [T, inf), closed form with A = 0
    double total() const noexcept { return head + body + tail; }
};

/// `taylor` holds c_{2k} = A^{(2k)}(0)/(2k)! for 2k <= n-3, `next` is c_{n-1}, the
/// limit of the subtracted integrand at 0. A must vanish on [T, inf).
template <class F>
RegularizedParts regularized_integral(F&& A, int n, std::span<const double> taylor, double next, double delta,
                                      double T, const Quadrature1D& unit_gauss, int panels)
{
    if (n % 2 == 0) throw ArgumentError("regularized integral is defined for odd n");
    if (!(delta > 0.0) || !(delta < T)) throw ArgumentError("need 0 < delta < T");
    if (static_cast<int>(taylor.size()) != (n - 1) / 2) throw ArgumentError("need (n-1)/2 Taylor coefficients");

    auto poly = [&](double t) {
        double s = 0.0, tp = 1.0;
        for (double c : taylor) {
            s += c * tp;
            tp *= t * t;
        }
        return s;
    };
    auto integrand = [&](double t) { return (A(t) - poly(t)) / std::pow(t, n - 1); };

    RegularizedParts parts;
    // h(t) ~ h0 + b t^2 + d t^4 through t = 0, delta/2, delta
    const double h0 = next;
    const double h1 = integrand(0.5 * delta);
    const double h2 = integrand(delta);
    const double D = (4.0 / 3.0) * ((h2 - h0) - 4.0 * (h1 - h0));
    const double B = (h2 - h0) - D;
    parts.head = delta * (h0 + B / 3.0 + D / 5.0);

    const double width = (T - delta) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = delta + p * width;
        const double mid = lo + 0.5 * width;
        for (std::size_t i = 0; i < unit_gauss.nodes.size(); ++i)
            parts.body += 0.5 * width * unit_gauss.weights[i] * integrand(mid + 0.5 * width * unit_gauss.nodes[i]);
    }

    for (std::size_t k = 0; k < taylor.size(); ++k) {
        const int e = 2 * static_cast<int>(k) - n + 2;
        parts.tail -= taylor[k] * std::pow(T, e) / (n - 2 - 2 * static_cast<int>(k));
    }
    return parts;
}

struct OddFunctional {
    double value;
    RegularizedParts parts;
    TaylorData taylor;
    double delta;
    double T;
};

struct Split {
    double delta;
    double T;
};

inline OddFunctional odd_functional_detail(const SectionEvaluator& eval, int n, const RuleBook& rules,
                                           std::optional<Split> split = std::nullopt)
{
    if (n % 2 == 0) throw ArgumentError("odd_functional: n must be odd");
    const auto& cfg = rules.config();
    Split sp = split.value_or(Split{cfg.delta_frac * eval.support_bound(), cfg.cutoff_factor * eval.support()});
    if (!(sp.delta > 0.0) || !(sp.delta < sp.T)) throw ArgumentError("odd_functional: need 0 < delta < T");
    if (sp.T < eval.support()) throw ArgumentError("odd_functional: T must cover the support");

    auto td = taylor_at_zero(eval, cfg, n - 1);
    std::vector<double> c;
    for (int k = 0; 2 * k <= n - 3; ++k)
        c.push_back(td.derivs[static_cast<std::size_t>(k)] / detail::factorial(2 * k));
    const double next = td.derivs.back() / detail::factorial(n - 1);
    // A vanishes beyond h_K(xi), so the closed-form tail may start there; this keeps the
    // kink of A at the support off the Gauss panels
    const double T = std::max(sp.delta * (1.0 + 1e-9), std::min(sp.T, eval.support()));
    const auto parts = regularized_integral([&](double t) { return eval.area(t); }, n, c, next, sp.delta, T,
                                            rules.gauss(), cfg.gauss_panels);
    return {parts.total(), parts, std::move(td), sp.delta, sp.T};
}

/// J(xi), the regularized integral of the section function for odd n.
inline double odd_functional(const StarBody& body, const Direction& xi, const RuleBook& rules,
                             std::optional<Split> split = std::nullopt)
{
    return odd_functional_detail(SectionEvaluator(body, xi, rules), body.dim(), rules, split).value;
}

/// A_xi^{(n-2)}(0) at each grid direction (n even).
inline std::vector<double> even_derivative_field(const StarBody& body, const std::vector<Direction>& grid,
                                                 const RuleBook& rules)
{
    const int n = body.dim();
    if (n % 2 != 0) throw ArgumentError("even_derivative_field: wrong parity, n must be even");
    std::vector<double> out;
    out.reserve(grid.size());
    for (const auto& xi : grid) {
        const SectionEvaluator eval(body, xi, rules);
        out.push_back(derivative_at_zero(eval, rules.config(), n - 2).value);
    }
    return out;
}

/// R^{-1} rho_K at xi: A^{(n-2)}(0) / kappa_n or J(xi) / kappa_n.
inline double inverse_value(const StarBody& body, const Direction& xi, const RuleBook& rules, double kappa)
{
    const int n = body.dim();
    const SectionEvaluator eval(body, xi, rules);
    if (n % 2 == 0) return derivative_at_zero(eval, rules.config(), n - 2).value / kappa;
    return odd_functional_detail(eval, n, rules).value / kappa;
}

struct InverseRadonField {
    std::vector<Direction> grid;
    std::vector<double> inverse;   ///< estimates of R^{-1} rho_K on the grid
    std::vector<double> rho_hat;   ///< R applied to the inverse field (roundtrip); empty if not requested
    std::vector<double> rho_true;
    double min_inverse = 0.0;
    std::size_t argmin = 0;
    double max_abs_err = 0.0;      ///< max |rho_hat - rho| when the roundtrip was computed
    std::string method;            ///< "even" or "odd"

    /// s_{n-2} * min R^{-1} rho_K; equals 1 for the unit ball.
    double normalized_min() const { return sphere_area(grid.front().dim() - 2) * min_inverse; }
};

/// Memoizes the inverse field over directions; a direction and its negation share an entry.
class InverseCache {
public:
    InverseCache(const StarBody& body, const RuleBook& rules)
        : body_(&body), rules_(&rules), kappa_(theorem_scale(body.dim()))
    {
    }
    double operator()(const VecN& v)
    {
        std::array<double, kMaxDim> key{};
        int first = 0;
        while (first < v.dim() && v[first] == 0.0) ++first;
        const double sgn = first < v.dim() && v[first] < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < v.dim(); ++i) key[static_cast<std::size_t>(i)] = sgn * v[i] + 0.0;
        const auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const double val = inverse_value(*body_, Direction::normalized(sgn * v), *rules_, kappa_);
        memo_.emplace(key, val);
        return val;
    }
    std::size_t evaluations() const noexcept { return memo_.size(); }

private:
    const StarBody* body_;
    const RuleBook* rules_;
    double kappa_;
    std::map<std::array<double, kMaxDim>, double> memo_;
};

/// Inverse Radon field of rho_K on a grid; with `roundtrip`, also R of that field,
/// which reproduces rho_K when the inversion is accurate.
inline InverseRadonField inverse_radon(const StarBody& body, const std::vector<Direction>& grid,
                                       const RuleBook& rules, bool roundtrip = true)
{
    const int n = body.dim();
    if (grid.empty()) throw ArgumentError("inverse_radon: empty grid");
    if (rules.dim() != n) throw ArgumentError("inverse_radon: rules built for another dimension");
    InverseCache cache(body, rules);
    InverseRadonField f;
    f.grid = grid;
    f.method = n % 2 == 0 ? "even" : "odd";
    for (const auto& xi : grid) {
        f.inverse.push_back(cache(xi.vec()));
        f.rho_true.push_back(body.radial(xi));
    }
    const auto it = std::min_element(f.inverse.begin(), f.inverse.end());
    f.argmin = static_cast<std::size_t>(it - f.inverse.begin());
    f.min_inverse = *it;
    if (roundtrip) {
        std::map<std::array<double, kMaxDim>, double> done;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& xi = grid[i];
            std::array<double, kMaxDim> key{};
            for (int j = 0; j < n; ++j) key[static_cast<std::size_t>(j)] = -xi[j] + 0.0;
            double val;
            if (const auto hit = done.find(key); hit != done.end()) {
                val = hit->second;
            } else {
                val = radon_apply([&](const VecN& v) { return cache(v); }, xi, rules.radon(), true);
            }
            for (int j = 0; j < n; ++j) key[static_cast<std::size_t>(j)] = xi[j] + 0.0;
            done.emplace(key, val);
            f.rho_hat.push_back(val);
            f.max_abs_err = std::max(f.max_abs_err, std::abs(val - f.rho_true[i]));
        }
    }
    return f;
}

/// Runs the regularized-integral machinery on Phi = G(x) = exp(-(x/scale)^2) and
/// returns the implied S_n = result / G(0).
///
/// F_G(t) = int_t^inf (r^2 - t^2)^{(n-2)/2} G'(r) dr is evaluated with r^2 = t^2 + x^2,
/// and its Taylor polynomial uses the moments int_0^inf r^{n-2-2k} G'(r) dr.
inline double gaussian_crosscheck(int n, double scale = 1.0, int nodes = 96)
{
    if (n < 3 || n % 2 == 0) throw ArgumentError("gaussian_crosscheck: n must be odd and at least 3");
    const double cut = 10.0 * scale;
    const auto q = gauss_rule(nodes, 0.0, cut);
    const double s2 = scale * scale;
    auto F = [&](double t) {
        if (t >= cut) return 0.0;
        return -(2.0 / s2) * q.integrate([&](double x) { return std::pow(x, n - 1) * std::exp(-(t * t + x * x) / s2); });
    };
    auto moment = [&](int k) {
        return -(2.0 / s2) * q.integrate([&](double r) { return std::pow(r, n - 1 - 2 * k) * std::exp(-r * r / s2); });
    };
    const auto a = binomial_coefficients(n, (n + 1) / 2);
    std::vector<double> c;
    for (int k = 0; 2 * k <= n - 3; ++k) c.push_back(a[static_cast<std::size_t>(k)] * moment(k));
    const int kn = (n - 1) / 2;
    const double next = a[static_cast<std::size_t>(kn)] * moment(kn);
    const auto unit = gauss_rule(32, -1.0, 1.0);
    const auto parts = regularized_integral(F, n, c, next, 0.05 * scale, cut, unit, 16);
    return parts.total(); // G(0) = 1
}

} // namespace tomo
