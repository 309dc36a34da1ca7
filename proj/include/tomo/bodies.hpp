#pragma once

// Catalog of origin-symmetric star bodies given by their radial functions.
//
//   ball:r=1                       rho = r
//   ellipsoid:a=1,2,3              rho(x) = (sum x_i^2 / a_i^2)^{-1/2}
//   lp:p=1.5                       rho(x) = (sum |x_i|^p)^{-1/p}
//   pball:eps=0.3,d=4,axis=last    rho(x) = r (1 + eps P_d(<x, axis>))
//
// P_d is the degree-d Legendre polynomial of R^n (Gegenbauer C_d^{(n-2)/2}
// normalized to P_d(1) = 1), so the perturbation is a zonal spherical harmonic.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tomo/errors.hpp"
#include "tomo/geom.hpp"
#include "tomo/quadrature.hpp"

namespace tomo {

struct Ball {
    double r = 1.0;
};
struct Ellipsoid {
    std::vector<double> a;
};
struct LpBall {
    double p = 2.0;
};
struct PerturbedBall {
    double eps = 0.0;
    int degree = 2;
    int axis = -1; ///< coordinate index; -1 means the last axis
    double r = 1.0;
};

using BodySpec = std::variant<Ball, Ellipsoid, LpBall, PerturbedBall>;

/// Legendre polynomial of R^n: P_0 = 1, P_1 = x,
/// P_{k+1} = ((2k+n-2) x P_k - k P_{k-1}) / (k+n-2).
inline double zonal_legendre(int n, int degree, double x) noexcept
{
    if (degree == 0) return 1.0;
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < degree; ++k) {
        const double p2 = ((2.0 * k + n - 2.0) * x * p1 - k * p0) / (k + n - 2.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace detail {

inline double parse_double(std::string_view s, std::string_view ctx)
{
    try {
        std::size_t used = 0;
        const std::string str(s);
        const double v = std::stod(str, &used);
        if (used != str.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ArgumentError("bad number '" + std::string(s) + "' in " + std::string(ctx));
    }
}

inline std::string format_double(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace detail

/// Parses `kind:key=v,key=v1,v2,...`. Bare values after a key extend that key's list.
inline BodySpec parse_body_spec(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string kind(text.substr(0, colon));
    std::vector<std::pair<std::string, std::vector<std::string>>> kv;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            const auto eq = tok.find('=');
            if (eq != std::string_view::npos) {
                kv.push_back({std::string(tok.substr(0, eq)), {std::string(tok.substr(eq + 1))}});
            } else {
                if (kv.empty() || tok.empty()) throw ArgumentError("malformed body spec: " + std::string(text));
                kv.back().second.emplace_back(tok);
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    auto scalar = [&](const std::string& key, std::optional<double> fallback) -> double {
        for (const auto& [k, vals] : kv)
            if (k == key) {
                if (vals.size() != 1) throw ArgumentError("key '" + key + "' expects one value");
                return detail::parse_double(vals.front(), text);
            }
        if (!fallback) throw ArgumentError("missing key '" + key + "' in " + std::string(text));
        return *fallback;
    };
    auto check_keys = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto& [k, vals] : kv)
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                throw ArgumentError("unknown key '" + k + "' for body kind " + kind);
    };

    if (kind == "ball") {
        check_keys({"r"});
        return Ball{scalar("r", 1.0)};
    }
    if (kind == "ellipsoid") {
        check_keys({"a"});
        Ellipsoid e;
        for (const auto& [k, vals] : kv)
            for (const auto& v : vals) e.a.push_back(detail::parse_double(v, text));
        if (e.a.empty()) throw ArgumentError("ellipsoid needs a=a1,...,an");
        return e;
    }
    if (kind == "lp") {
        check_keys({"p"});
        return LpBall{scalar("p", std::nullopt)};
    }
    if (kind == "pball") {
        check_keys({"eps", "d", "axis", "r"});
        PerturbedBall pb;
        pb.eps = scalar("eps", std::nullopt);
        const double deg = scalar("d", 2.0);
        if (deg != std::floor(deg)) throw ArgumentError("pball degree must be an integer");
        pb.degree = static_cast<int>(deg);
        pb.r = scalar("r", 1.0);
        for (const auto& [k, vals] : kv) {
            if (k != "axis") continue;
            if (vals.size() != 1) throw ArgumentError("axis expects one value");
            if (vals.front() == "last") pb.axis = -1;
            else if (vals.front() == "first") pb.axis = 0;
            else {
                const double ax = detail::parse_double(vals.front(), text);
                if (ax < 1 || ax != std::floor(ax)) throw ArgumentError("axis index is 1-based");
                pb.axis = static_cast<int>(ax) - 1;
            }
        }
        return pb;
    }
    throw ArgumentError("unknown body kind '" + kind + "'");
}

inline std::string to_string(const BodySpec& spec)
{
    using detail::format_double;
    return std::visit(
        [](const auto& b) -> std::string {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return "ball:r=" + format_double(b.r);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                std::string s = "ellipsoid:a=";
                for (std::size_t i = 0; i < b.a.size(); ++i) s += (i ? "," : "") + format_double(b.a[i]);
                return s;
            } else if constexpr (std::is_same_v<T, LpBall>) {
                return "lp:p=" + format_double(b.p);
            } else {
                std::string s = "pball:eps=" + format_double(b.eps) + ",d=" + std::to_string(b.degree) + ",axis=";
                s += b.axis < 0 ? std::string("last") : std::to_string(b.axis + 1);
                if (b.r != 1.0) s += ",r=" + format_double(b.r);
                return s;
            }
        },
        spec);
}

/// Immutable star body in R^n with bracketing bounds r_min <= rho <= r_max.
class StarBody {
public:
    StarBody(BodySpec spec, int n) : spec_(std::move(spec)), n_(n)
    {
        require_dim(n);
        validate();
        compute_bounds();
    }

    int dim() const noexcept { return n_; }
    const BodySpec& spec() const noexcept { return spec_; }
    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    bool smooth() const noexcept { return smooth_; }
    /// True when convexity is known from the family: every line through an interior point crosses the boundary twice.
    bool convex() const noexcept { return convex_; }
    const std::string& note() const noexcept { return note_; }
    std::string name() const { return to_string(spec_); }

    double radial(const Direction& x) const
    {
        if (x.dim() != n_) throw ArgumentError("radial: dimension mismatch");
        return radial_unit(x.vec());
    }

    /// Hot path: u must be a unit vector of the body's dimension (unchecked).
    double radial_unit(const VecN& u) const noexcept
    {
        return std::visit(
            [&](const auto& b) -> double {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Ball>) {
                    return b.r;
                } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                    double s = 0.0;
                    for (int i = 0; i < n_; ++i) s += (u[i] * u[i]) * inv_a2_[static_cast<std::size_t>(i)];
                    return 1.0 / std::sqrt(s);
                } else if constexpr (std::is_same_v<T, LpBall>) {
                    double s = 0.0;
                    for (int i = 0; i < n_; ++i) s += std::pow(std::abs(u[i]), b.p);
                    return std::pow(s, -1.0 / b.p);
                } else {
                    const double c = u[axis_];
                    return b.r * (1.0 + b.eps * zonal_legendre(n_, b.degree, c));
                }
            },
            spec_);
    }

    /// Signed boundary distance |x| - rho(x/|x|); negative strictly inside.
    double boundary_gap(const VecN& x) const noexcept
    {
        const double r = norm(x);
        if (r == 0.0) return -r_min_;
        return r - radial_unit(x * (1.0 / r));
    }

    /// Distance from an interior point p to the boundary along the unit vector u, for
    /// families where the boundary is a quadric; empty otherwise.
    std::optional<double> exit_distance(const VecN& p, const VecN& u) const noexcept
    {
        if (const auto* b = std::get_if<Ball>(&spec_)) {
            const double pu = dot(p, u);
            return -pu + std::sqrt(std::max(0.0, pu * pu - dot(p, p) + b->r * b->r));
        }
        if (std::holds_alternative<Ellipsoid>(spec_)) {
            double a = 0.0, b = 0.0, c = -1.0;
            for (int i = 0; i < n_; ++i) {
                const double w = inv_a2_[static_cast<std::size_t>(i)];
                a += u[i] * u[i] * w;
                b += p[i] * u[i] * w;
                c += p[i] * p[i] * w;
            }
            return (-b + std::sqrt(std::max(0.0, b * b - a * c))) / a;
        }
        return std::nullopt;
    }

    bool contains(const VecN& x) const
    {
        if (x.dim() != n_) throw ArgumentError("contains: dimension mismatch");
        return boundary_gap(x) <= 0.0;
    }

    int axis_index() const noexcept { return axis_; }

private:
    void validate()
    {
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Ball>) {
                    if (!(b.r > 0.0)) throw ArgumentError("ball radius must be positive");
                } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                    if (static_cast<int>(b.a.size()) != n_)
                        throw ArgumentError("ellipsoid needs exactly n semi-axes");
                    for (double a : b.a) {
                        if (!(a > 0.0)) throw ArgumentError("ellipsoid semi-axes must be positive");
                        inv_a2_.push_back(1.0 / (a * a));
                    }
                } else if constexpr (std::is_same_v<T, LpBall>) {
                    if (!(b.p >= 0.5)) throw ArgumentError("lp ball needs p >= 0.5");
                    convex_ = b.p >= 1.0;
                    const bool even_int = b.p == std::floor(b.p) && static_cast<long>(b.p) % 2 == 0;
                    if (!even_int) {
                        smooth_ = false;
                        note_ = "radial function is not C-infinity where coordinates vanish";
                    }
                } else {
                    convex_ = false;
                    if (b.degree != 2 && b.degree != 4 && b.degree != 6)
                        throw ArgumentError("pball degree must be 2, 4 or 6");
                    if (!(b.r > 0.0)) throw ArgumentError("pball scale must be positive");
                    if (std::abs(b.eps) > 0.95 + 1e-12)
                        throw ArgumentError("pball eps outside the admissible range |eps| <= 0.95");
                    axis_ = b.axis < 0 ? n_ - 1 : b.axis;
                    if (axis_ >= n_) throw ArgumentError("pball axis index exceeds dimension");
                }
            },
            spec_);
    }

    void compute_bounds()
    {
        double lo = 0.0, hi = 0.0;
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, Ball>) {
                    lo = hi = b.r;
                } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                    lo = *std::min_element(b.a.begin(), b.a.end());
                    hi = *std::max_element(b.a.begin(), b.a.end());
                } else if constexpr (std::is_same_v<T, LpBall>) {
                    const double diag = std::pow(static_cast<double>(n_), 0.5 - 1.0 / b.p);
                    lo = std::min(1.0, diag);
                    hi = std::max(1.0, diag);
                } else {
                    double pmin = 1.0, pmax = 1.0;
                    for (int i = 0; i <= 4000; ++i) {
                        const double p = zonal_legendre(n_, b.degree, -1.0 + i / 2000.0);
                        pmin = std::min(pmin, p);
                        pmax = std::max(pmax, p);
                    }
                    lo = b.r * std::min(1.0 + b.eps * pmin, 1.0 + b.eps * pmax);
                    hi = b.r * std::max(1.0 + b.eps * pmin, 1.0 + b.eps * pmax);
                }
            },
            spec_);
        // sampled check on a level-3 rule guards the closed forms above
        const auto rule = sphere_rule(n_ - 1, 3);
        for (const auto& u : rule.nodes) {
            const double r = radial_unit(u);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (!(lo > 0.0)) throw ArgumentError("radial function must stay positive");
        r_min_ = lo / 1.01;
        r_max_ = hi * 1.01;
    }

    BodySpec spec_;
    int n_;
    std::vector<double> inv_a2_;
    int axis_ = 0;
    double r_min_ = 0.0;
    double r_max_ = 0.0;
    bool smooth_ = true;
    bool convex_ = true;
    std::string note_;
};

inline StarBody make_body(std::string_view text, int n) { return StarBody(parse_body_spec(text), n); }

inline double radial(const StarBody& body, const Direction& x) { return body.radial(x); }
inline bool contains(const StarBody& body, const VecN& x) { return body.contains(x); }

/// Vol(K) = (1/n) * integral of rho^n over S^{n-1}.
inline double volume(const StarBody& body, const SphereRule& rule)
{
    const int n = body.dim();
    if (rule.d != n - 1) throw ArgumentError("volume: rule must live on S^{n-1}");
    return rule.integrate([&](const VecN& u) { return std::pow(body.radial_unit(u), n); }) / n;
}

/// Closed-form A_xi(t) for balls and ellipsoids; nullopt for other kinds.
inline std::optional<double> analytic_sections(const StarBody& body, const Direction& xi, double t)
{
    const int n = body.dim();
    if (xi.dim() != n) throw ArgumentError("analytic_sections: dimension mismatch");
    const double v = ball_volume(n - 1);
    const double at = std::abs(t);
    if (const auto* b = std::get_if<Ball>(&body.spec())) {
        if (at >= b->r) return 0.0;
        return v * std::pow(b->r * b->r - t * t, 0.5 * (n - 1));
    }
    if (const auto* e = std::get_if<Ellipsoid>(&body.spec())) {
        double w2 = 0.0, prod = 1.0;
        for (int i = 0; i < n; ++i) {
            const double a = e->a[static_cast<std::size_t>(i)];
            w2 += a * a * xi[i] * xi[i];
            prod *= a;
        }
        const double w = std::sqrt(w2);
        if (at >= w) return 0.0;
        return v * (prod / w) * std::pow(1.0 - t * t / w2, 0.5 * (n - 1));
    }
    return std::nullopt;
}

} // namespace tomo
