#pragma once

// Interval Gauss rules and product rules on S^d in hyperspherical coordinates.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "tomo/errors.hpp"
#include "tomo/geom.hpp"

namespace tomo {

struct Quadrature1D {
    double a = -1.0;
    double b = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    int degree = 0; ///< exact for polynomials up to this degree

    template <class F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

namespace detail {

// Golub-Welsch for the weight (1-x^2)^alpha on [-1,1] (Gegenbauer family).
// Nodes and weights are symmetrized so that x_i = -x_{m-1-i} holds exactly.
inline void gegenbauer_nodes(int m, double alpha, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(static_cast<std::size_t>(m), 0.0);
    w.assign(static_cast<std::size_t>(m), 0.0);
    const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(alpha + 1.0) / std::tgamma(alpha + 1.5);
    if (m == 1) {
        w[0] = mu0;
        return;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd sub(m - 1);
    for (int k = 1; k < m; ++k) {
        const double kk = k;
        const double denom = 4.0 * (kk + alpha) * (kk + alpha) - 1.0;
        sub(k - 1) = std::sqrt(kk * (kk + 2.0 * alpha) / denom);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    for (int i = 0; i < m; ++i) {
        x[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        w[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    for (int i = 0; i < m / 2; ++i) {
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(m - 1 - i);
        const double xs = 0.5 * (x[hi] - x[lo]);
        const double ws = 0.5 * (w[hi] + w[lo]);
        x[lo] = -xs;
        x[hi] = xs;
        w[lo] = w[hi] = ws;
    }
    if (m % 2 == 1) x[static_cast<std::size_t>(m / 2)] = 0.0;
}

} // namespace detail

/// m-point Gauss-Legendre rule on [a, b].
inline Quadrature1D gauss_rule(int m, double a = -1.0, double b = 1.0)
{
    if (m <= 0) throw ArgumentError("gauss_rule: m must be positive");
    if (!(a < b)) throw ArgumentError("gauss_rule: need a < b");
    Quadrature1D q;
    q.a = a;
    q.b = b;
    q.degree = 2 * m - 1;
    detail::gegenbauer_nodes(m, 0.0, q.nodes, q.weights);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        q.nodes[i] = mid + half * q.nodes[i];
        q.weights[i] *= half;
    }
    return q;
}

/// Product rule on S^d subset R^{d+1}. Total weight s_d, antipodally closed:
/// nodes[antipode[i]] == -nodes[i] bit for bit.
struct SphereRule {
    int d = 0;
    int level = 0;
    std::vector<VecN> nodes;
    std::vector<double> weights;
    std::vector<std::size_t> antipode;

    std::size_t size() const noexcept { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Level L: 2L equispaced angles on the circle factor, L Gauss-Gegenbauer
/// nodes in x = cos(theta) for every polar angle.
inline SphereRule sphere_rule(int d, int level)
{
    if (d < 1 || d > 7) throw ArgumentError("sphere_rule: unsupported sphere dimension " + std::to_string(d));
    if (level < 1) throw ArgumentError("sphere_rule: level must be positive");
    const int L = level;

    // circle factor; second half is the exact negation of the first
    std::vector<double> cphi(static_cast<std::size_t>(2 * L)), sphi(static_cast<std::size_t>(2 * L));
    for (int j = 0; j < L; ++j) {
        const double phi = std::numbers::pi * j / L;
        cphi[static_cast<std::size_t>(j)] = std::cos(phi);
        sphi[static_cast<std::size_t>(j)] = std::sin(phi);
        cphi[static_cast<std::size_t>(j + L)] = -cphi[static_cast<std::size_t>(j)];
        sphi[static_cast<std::size_t>(j + L)] = -sphi[static_cast<std::size_t>(j)];
    }
    const double wphi = std::numbers::pi / L;

    // polar factor j (1-based) carries weight sin^{d-j}(theta) = (1-x^2)^{(d-j-1)/2} dx
    const int npolar = d - 1;
    std::vector<std::vector<double>> px(static_cast<std::size_t>(npolar)), pw(static_cast<std::size_t>(npolar));
    for (int j = 0; j < npolar; ++j) {
        const double alpha = 0.5 * static_cast<double>(d - (j + 1) - 1);
        detail::gegenbauer_nodes(L, alpha, px[static_cast<std::size_t>(j)], pw[static_cast<std::size_t>(j)]);
    }

    SphereRule rule;
    rule.d = d;
    rule.level = L;
    std::size_t total = static_cast<std::size_t>(2 * L);
    for (int j = 0; j < npolar; ++j) total *= static_cast<std::size_t>(L);
    rule.nodes.reserve(total);
    rule.weights.reserve(total);
    rule.antipode.resize(total);

    std::vector<int> idx(static_cast<std::size_t>(npolar), 0);
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        const int jphi = static_cast<int>(rem % static_cast<std::size_t>(2 * L));
        rem /= static_cast<std::size_t>(2 * L);
        for (int j = npolar - 1; j >= 0; --j) {
            idx[static_cast<std::size_t>(j)] = static_cast<int>(rem % static_cast<std::size_t>(L));
            rem /= static_cast<std::size_t>(L);
        }

        VecN u(d + 1);
        double sprod = 1.0;
        double w = wphi;
        for (int j = 0; j < npolar; ++j) {
            const auto ij = static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
            const double x = px[static_cast<std::size_t>(j)][ij];
            u[j] = sprod * x;
            sprod *= std::sqrt(1.0 - x * x);
            w *= pw[static_cast<std::size_t>(j)][ij];
        }
        u[d - 1] = sprod * cphi[static_cast<std::size_t>(jphi)];
        u[d] = sprod * sphi[static_cast<std::size_t>(jphi)];
        rule.nodes.push_back(u);
        rule.weights.push_back(w);

        std::size_t anti = 0;
        for (int j = 0; j < npolar; ++j)
            anti = anti * static_cast<std::size_t>(L) + static_cast<std::size_t>(L - 1 - idx[static_cast<std::size_t>(j)]);
        anti = anti * static_cast<std::size_t>(2 * L) + static_cast<std::size_t>((jphi + L) % (2 * L));
        rule.antipode[lin] = anti;
    }
    return rule;
}

/// Carries a rule on S^{n-2} (nodes in R^{n-1}) onto S^{n-1} cap frame.normal^perp.
inline SphereRule embed_rule(const SphereRule& rule, const OrthoBasis& frame)
{
    if (static_cast<std::size_t>(rule.d + 1) != frame.basis.size())
        throw ArgumentError("embed_rule: rule dimension does not match frame");
    SphereRule out;
    out.d = rule.d;
    out.level = rule.level;
    out.weights = rule.weights;
    out.antipode = rule.antipode;
    out.nodes.reserve(rule.size());
    for (const auto& y : rule.nodes) out.nodes.push_back(frame.embed(y));
    return out;
}

/// Output direction grid on S^{n-1}: the nodes of a level-L sphere rule.
inline std::vector<Direction> direction_grid(int n, int level)
{
    require_dim(n);
    const auto rule = sphere_rule(n - 1, level);
    std::vector<Direction> out;
    out.reserve(rule.size());
    for (const auto& u : rule.nodes) out.push_back(Direction::normalized(u));
    return out;
}

/// Uniform random directions from normalized Gaussian vectors; reproducible for a given seed.
inline std::vector<Direction> random_directions(int n, int count, std::uint64_t seed)
{
    require_dim(n);
    if (count < 0) throw ArgumentError("random_directions: negative count");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        VecN v(n);
        for (int i = 0; i < n; ++i) v[i] = normal(gen);
        if (norm(v) > 1e-8) out.push_back(Direction::normalized(v));
    }
    return out;
}

} // namespace tomo
