#pragma once

// Small fixed-capacity vectors in R^n (3 <= n <= 8), unit directions,
// orthonormal complements and the sphere/ball constants s_k, v_k.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "tomo/errors.hpp"

namespace tomo {

inline constexpr int kMaxDim = 8;
inline constexpr int kMinDim = 3;

inline void require_dim(int n)
{
    if (n < kMinDim || n > kMaxDim)
        throw ArgumentError("dimension must lie in [3, 8], got " + std::to_string(n));
}

/// A point of R^n stored inline. The dimension is a runtime value.
class VecN {
public:
    VecN() = default;
    explicit VecN(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim)
            throw ArgumentError("VecN dimension out of range: " + std::to_string(n));
    }
    VecN(std::initializer_list<double> xs) : VecN(static_cast<int>(xs.size()))
    {
        std::copy(xs.begin(), xs.end(), c_.begin());
    }
    static VecN from(const std::vector<double>& xs)
    {
        VecN v(static_cast<int>(xs.size()));
        std::copy(xs.begin(), xs.end(), v.c_.begin());
        return v;
    }
    static VecN basis(int n, int i)
    {
        VecN v(n);
        v.c_[static_cast<std::size_t>(i)] = 1.0;
        return v;
    }

    int dim() const noexcept { return n_; }
    double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
    const double* begin() const noexcept { return c_.data(); }
    const double* end() const noexcept { return c_.data() + n_; }

    VecN& operator+=(const VecN& o) noexcept
    {
        for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
        return *this;
    }
    VecN& operator-=(const VecN& o) noexcept
    {
        for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    VecN& operator*=(double s) noexcept
    {
        for (int i = 0; i < n_; ++i) c_[i] *= s;
        return *this;
    }
    friend VecN operator+(VecN a, const VecN& b) noexcept { return a += b; }
    friend VecN operator-(VecN a, const VecN& b) noexcept { return a -= b; }
    friend VecN operator*(double s, VecN a) noexcept { return a *= s; }
    friend VecN operator*(VecN a, double s) noexcept { return a *= s; }
    friend VecN operator-(VecN a) noexcept { return a *= -1.0; }
    friend bool operator==(const VecN& a, const VecN& b) noexcept
    {
        return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
    }

    bool finite() const noexcept
    {
        return std::all_of(begin(), end(), [](double x) { return std::isfinite(x); });
    }
    std::vector<double> to_vector() const { return {begin(), end()}; }

private:
    std::array<double, kMaxDim> c_{};
    int n_ = 0;
};

inline double dot(const VecN& a, const VecN& b) noexcept
{
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const VecN& a) noexcept { return std::sqrt(dot(a, a)); }

/// Unit vector of S^{n-1}. Construction checks |v| = 1 within 1e-12.
class Direction {
public:
    explicit Direction(const VecN& v) : v_(v)
    {
        if (!v.finite() || std::abs(norm(v) - 1.0) > 1e-12)
            throw ArgumentError("Direction requires a unit vector");
    }
    static Direction normalized(const VecN& v)
    {
        const double r = norm(v);
        if (!(r > 0.0) || !std::isfinite(r)) throw ArgumentError("cannot normalize a zero vector");
        return Direction(v * (1.0 / r), Trusted{});
    }
    static Direction axis(int n, int i) { return Direction(VecN::basis(n, i), Trusted{}); }

    int dim() const noexcept { return v_.dim(); }
    const VecN& vec() const noexcept { return v_; }
    double operator[](int i) const noexcept { return v_[i]; }
    Direction operator-() const noexcept { return Direction(-v_, Trusted{}); }
    friend bool operator==(const Direction& a, const Direction& b) noexcept { return a.v_ == b.v_; }

private:
    struct Trusted {};
    Direction(const VecN& v, Trusted) noexcept : v_(v) {}
    VecN v_;
};

inline double dot(const Direction& a, const VecN& b) noexcept { return dot(a.vec(), b); }
inline double dot(const Direction& a, const Direction& b) noexcept { return dot(a.vec(), b.vec()); }

/// n-1 orthonormal vectors spanning normal^perp; identifies normal^perp with R^{n-1}.
struct OrthoBasis {
    Direction normal;
    std::vector<VecN> basis;

    /// Maps coordinates y in R^{n-1} to the point sum_i y_i b_i of normal^perp.
    VecN embed(const VecN& y) const
    {
        VecN x(normal.dim());
        for (int i = 0; i < y.dim(); ++i) x += y[i] * basis[static_cast<std::size_t>(i)];
        return x;
    }
};

/// Deterministic complement: standard basis vectors taken from least to most
/// aligned with xi (ties by lowest index), Gram-Schmidt twice, most aligned dropped.
inline OrthoBasis orthonormal_complement(const Direction& xi)
{
    const int n = xi.dim();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::abs(xi[a]) < std::abs(xi[b]); });

    OrthoBasis out{xi, {}};
    out.basis.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k) {
        VecN v = VecN::basis(n, order[static_cast<std::size_t>(k)]);
        for (int pass = 0; pass < 2; ++pass) {
            v -= dot(xi.vec(), v) * xi.vec();
            for (const auto& b : out.basis) v -= dot(b, v) * b;
        }
        out.basis.push_back(v * (1.0 / norm(v)));
    }
    return out;
}

/// Surface measure of S^k and volume of B^k.
struct SphereConstants {
    int k;
    double s_k;
    double v_k;
};

inline SphereConstants sphere_constants(int k)
{
    if (k < 0) throw ArgumentError("sphere_constants: k must be non-negative");
    constexpr double pi = std::numbers::pi;
    const double kk = static_cast<double>(k);
    return {k, 2.0 * std::pow(pi, (kk + 1.0) / 2.0) / std::tgamma((kk + 1.0) / 2.0),
            std::pow(pi, kk / 2.0) / std::tgamma(kk / 2.0 + 1.0)};
}

inline double sphere_area(int k) { return sphere_constants(k).s_k; }
inline double ball_volume(int k) { return sphere_constants(k).v_k; }

} // namespace tomo
