#pragma once

// Quadrature levels and numerical knobs, bundled per dimension.

#include <array>
#include <string>

#include "tomo/geom.hpp"
#include "tomo/quadrature.hpp"

namespace tomo {

struct RuleConfig {
    int section_level = 8;  ///< S^{n-2} rule used inside one section
    int radon_level = 8;    ///< S^{n-2} rule for the Radon transform
    int support_level = 6;  ///< S^{n-1} rule: support seeds and volumes
    int grid_level = 4;     ///< S^{n-1} rule whose nodes form the output grid
    int gauss_nodes = 24;   ///< Gauss nodes per panel of the regularized integral
    int gauss_panels = 2;
    int scan_points = 32;   ///< membership samples along one ray
    double delta_frac = 0.05; ///< split point delta as a fraction of the support bound
    double cutoff_factor = 1.0; ///< outer split point T as a multiple of h_K(xi)
    /// derivative step h / support for orders 2, 4, 6, 8
    std::array<double, 4> step_frac{1.0 / 400.0, 1.0 / 50.0, 1.0 / 25.0, 1.0 / 20.0};

    static RuleConfig defaults(int n)
    {
        require_dim(n);
        RuleConfig c;
        switch (n) {
        case 3: c.section_level = 16; c.radon_level = 16; c.support_level = 8; c.grid_level = 8; break;
        case 4: c.section_level = 8;  c.radon_level = 8;  c.support_level = 6; c.grid_level = 4; break;
        case 5: c.section_level = 4;  c.radon_level = 4;  c.support_level = 5; c.grid_level = 3; break;
        case 6: c.section_level = 4;  c.radon_level = 4;  c.support_level = 4; c.grid_level = 3; break;
        case 7: c.section_level = 3;  c.radon_level = 3;  c.support_level = 3; c.grid_level = 2; break;
        default: c.section_level = 2; c.radon_level = 2;  c.support_level = 3; c.grid_level = 2; break;
        }
        return c;
    }

    double step_fraction(int order) const
    {
        if (order < 2 || order > 8 || order % 2 != 0)
            throw ArgumentError("derivative order must be 2, 4, 6 or 8");
        return step_frac[static_cast<std::size_t>(order / 2 - 1)];
    }
};

/// Rules built once for one dimension and shared read-only.
class RuleBook {
public:
    RuleBook(int n, RuleConfig config)
        : n_(n), config_(config),
          section_(sphere_rule((require_dim(n), n - 2), config.section_level)),
          radon_(config.radon_level == config.section_level ? section_ : sphere_rule(n - 2, config.radon_level)),
          support_(sphere_rule(n - 1, config.support_level)),
          gauss_(gauss_rule(config.gauss_nodes, -1.0, 1.0))
    {
        if (config.scan_points < 2) throw ArgumentError("scan_points must be at least 2");
        if (config.gauss_panels < 1) throw ArgumentError("gauss_panels must be positive");
        if (!(config.delta_frac > 0.0 && config.delta_frac < 0.5)) throw ArgumentError("delta_frac must lie in (0, 0.5)");
        if (!(config.cutoff_factor >= 1.0)) throw ArgumentError("cutoff_factor must be at least 1");
    }
    explicit RuleBook(int n) : RuleBook(n, RuleConfig::defaults(n)) {}

    int dim() const noexcept { return n_; }
    const RuleConfig& config() const noexcept { return config_; }
    const SphereRule& section() const noexcept { return section_; }
    const SphereRule& radon() const noexcept { return radon_; }
    const SphereRule& support() const noexcept { return support_; }
    const Quadrature1D& gauss() const noexcept { return gauss_; }

private:
    int n_;
    RuleConfig config_;
    SphereRule section_;
    SphereRule radon_;
    SphereRule support_;
    Quadrature1D gauss_;
};

} // namespace tomo
