// Two zonal bodies in R^5: every central section of K is smaller than the
// matching section of L, yet K has the larger volume.

#include <cstdio>

#include "tomo/bp.hpp"

int main()
{
    using namespace tomo;
    const int n = 5;
    RuleConfig cfg = RuleConfig::defaults(n);
    // both radial functions are polynomials of degree 4 in <x, e_5>, so these levels integrate exactly
    cfg.section_level = 9;
    cfg.support_level = 11;
    const RuleBook rules(n, cfg);

    const auto k = make_body("pball:eps=-0.95,d=4,r=0.991525", n);
    const auto l = make_body("pball:eps=-0.765,d=4", n);
    const auto report = bp_experiment(k, l, meridian_grid(n, 181), rules, true);

    std::printf("K = %s\nL = %s\n", report.body_k.c_str(), report.body_l.c_str());
    std::printf("smallest section margin A_L - A_K: %.6e (error %.1e)\n", report.dominance.worst_margin,
                report.dominance.margin_error);
    std::printf("Vol(K) = %.10f  Vol(L) = %.10f  (error %.1e)\n", report.volume_k, report.volume_l, report.volume_error);
    std::printf("s_3 min R^-1 rho_L = %.6f\n", *report.min_inverse_l);
    std::printf("verdict: %s\n", report.verdict.c_str());
}
