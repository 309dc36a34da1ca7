// Section functions of an ellipsoid in R^4 along the coordinate axes, next to
// the closed form, and the inverse Radon value read off from A''(0).

#include <cstdio>

#include "tomo/bp.hpp"

int main()
{
    using namespace tomo;
    const int n = 4;
    const RuleBook rules(n);
    const auto body = make_body("ellipsoid:a=1,1.2,1.5,2", n);

    for (int axis = 0; axis < n; ++axis) {
        const auto xi = Direction::axis(n, axis);
        const SectionEvaluator eval(body, xi, rules);
        std::printf("xi = e_%d   h_K = %.6f\n", axis + 1, eval.support());
        for (int j = 0; j <= 4; ++j) {
            const double t = 0.2 * j * eval.support();
            std::printf("  t = %.4f   A = %.10f   closed form = %.10f\n", t, eval.area(t),
                        analytic_sections(body, xi, t).value_or(-1.0));
        }
        std::printf("  R^-1 rho_K(xi) = %.10f\n", n4_remark_value(body, xi, rules));
    }
}
