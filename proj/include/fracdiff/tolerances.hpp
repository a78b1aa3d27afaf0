#ifndef FRACDIFF_TOLERANCES_HPP
#define FRACDIFF_TOLERANCES_HPP

#include <string>

namespace fracdiff {

// Every tolerance the verification suites assert against, in one place.
// Defaults are the documented contract; a JSON file (--tol-file or the
// FRACDIFF_TOL_FILE environment variable) may override individual keys.
struct Tolerances {
    double gamma_reflection = 1e-10;          // Gamma(z) Gamma(1-z) sin(pi z)/pi = 1
    double gamma_recurrence = 1e-10;          // Gamma(a+1,z) = a Gamma(a,z) + z^a e^{-z}
    double kummer_identity = 1e-9;            // Phi(1,1-l,z) vs incomplete-gamma form
    double power_plus_semigroup = 1e-12;      // x^mu1 x^mu2 = x^{mu1+mu2}
    double step_closed_form = 1e-12;          // closed step vs 1/(sqrt(pi) sqrt(x))
    double step_gl = 1e-3;                    // GL oracle vs closed step, h = 1e-4
    double bromwich_vs_closed = 1e-4;         // line inversion vs closed forms
    double integer_reduction = 1e-12;         // integer-order collapse of closed forms
    double semigroup_closed = 1e-14;          // exact composition on power kernels
    double semigroup_gl = 1e-2;               // GL applied twice vs single combined order
    double delta_step_consistency = 1e-14;    // delta(l) = step(l+1), same expression
    double antiderivative = 1e-8;             // step(-1, x) vs running trapezoid of U
    double integer_finite_difference = 1e-6;  // order-1 exp kernel vs centered diff
    double cable_identity = 1e-9;             // exact current-law residual
    double cable_pde = 1e-5;                  // |PDE residual| <= tol * |V| at h = 1e-3
    double cable_pde_ratio_low = 3.5;         // O(h^2): residual ratio at h vs h/2
    double cable_pde_ratio_high = 4.5;
    double cable_gradient = 1e-6;             // i = -(1/R) dV/dx, relative
    double cable_boundary = 1e-15;            // V(0, t) = V0 e^{j omega t}
    double cable_attenuation = 1e-9;          // ln|V/V0| + kx and phase slope + k
    double habitual_large_t = 1e-2;           // habitual residual at omega t = 100, vs |i|
    double oracle_concordance = 1e-3;         // GL(-alpha) vs RL(alpha), relative
    double refinement_floor = 1e-9;           // noise floor for GL h-refinement
    double bromwich_refinement_floor = 1e-7;  // line-quadrature errors fluctuate
                                              // at this level once converged
    double verify_runtime_seconds = 300.0;    // full suite wall-clock budget

    static Tolerances defaults() { return {}; }
    static Tolerances from_file(const std::string& path);

    // Resolution order: explicit path > FRACDIFF_TOL_FILE > defaults.
    static Tolerances resolve(const std::string& cli_path);
};

}  // namespace fracdiff

#endif
