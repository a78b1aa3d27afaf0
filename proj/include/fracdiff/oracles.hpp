#ifndef FRACDIFF_ORACLES_HPP
#define FRACDIFF_ORACLES_HPP

#include <functional>

#include "fracdiff/types.hpp"

namespace fracdiff::oracles {

// Independent discrete approximations used to validate the analytic
// modules.  Lower terminal fixed at 0, matching the one-sided transform
// convention under which the closed forms hold without extra constants.

struct OracleConfig {
    double h = 1e-3;        // grid step
    long n_terms = 200000;  // series / node budget; must satisfy h * n_terms >= x
    double window = 40.0;   // integration upper limit for transforms
};

// Grunwald-Letnikov differintegral
//   h^{-lambda} sum_{k=0}^{N} (-1)^k C(lambda, k) f(x - kh),  N = floor(x/h).
// Generalized binomials go through log-gamma with sign tracking (no
// overflow at N ~ 1e5); integer orders use the exact multiplicative
// recursion instead.  Summation is compensated, so chunk order is
// immaterial below 1e-12.
Complex grunwald_letnikov(const std::function<Complex(double)>& f, FractionalOrder order,
                          double x, const OracleConfig& cfg = {});

// Riemann-Liouville integral (1/Gamma(alpha)) integral_0^x (x-t)^{alpha-1} f(t) dt.
// For alpha < 1 the endpoint singularity is absorbed by the substitution
// u = (x-t)^alpha, under which the weight becomes constant.
Complex riemann_liouville_integral(const std::function<Complex(double)>& f, double alpha,
                                   double x, const OracleConfig& cfg = {});

// Centered difference (f(x+h) - f(x-h)) / (2h).
Complex finite_difference(const std::function<Complex(double)>& f, double x, double h);

}  // namespace fracdiff::oracles

#endif
