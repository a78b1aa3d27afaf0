#include "fracdiff/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "fracdiff/errors.hpp"
#include "fracdiff/specfun.hpp"

namespace fracdiff::oracles {

namespace {

struct CompensatedSum {
    Complex sum{0.0};
    Complex carry{0.0};
    void add(Complex v) {
        const Complex y = v - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// (-1)^k C(lambda, k) for non-integer lambda via signed log-gamma:
// C(lambda, k) = Gamma(lambda+1) / (Gamma(k+1) Gamma(lambda-k+1)).
double signed_binomial_term(double log_gamma_top, int sign_top, double lambda, long k) {
    const auto den1 = specfun::signed_log_gamma(static_cast<double>(k) + 1.0);
    const auto den2 = specfun::signed_log_gamma(lambda - static_cast<double>(k) + 1.0);
    if (den2.sign == 0) return 0.0;  // integer lambda handled elsewhere
    const double log_c = log_gamma_top - den1.log_abs - den2.log_abs;
    const int sign = sign_top * den1.sign * den2.sign * ((k % 2 == 0) ? 1 : -1);
    return sign * std::exp(log_c);
}

}  // namespace

Complex grunwald_letnikov(const std::function<Complex(double)>& f, FractionalOrder order,
                          double x, const OracleConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("evaluation point must satisfy x > 0");
    if (!(cfg.h > 0.0)) throw DomainError("step must be positive");
    if (cfg.h * static_cast<double>(cfg.n_terms) < x)
        throw ResolutionError("term budget too small: h * n_terms < x");

    const long N = static_cast<long>(std::floor(x / cfg.h));
    if (N < 8) throw ResolutionError("step too large: fewer than 8 samples on [0, x]");

    CompensatedSum acc;
    if (order.is_integer()) {
        const double n = static_cast<double>(order.nearest_integer());
        double c = 1.0;  // C(n, k), exact multiplicative recursion
        for (long k = 0; k <= N; ++k) {
            if (c != 0.0) acc.add(((k % 2 == 0) ? c : -c) * f(x - k * cfg.h));
            c *= (n - k) / (k + 1.0);
            if (order.nearest_integer() >= 0 && k >= order.nearest_integer()) c = 0.0;
        }
        return acc.sum * std::pow(cfg.h, -n);
    }

    const auto top = specfun::signed_log_gamma(order.lambda + 1.0);
    for (long k = 0; k <= N; ++k) {
        const double w = signed_binomial_term(top.log_abs, top.sign, order.lambda, k);
        if (w != 0.0) acc.add(w * f(x - k * cfg.h));
    }
    return acc.sum * std::pow(cfg.h, -order.lambda);
}

Complex riemann_liouville_integral(const std::function<Complex(double)>& f, double alpha,
                                   double x, const OracleConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("fractional integral requires alpha > 0");
    if (!(x > 0.0)) throw DomainError("evaluation point must satisfy x > 0");

    const long n = std::clamp<long>(cfg.n_terms, 64, 4096);
    CompensatedSum acc;
    if (alpha < 1.0) {
        // u = (x - t)^alpha turns the weight into a constant:
        //   integral = (1/alpha) integral_0^{x^alpha} f(x - u^{1/alpha}) du.
        const double U = std::pow(x, alpha);
        const double du = U / static_cast<double>(n - 1);
        for (long i = 0; i < n; ++i) {
            const double u = du * static_cast<double>(i);
            const double t = std::max(0.0, x - std::pow(u, 1.0 / alpha));
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            acc.add(w * f(t));
        }
        return acc.sum * du / alpha * specfun::reciprocal_gamma(alpha);
    }

    const double dt = x / static_cast<double>(n - 1);
    for (long i = 0; i < n; ++i) {
        const double t = dt * static_cast<double>(i);
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc.add(w * std::pow(x - t, alpha - 1.0) * f(t));
    }
    return acc.sum * dt * specfun::reciprocal_gamma(alpha);
}

Complex finite_difference(const std::function<Complex(double)>& f, double x, double h) {
    if (!(h > 0.0)) throw DomainError("difference step must be positive");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace fracdiff::oracles
