#include "fracdiff/kernels.hpp"

#include <cmath>
#include <string>

#include "fracdiff/errors.hpp"
#include "fracdiff/specfun.hpp"

namespace fracdiff::kernels {

namespace {

using specfun::power_plus;
using specfun::reciprocal_gamma;

double real_polynomial(const IntegrationConstants& constants, double x) {
    for (const Complex& c : constants.coefficients)
        if (c.imag() != 0.0)
            throw DomainError(
                "complex integration constants require the complex-valued transform path");
    return constants.polynomial(x).real();
}

[[noreturn]] void throw_distributional(long n) {
    throw DistributionalError("delta^(" + std::to_string(n) + ")", n);
}

}  // namespace

double differint_step(FractionalOrder order, double x,
                      const IntegrationConstants& constants) {
    if (order.is_integer()) {
        const long n = order.nearest_integer();
        if (n > 0) throw_distributional(n - 1);  // d^n U = delta^(n-1)
        const long m = -n;
        if (static_cast<long>(constants.size()) > m)
            throw DomainError("at most n integration constants for an n-fold integral");
        const double poly = constants.empty() ? 0.0 : real_polynomial(constants, x);
        return power_plus(x, static_cast<double>(m)) *
                   reciprocal_gamma(static_cast<double>(m) + 1.0) +
               poly;
    }
    if (!constants.empty())
        throw DomainError("integration constants only apply to negative integer orders");
    return power_plus(x, -order.lambda) * reciprocal_gamma(1.0 - order.lambda);
}

double differint_delta(FractionalOrder order, double x) {
    if (order.is_integer() && order.nearest_integer() >= 0)
        throw_distributional(order.nearest_integer());  // d^n delta = delta^(n)
    if (x <= 0.0) throw DomainError("delta differintegral is a function only for x > 0");
    const double lambda = order.is_integer()
                              ? static_cast<double>(order.nearest_integer())
                              : order.lambda;
    return std::pow(x, -lambda - 1.0) * reciprocal_gamma(-lambda);
}

Complex differint_exp(FractionalOrder order, double b, double x) {
    if (b == 0.0)
        throw DegenerateError("b = 0 degenerates to the step kernel; use differint_step");
    if (x <= 0.0) throw DomainError("exponential differintegral requires x > 0");

    const Complex jb(0.0, b);
    const Complex phase = std::exp(Complex(0.0, b * x));
    if (order.is_integer())
        return integer_pow(jb, order.nearest_integer()) * phase;

    const double lambda = order.lambda;
    const Complex jbx(0.0, b * x);
    const Complex bracket =
        1.0 + lambda * specfun::upper_incomplete_gamma(-lambda, jbx) *
                  reciprocal_gamma(1.0 - lambda);
    return principal_pow(jb, lambda) * phase * bracket;
}

double differint_power(FractionalOrder order, double mu, double x) {
    if (x <= 0.0) throw DomainError("power-law differintegral requires x > 0");
    const double e = mu - order.lambda;
    return std::pow(x, e) * reciprocal_gamma(e + 1.0);
}

Complex differint(const ClosedFormKernel& kernel, FractionalOrder order, double x,
                  const IntegrationConstants& constants) {
    switch (kernel.variant) {
        case KernelVariant::HeavisideStep:
            return Complex(differint_step(order, x, constants), 0.0);
        case KernelVariant::DiracDelta:
            if (!constants.empty())
                throw DomainError("integration constants unsupported for the delta kernel");
            return Complex(differint_delta(order, x), 0.0);
        case KernelVariant::ComplexExponential:
            if (!constants.empty())
                throw DomainError(
                    "integration constants unsupported for the exponential kernel");
            return differint_exp(order, kernel.frequency, x);
        case KernelVariant::PowerLaw: {
            if (!constants.empty())
                throw DomainError("integration constants unsupported for the power kernel");
            double v = differint_power(order, kernel.exponent, x);
            if (!kernel.normalized) v *= specfun::gamma(kernel.exponent + 1.0);
            return Complex(v, 0.0);
        }
    }
    throw DomainError("unknown kernel variant");
}

}  // namespace fracdiff::kernels
