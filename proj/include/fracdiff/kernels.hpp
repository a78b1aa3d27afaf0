#ifndef FRACDIFF_KERNELS_HPP
#define FRACDIFF_KERNELS_HPP

#include "fracdiff/types.hpp"

namespace fracdiff::kernels {

// The analyzed signal family.  PowerLaw(mu, normalized) is x_+^mu / Gamma(mu+1)
// when normalized (the semigroup-friendly form), plain x_+^mu otherwise.
enum class KernelVariant { HeavisideStep, DiracDelta, ComplexExponential, PowerLaw };

struct ClosedFormKernel {
    KernelVariant variant = KernelVariant::HeavisideStep;
    double frequency = 0.0;   // b in U(x) e^{jbx}
    double exponent = 0.0;    // mu in the power law
    bool normalized = true;

    static ClosedFormKernel step() { return {KernelVariant::HeavisideStep, 0, 0, true}; }
    static ClosedFormKernel delta() { return {KernelVariant::DiracDelta, 0, 0, true}; }
    static ClosedFormKernel exponential(double b) {
        return {KernelVariant::ComplexExponential, b, 0, true};
    }
    static ClosedFormKernel power(double mu, bool normalized = true) {
        return {KernelVariant::PowerLaw, 0, mu, normalized};
    }
};

// d^lambda U(x) = x_+^{-lambda} / Gamma(1-lambda); for lambda = -n the
// n-fold integral x_+^n / n! plus the optional constants polynomial.
// Positive integer orders are distributional (delta^(n-1)) and refuse
// pointwise evaluation.
double differint_step(FractionalOrder order, double x,
                      const IntegrationConstants& constants = {});

// d^lambda delta(x) = x^{-lambda-1} / Gamma(-lambda) for x > 0; lambda = -n
// gives x^{n-1}/(n-1)!.  Non-negative integer orders are distributional.
double differint_delta(FractionalOrder order, double x);

// d^lambda [U(x) e^{jbx}] = (jb)^lambda e^{jbx} [1 + lambda Gamma(-lambda, jbx) / Gamma(1-lambda)]
// on the principal branch; integer orders collapse to (jb)^n e^{jbx} exactly.
Complex differint_exp(FractionalOrder order, double b, double x);

// d^lambda [x_+^mu / Gamma(mu+1)] = x^{mu-lambda} / Gamma(mu-lambda+1) for x > 0.
// A gamma pole in the denominator yields exact zero.
double differint_power(FractionalOrder order, double mu, double x);

// Kernel-dispatching convenience used by the table front end.
Complex differint(const ClosedFormKernel& kernel, FractionalOrder order, double x,
                  const IntegrationConstants& constants = {});

}  // namespace fracdiff::kernels

#endif
