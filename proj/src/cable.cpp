#include "fracdiff/cable.hpp"

#include <cmath>

#include "fracdiff/errors.hpp"
#include "fracdiff/specfun.hpp"

namespace fracdiff::cable {

namespace {

// e^{-kx} e^{j(omega t - kx)} for x >= 0.
Complex envelope(const CableParams& p, double x, double t) {
    const double k = p.attenuation();
    return std::exp(-k * x) * std::polar(1.0, p.omega * t - k * x);
}

Complex half_derivative_factor(const CableParams& p, double t) {
    const Complex jwt(0.0, p.omega * t);
    const Complex correction =
        specfun::upper_incomplete_gamma(-0.5, jwt) / (2.0 * kSqrtPi);
    return principal_pow(Complex(0.0, p.omega), 0.5) * (1.0 + correction);
}

}  // namespace

double CableParams::attenuation() const {
    return std::sqrt(omega * resistance * capacitance / 2.0);
}

void CableParams::validate() const {
    if (!(resistance > 0.0 && capacitance > 0.0 && omega > 0.0))
        throw DomainError("cable parameters R, C, omega must be strictly positive");
}

Complex voltage(const CableParams& p, double x, double t) {
    p.validate();
    if (x < 0.0) return Complex(0.0);
    return p.drive_amplitude * envelope(p, x, t);
}

Complex boundary_flux(const CableParams& p, double t) {
    p.validate();
    const double k = p.attenuation();
    return -Complex(1.0, 1.0) * k * p.drive_amplitude * std::polar(1.0, p.omega * t);
}

Complex current(const CableParams& p, double x, double t) {
    p.validate();
    if (!(x > 0.0)) throw DomainError("current is defined on the open line x > 0");
    const double amplitude = std::sqrt(p.omega * p.capacitance / (2.0 * p.resistance));
    return Complex(1.0, 1.0) * amplitude * p.drive_amplitude * envelope(p, x, t);
}

Complex half_derivative_voltage(const CableParams& p, double x, double t) {
    p.validate();
    if (!(t > 0.0))
        throw DomainError("half derivative requires t > 0: correction term diverges at 0");
    if (x < 0.0) return Complex(0.0);
    return half_derivative_factor(p, t) * p.drive_amplitude * envelope(p, x, t);
}

CurrentLawResidual current_voltage_residual(const CableParams& p, double x, double t) {
    p.validate();
    if (!(x > 0.0)) throw DomainError("residuals are defined on the open line x > 0");
    if (!(t > 0.0)) throw DomainError("residuals require t > 0");

    const Complex i = current(p, x, t);
    const Complex v = voltage(p, x, t);
    const Complex half = half_derivative_voltage(p, x, t);
    const double impedance = std::sqrt(p.capacitance / p.resistance);
    const Complex sqrt_jw = principal_pow(Complex(0.0, p.omega), 0.5);
    const Complex correction =
        sqrt_jw * specfun::upper_incomplete_gamma(-0.5, Complex(0.0, p.omega * t)) /
        (2.0 * kSqrtPi);

    const double exact = std::abs(i - impedance * (half - correction * v));
    const double habitual = std::abs(i - impedance * half);
    return {exact, habitual};
}

double pde_residual(const CableParams& p, double x, double t, double h) {
    p.validate();
    if (!(h > 0.0)) throw DomainError("stencil width must be positive");
    if (!(x > 10.0 * h))
        throw DomainError("x must exceed 10 h: stencil too close to the x = 0 kink");

    const Complex vxx = (voltage(p, x + h, t) - 2.0 * voltage(p, x, t) +
                         voltage(p, x - h, t)) /
                        (h * h);
    const Complex vt = (voltage(p, x, t + h) - voltage(p, x, t - h)) / (2.0 * h);
    return std::abs(vxx - p.resistance * p.capacitance * vt);
}

}  // namespace fracdiff::cable
