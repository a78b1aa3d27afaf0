#ifndef FRACDIFF_CABLE_HPP
#define FRACDIFF_CABLE_HPP

#include "fracdiff/types.hpp"

namespace fracdiff::cable {

// Semi-infinite RC line driven by V0 e^{j omega t} at x = 0.  All fields
// keep the full complex signal convention; the physical quantities are
// the real parts, taken (if at all) at presentation time.
struct CableParams {
    double resistance = 1.0;    // R per unit length, ohm/m
    double capacitance = 1.0;   // C per unit length, F/m
    double omega = 1.0;         // drive angular frequency, rad/s
    Complex drive_amplitude = Complex(1.0, 0.0);  // V0, volts

    // k = sqrt(omega R C / 2), the shared attenuation and phase constant.
    double attenuation() const;
    void validate() const;  // throws DomainError unless R, C, omega > 0
};

struct FieldSample {
    double x = 0.0;
    double t = 0.0;
    Complex value{0.0};
};

// V(x,t) = V0 U(x) e^{-kx} e^{j(omega t - kx)}; zero for x < 0.
Complex voltage(const CableParams& p, double x, double t);

// g(t) = dV/dx at x -> 0+:  -(1+j) k V0 e^{j omega t}.
Complex boundary_flux(const CableParams& p, double t);

// i(x,t) = -(1/R) dV/dx = (1+j) sqrt(omega C / 2R) V0 e^{-kx} e^{j(omega t - kx)}, x > 0.
Complex current(const CableParams& p, double x, double t);

// Half-order time derivative of the voltage field,
//   (j omega)^{1/2} [1 + Gamma(-1/2, j omega t) / (2 sqrt(pi))] V0 e^{-kx} e^{j(omega t - kx)},
// requiring t > 0 (the incomplete-gamma correction diverges at t = 0).
Complex half_derivative_voltage(const CableParams& p, double x, double t);

struct CurrentLawResidual {
    // |i - sqrt(C/R) (d^{1/2}V/dt^{1/2} - (j omega)^{1/2} Gamma(-1/2, j omega t)/(2 sqrt(pi)) V)|;
    // an algebraic identity of the closed forms, zero to rounding.
    double exact;
    // |i - sqrt(C/R) d^{1/2}V/dt^{1/2}|: the habitual half-order law, off by
    // the correction term, decaying as omega t grows.
    double habitual;
};
CurrentLawResidual current_voltage_residual(const CableParams& p, double x, double t);

// |d2V/dx2 - RC dV/dt| by centered differences on the closed-form field;
// pure discretization error, O(h^2).  Requires x > 10 h so the stencil
// stays clear of the x = 0 kink.
double pde_residual(const CableParams& p, double x, double t, double h);

}  // namespace fracdiff::cable

#endif
