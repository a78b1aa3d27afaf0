#include <cmath>

#include <doctest.h>

#include "fracdiff/cable.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/oracles.hpp"

using namespace fracdiff;
using namespace fracdiff::cable;
using doctest::Approx;

namespace {
const CableParams unit{1.0, 1.0, 1.0, Complex(1.0, 0.0)};
}

TEST_CASE("voltage field") {
    // Boundary condition V(0, t) = V0 e^{j omega t}.
    for (double t : {0.0, 0.4, 2.9}) {
        const Complex want(std::cos(t), std::sin(t));
        CHECK(std::abs(voltage(unit, 0.0, t) - want) < 1e-15);
    }

    // Decay far down the line.
    CHECK(std::abs(voltage(unit, 200.0, 1.0)) < 1e-50);
    CHECK(voltage(unit, -0.5, 1.0) == Complex(0.0));

    // k = 1/sqrt(2) at unit parameters.
    const Complex v = voltage(unit, 1.0, 0.0);
    const Complex want(0.37485280862038229994, -0.3203156354342154995);
    CHECK(std::abs(v - want) < 1e-15);

    CableParams bad = unit;
    bad.resistance = -1.0;
    CHECK_THROWS_AS(voltage(bad, 1.0, 1.0), DomainError);
}

TEST_CASE("boundary flux") {
    const double t = 0.3;
    // Matches dV/dx extrapolated to the driven end.
    const double x0 = 1e-7;
    const Complex fd = oracles::finite_difference(
        [&](double x) { return voltage(unit, x, t); }, x0, 1e-8);
    CHECK(std::abs(fd - boundary_flux(unit, t)) < 1e-6);

    // |g| = sqrt(omega R C) |V0| and arg(-(1+j)) = -3 pi / 4.
    CHECK(std::abs(boundary_flux(unit, 0.7)) == Approx(1.0).epsilon(1e-14));
    CHECK(std::arg(boundary_flux(unit, 0.0) / unit.drive_amplitude) ==
          Approx(-3.0 * kPi / 4.0).epsilon(1e-14));
}

TEST_CASE("current field") {
    // i = -(1/R) dV/dx against centered differences.
    for (double x : {0.3, 1.0, 1.7})
        for (double t : {0.25, 1.5}) {
            const Complex fd = oracles::finite_difference(
                [&](double xi) { return voltage(unit, xi, t); }, x, 1e-5);
            const Complex want = -fd / unit.resistance;
            CHECK(std::abs(current(unit, x, t) - want) / std::abs(want) < 1e-6);
        }

    // |i| / |V| = sqrt(omega C / R) everywhere.
    const CableParams p{2.0, 0.5, 3.0, Complex(0.4, 0.9)};
    const double ratio = std::abs(current(p, 0.8, 0.6)) / std::abs(voltage(p, 0.8, 0.6));
    CHECK(ratio == Approx(std::sqrt(p.omega * p.capacitance / p.resistance))
                       .epsilon(1e-13));

    // x -> 0+ tends to -g(t)/R.
    const Complex near = current(unit, 1e-7, 0.9);
    CHECK(std::abs(near + boundary_flux(unit, 0.9) / unit.resistance) < 1e-6);

    CHECK_THROWS_AS(current(unit, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(current(unit, -1.0, 1.0), DomainError);
}

TEST_CASE("half-order time derivative of the voltage") {
    // Large omega t: the correction dies and the factor tends to sqrt(j omega).
    const double t = 1e6;
    const Complex h = half_derivative_voltage(unit, 0.0, t);
    const Complex limit = principal_pow(Complex(0.0, unit.omega), 0.5) *
                          voltage(unit, 0.0, t);
    CHECK(std::abs(h - limit) < 1e-8);

    // Exact cross-module agreement with the exponential kernel at x = 0.
    const Complex a = half_derivative_voltage(unit, 0.0, 1.0);
    const Complex b = kernels::differint_exp(0.5, 1.0, 1.0);
    CHECK(std::abs(a - b) / std::abs(b) < 1e-14);

    CHECK_THROWS_AS(half_derivative_voltage(unit, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(half_derivative_voltage(unit, 0.0, -1.0), DomainError);
}

TEST_CASE("half-order derivative against the GL oracle in time") {
    const double x = 0.5, t = 2.0;
    const auto v_of_t = [&](double tau) {
        return tau < 0.0 ? Complex(0.0) : voltage(unit, x, tau);
    };
    oracles::OracleConfig cfg;
    cfg.h = 1e-3;
    const Complex gl = oracles::grunwald_letnikov(v_of_t, 0.5, t, cfg);
    const Complex closed = half_derivative_voltage(unit, x, t);
    CHECK(std::abs(gl - closed) / std::abs(closed) < 1e-3);
}

TEST_CASE("current-law residuals") {
    const auto r = current_voltage_residual(unit, 1.0, 1.0);
    CHECK(r.exact <= 1e-9);
    CHECK(r.habitual > r.exact);  // the habitual law carries the correction error

    // Habitual law improves as omega t grows.
    const auto late = current_voltage_residual(unit, 0.5, 100.0);
    const auto early = current_voltage_residual(unit, 0.5, 1.0);
    CHECK(late.habitual < early.habitual);
    CHECK(late.habitual <= 1e-2 * std::abs(current(unit, 0.5, 100.0)));

    // Linearity in the drive amplitude.
    CableParams scaled = unit;
    scaled.drive_amplitude = Complex(0.0, 3.7);
    const auto rs = current_voltage_residual(scaled, 0.5, 1.0);
    const auto r1 = current_voltage_residual(unit, 0.5, 1.0);
    CHECK(rs.habitual == Approx(3.7 * r1.habitual).epsilon(1e-12));
}

TEST_CASE("PDE residual") {
    const double h = 1e-3;
    const double res = pde_residual(unit, 1.0, 1.0, h);
    CHECK(res <= 1e-5 * std::abs(voltage(unit, 1.0, 1.0)));

    // Second-order stencil: quartering under h -> h/2.
    const double ratio = res / pde_residual(unit, 1.0, 1.0, h / 2.0);
    CHECK(ratio == Approx(4.0).epsilon(0.13));

    // Stencil too close to the x = 0 kink.
    CHECK_THROWS_AS(pde_residual(unit, 0.01, 1.0, 1e-3), DomainError);
}
