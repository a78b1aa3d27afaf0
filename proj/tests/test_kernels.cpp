#include <cmath>

#include <doctest.h>

#include "fracdiff/errors.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/oracles.hpp"
#include "fracdiff/specfun.hpp"

using namespace fracdiff;
using namespace fracdiff::kernels;
using doctest::Approx;

TEST_CASE("step kernel closed forms") {
    CHECK(differint_step(0.5, 1.0) == Approx(0.56418958354775628695).epsilon(1e-14));
    CHECK(differint_step(0.0, 2.3) == 1.0);
    CHECK(differint_step(0.0, -1.0) == 0.0);
    CHECK(differint_step(-2.0, 3.0) == Approx(4.5).epsilon(1e-15));
    CHECK(differint_step(-1.0, 7.0) == Approx(7.0).epsilon(1e-15));
    CHECK(differint_step(0.5, -2.0) == 0.0);  // support on x > 0
}

TEST_CASE("step kernel distributional and constants errors") {
    try {
        differint_step(1.0, 0.5);
        FAIL("expected DistributionalError");
    } catch (const DistributionalError& e) {
        CHECK(e.symbol == "delta^(0)");
        CHECK(e.derivative_order == 0);
    }
    try {
        differint_step(3.0, 0.5);
        FAIL("expected DistributionalError");
    } catch (const DistributionalError& e) {
        CHECK(e.symbol == "delta^(2)");
    }
    CHECK_THROWS_AS(differint_step(0.5, 1.0, IntegrationConstants{Complex(1.0)}),
                    DomainError);  // constants need a negative integer order
    CHECK_THROWS_AS(
        differint_step(-1.0, 1.0, IntegrationConstants{Complex(1.0), Complex(2.0)}),
        DomainError);  // more constants than the integral order
    CHECK_THROWS_AS(differint_step(-2.0, 1.0, IntegrationConstants{Complex(0.0, 1.0)}),
                    DomainError);  // complex constants belong to the transform path
    CHECK_THROWS_AS(differint_step(0.5, 0.0), SingularError);

    // n-fold integral with constants: x^2/2 + a0 + a1 x at x = 3.
    const IntegrationConstants cs{Complex(1.0), Complex(0.5)};
    CHECK(differint_step(-2.0, 3.0, cs) == Approx(4.5 + 1.0 + 1.5).epsilon(1e-15));
}

TEST_CASE("step kernel agrees with the GL oracle") {
    oracles::OracleConfig cfg;
    cfg.h = 1e-4;
    const auto U = [](double) { return Complex(1.0); };
    for (double x : {0.5, 1.0, 2.0}) {
        const Complex gl = oracles::grunwald_letnikov(U, 0.5, x, cfg);
        CHECK(std::abs(gl - Complex(differint_step(0.5, x))) <
              1e-3 * std::abs(differint_step(0.5, x)));
    }
}

TEST_CASE("delta kernel") {
    CHECK(differint_delta(-1.0, 5.0) == 1.0);
    CHECK(differint_delta(-3.0, 2.0) == Approx(2.0).epsilon(1e-15));  // x^2/2!
    CHECK(differint_delta(0.5, 1.0) ==
          Approx(-0.28209479177387814347).epsilon(1e-14));

    try {
        differint_delta(0.0, 1.0);
        FAIL("expected DistributionalError");
    } catch (const DistributionalError& e) {
        CHECK(e.symbol == "delta^(0)");
    }
    CHECK_THROWS_AS(differint_delta(2.0, 1.0), DistributionalError);
    CHECK_THROWS_AS(differint_delta(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(differint_delta(0.5, -1.0), DomainError);
}

TEST_CASE("delta kernel sign against a narrow-gaussian GL run") {
    // A gaussian centred inside the support stands in for delta(t - t0);
    // the GL result must track the closed form at the shifted point.
    const double t0 = 0.2, eps = 0.02;
    const auto bump = [t0, eps](double t) {
        const double u = (t - t0) / eps;
        return Complex(std::exp(-0.5 * u * u) / (eps * std::sqrt(2.0 * kPi)));
    };
    oracles::OracleConfig cfg;
    cfg.h = 1e-3;
    const Complex gl = oracles::grunwald_letnikov(bump, 0.5, 1.2, cfg);
    const double want = differint_delta(0.5, 1.0);
    CHECK(gl.real() < 0.0);
    CHECK(gl.real() == Approx(want).epsilon(2e-2));
}

TEST_CASE("exponential kernel") {
    // Integer orders collapse exactly.
    const Complex one = differint_exp(1.0, 2.0, 0.7);
    CHECK(std::abs(one - Complex(0.0, 2.0) * std::exp(Complex(0.0, 1.4))) < 1e-15);
    CHECK(std::abs(differint_exp(0.0, 3.0, 1.0) - std::exp(Complex(0.0, 3.0))) <
          1e-15);
    const Complex minus = differint_exp(-1.0, 2.0, 1.0);
    CHECK(std::abs(minus - std::exp(Complex(0.0, 2.0)) / Complex(0.0, 2.0)) < 1e-15);

    // Fractional order: sqrt(j) e^j [1 + Gamma(-1/2, j)/(2 sqrt(pi))].
    const Complex half = differint_exp(0.5, 1.0, 1.0);
    const Complex want(-0.10549467602990728001, 0.84605678672415291429);
    CHECK(std::abs(half - want) < 1e-13);

    CHECK_THROWS_AS(differint_exp(0.5, 0.0, 1.0), DegenerateError);
    CHECK_THROWS_AS(differint_exp(0.5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(differint_exp(0.5, 1.0, -2.0), DomainError);
}

TEST_CASE("exponential kernel agrees with the GL oracle") {
    const auto f = [](double t) {
        return t < 0.0 ? Complex(0.0) : std::exp(Complex(0.0, t));
    };
    oracles::OracleConfig cfg;
    cfg.h = 5e-4;
    const Complex gl = oracles::grunwald_letnikov(f, 0.5, 1.0, cfg);
    const Complex want = differint_exp(0.5, 1.0, 1.0);
    CHECK(std::abs(gl - want) / std::abs(want) < 1e-3);
}

TEST_CASE("power-law kernel") {
    CHECK(differint_power(-1.0, 0.0, 2.0) == Approx(2.0).epsilon(1e-15));
    CHECK(differint_power(0.25, 0.75, 1.5) ==
          Approx(1.3819765978853419171).epsilon(1e-14));

    // d^{1/2} d^{1/2} x_+ = 1 for x > 0, staged through the family.
    const double stage1_mu = 1.0 - 0.5;  // order 0.5 applied to mu = 1
    CHECK(differint_power(0.5, stage1_mu, 2.7) == Approx(1.0).epsilon(1e-15));

    // A gamma pole in the denominator gives exact zero, not overflow.
    CHECK(differint_power(1.5, 0.5, 1.3) == 0.0);
    CHECK(differint_power(2.5, 0.5, 0.7) == 0.0);

    CHECK_THROWS_AS(differint_power(0.5, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(differint_power(0.5, 0.5, -1.0), DomainError);
}

TEST_CASE("power-law kernel against the GL oracle") {
    const double mu = 0.75;
    const auto f = [mu](double t) {
        return Complex(specfun::power_plus(t, mu) * specfun::reciprocal_gamma(mu + 1.0));
    };
    oracles::OracleConfig cfg;
    cfg.h = 1e-3;
    const Complex gl = oracles::grunwald_letnikov(f, 0.25, 1.5, cfg);
    CHECK(std::abs(gl.real() - differint_power(0.25, mu, 1.5)) /
              differint_power(0.25, mu, 1.5) <
          1e-2);
}

TEST_CASE("kernel dispatcher") {
    const ClosedFormKernel exp_kernel = ClosedFormKernel::exponential(2.0);
    CHECK(std::abs(differint(exp_kernel, 0.0, 1.0) - std::exp(Complex(0.0, 2.0))) <
          1e-15);
    const ClosedFormKernel raw_power = ClosedFormKernel::power(1.0, false);
    // Unnormalised x_+^1: d^0 gives x itself.
    CHECK(differint(raw_power, 0.0, 3.0).real() == Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(
        differint(ClosedFormKernel::delta(), 0.5, 1.0, IntegrationConstants{Complex(1.0)}),
        DomainError);
}
