#include <cmath>

#include <doctest.h>

#include "fracdiff/errors.hpp"
#include "fracdiff/kernels.hpp"
#include "fracdiff/oracles.hpp"

using namespace fracdiff;
using namespace fracdiff::oracles;
using doctest::Approx;

namespace {
const auto U = [](double) { return Complex(1.0); };
const auto ramp = [](double t) { return Complex(t); };
const auto osc = [](double t) { return std::exp(Complex(0.0, t)); };
}  // namespace

TEST_CASE("grunwald-letnikov on reference signals") {
    OracleConfig cfg;
    cfg.h = 1e-4;
    const Complex half = grunwald_letnikov(U, 0.5, 1.0, cfg);
    CHECK(half.real() == Approx(0.564190).epsilon(1e-3));
    CHECK(std::abs(half.imag()) < 1e-12);

    // Derivative of a constant away from the jump vanishes identically
    // (the two GL weights cancel).
    cfg.h = 1e-3;
    CHECK(std::abs(grunwald_letnikov(U, 1.0, 1.0, cfg)) < 1e-12);

    // Integral of t over [0, 2].
    const Complex ii = grunwald_letnikov(ramp, -1.0, 2.0, cfg);
    CHECK(ii.real() == Approx(2.0).epsilon(5e-3));
}

TEST_CASE("grunwald-letnikov resolution guards") {
    OracleConfig cfg;
    cfg.h = 0.2;
    CHECK_THROWS_AS(grunwald_letnikov(U, 0.5, 1.0, cfg), ResolutionError);

    cfg.h = 1e-3;
    cfg.n_terms = 100;  // h * n_terms < x
    CHECK_THROWS_AS(grunwald_letnikov(U, 0.5, 1.0, cfg), ResolutionError);

    cfg.n_terms = 200000;
    CHECK_THROWS_AS(grunwald_letnikov(U, 0.5, 0.0, cfg), DomainError);
    cfg.h = 0.0;
    CHECK_THROWS_AS(grunwald_letnikov(U, 0.5, 1.0, cfg), DomainError);
}

TEST_CASE("riemann-liouville integral") {
    OracleConfig cfg;
    CHECK(riemann_liouville_integral(U, 1.0, 3.0, cfg).real() ==
          Approx(3.0).epsilon(1e-12));

    // Half integral of the step: the endpoint substitution makes the
    // integrand constant, so this is exact.
    CHECK(riemann_liouville_integral(U, 0.5, 1.0, cfg).real() ==
          Approx(1.1283791670955125739).epsilon(1e-12));

    const Complex e = riemann_liouville_integral(osc, 1.0, kPi, cfg);
    CHECK(std::abs(e - Complex(0.0, 2.0)) < 1e-5);  // (e^{j pi} - 1)/j

    CHECK_THROWS_AS(riemann_liouville_integral(U, 0.0, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(riemann_liouville_integral(U, -0.5, 1.0, cfg), DomainError);
}

TEST_CASE("finite differences") {
    CHECK(finite_difference([](double t) { return Complex(t * t); }, 1.0, 1e-5).real() ==
          Approx(2.0).epsilon(1e-9));

    const Complex d = finite_difference([](double t) { return std::exp(Complex(0.0, 2.0 * t)); },
                                        1.0, 1e-5);
    const Complex want = Complex(0.0, 2.0) * std::exp(Complex(0.0, 2.0));
    CHECK(std::abs(d - want) < 1e-8);

    // Composition: d/dx of the order -1/2 step result matches order +1/2.
    const Complex comp = finite_difference(
        [](double t) { return Complex(kernels::differint_step(-0.5, t)); }, 1.0, 1e-5);
    CHECK(std::abs(comp - Complex(kernels::differint_step(0.5, 1.0))) < 1e-5);

    CHECK_THROWS_AS(finite_difference(ramp, 1.0, 0.0), DomainError);
}

TEST_CASE("oracle concordance: GL at -alpha equals RL at alpha") {
    OracleConfig cfg;
    cfg.h = 5e-4;
    for (double alpha : {0.5, 1.0})
        for (double x : {0.5, 1.0, 3.0}) {
            const Complex gl = grunwald_letnikov(osc, -alpha, x, cfg);
            const Complex rl = riemann_liouville_integral(osc, alpha, x, cfg);
            CHECK(std::abs(gl - rl) / std::abs(rl) < 1e-3);
        }
}

TEST_CASE("halving h improves the GL approximation") {
    const double closed = kernels::differint_step(0.5, 1.0);
    OracleConfig coarse, fine;
    coarse.h = 2e-3;
    fine.h = 1e-3;
    const double e0 = std::abs(grunwald_letnikov(U, 0.5, 1.0, coarse).real() - closed);
    const double e1 = std::abs(grunwald_letnikov(U, 0.5, 1.0, fine).real() - closed);
    CHECK(e1 <= e0 + 1e-9);
}
