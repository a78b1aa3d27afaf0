#include "fracdiff/transform.hpp"

#include <cmath>

#include "fracdiff/errors.hpp"

namespace fracdiff::transform {

namespace {

// Kahan-compensated complex accumulator; keeps the quadrature sum
// independent of chunking order to ~1e-12.
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

// Endpoint taper profiles on u in [0, 1] (0 = taper start, 1 = line end).
double bump_taper(double u) {
    if (u <= 0.0) return 1.0;
    if (u >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double tanh_sinh_taper(double u) {
    if (u <= 0.0) return 1.0;
    if (u >= 1.0) return 0.0;
    constexpr double kSteepness = 3.0;
    return 0.5 * (1.0 + std::tanh(0.5 * fracdiff::kPi *
                                  std::sinh(kSteepness * (1.0 - 2.0 * u))));
}

double taper(QuadratureRule rule, double u) {
    return rule == QuadratureRule::Trapezoid ? bump_taper(u) : tanh_sinh_taper(u);
}

void validate(const LaplaceImage& G, FractionalOrder order, double x,
              const BromwichConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("inversion point must satisfy x > 0");
    if (!(cfg.a > 0.0)) throw ContourError("line abscissa must be positive");
    if (!(cfg.a > G.abscissa))
        throw ContourError("line abscissa must exceed the image abscissa");
    if (cfg.nodes < 64) throw DomainError("at least 64 quadrature nodes required");
    if (!(cfg.half_extent > 0.0)) throw DomainError("half_extent must be positive");
    if (!(cfg.taper_fraction > 0.0 && cfg.taper_fraction < 1.0))
        throw DomainError("taper_fraction must lie in (0, 1)");
    if (order.lambda > G.decay_exponent - 0.01)
        throw DomainError(
            "order exceeds the image's convergence cap; split off whole derivatives");
    if (cfg.half_extent * x / cfg.nodes > fracdiff::kPi / 4.0)
        throw ResolutionError("oscillation too fast for the node count");
}

}  // namespace

LaplaceImage step_image() {
    return {[](Complex s) { return 1.0 / s; }, 0.0, 1.0};
}

LaplaceImage exp_image(double b) {
    return {[b](Complex s) { return 1.0 / (s - Complex(0.0, b)); }, 0.0, 1.0};
}

LaplaceImage power_image(double mu) {
    return {[mu](Complex s) { return std::exp(-(mu + 1.0) * principal_log(s)); }, 0.0,
            mu + 1.0};
}

LaplaceValue laplace_numeric(const SampledSignal& f, Complex s, double tail_tolerance) {
    if (!(s.real() > 0.0))
        throw RegionError("one-sided transform requires Re s > 0");
    if (f.start < 0.0) throw DomainError("signal support must start at x >= 0");
    if (!(f.step > 0.0)) throw DomainError("grid step must be positive");
    if (f.values.size() < 2) throw DomainError("need at least two samples");

    CompensatedSum acc;
    const std::size_t n = f.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.start + static_cast<double>(i) * f.step;
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc.add(w * f.values[i] * std::exp(-s * x));
    }

    // Tail beyond T, bounded by the envelope of the last tenth of the
    // samples: |f| <= M there implies |tail| <= M e^{-Re s T} / Re s.
    const double T = f.start + static_cast<double>(n - 1) * f.step;
    double m = 0.0;
    for (std::size_t i = n - std::max<std::size_t>(1, n / 10); i < n; ++i)
        m = std::max(m, std::abs(f.values[i]));
    const double tail = m * std::exp(-s.real() * T) / s.real();

    return {acc.sum * f.step, tail, tail > tail_tolerance};
}

Inversion bromwich_differint(const LaplaceImage& G, FractionalOrder order, double x,
                             const BromwichConfig& cfg) {
    validate(G, order, x, cfg);

    const double S = cfg.half_extent;
    const int n = cfg.nodes;
    const double d = 2.0 * S / (n - 1);
    const double taper_start = S * (1.0 - cfg.taper_fraction);
    const double lambda = order.lambda;

    CompensatedSum acc;
    double envelope_last_decade = 0.0;
    for (int i = 0; i < n; ++i) {
        const double sigma = -S + d * i;
        const Complex s(cfg.a, sigma);
        const Complex integrand =
            G.evaluate(s) * principal_pow(s, lambda) * std::polar(1.0, sigma * x);
        if (std::abs(sigma) >= S / 10.0)
            envelope_last_decade = std::max(envelope_last_decade, std::abs(integrand));
        double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        if (std::abs(sigma) > taper_start)
            w *= taper(cfg.rule, (std::abs(sigma) - taper_start) / (S - taper_start));
        acc.add(w * integrand);
    }

    const double prefactor = std::exp(cfg.a * x) / (2.0 * fracdiff::kPi);
    // Discarded-tail estimate: the oscillatory remainder beyond the line
    // ends contributes at most about one un-cancelled half period, of
    // measure pi/x per tail, at the envelope level of the last decade.
    const double bound = envelope_last_decade * std::exp(cfg.a * x) / x;

    return {prefactor * d * acc.sum, bound};
}

Inversion fourier_form_differint(const LaplaceImage& G, FractionalOrder order, double x,
                                 const IntegrationConstants& constants,
                                 const BromwichConfig& cfg) {
    if (constants.empty()) return bromwich_differint(G, order, x, cfg);
    if (!order.is_integer() || order.nearest_integer() >= 0)
        throw DomainError("integration constants apply only to negative integer orders");
    const long m = -order.nearest_integer();
    if (static_cast<long>(constants.size()) > m)
        throw DomainError("at most n integration constants for an n-fold integral");
    Inversion base = bromwich_differint(G, order, x, cfg);
    base.value += constants.polynomial(x);
    return base;
}

Inversion bromwich_differint_split(const LaplaceImage& G, FractionalOrder order, double x,
                                   const BromwichConfig& cfg, double fd_step) {
    const double cap = G.decay_exponent - 0.01;
    if (order.lambda <= cap) return bromwich_differint(G, order, x, cfg);

    const int m = static_cast<int>(std::ceil(order.lambda - cap));
    const double reduced = order.lambda - m;
    if (!(x > m * fd_step))
        throw DomainError("differencing stencil crosses the origin");

    // m-th centered difference of the reduced-order inversion.
    std::vector<double> binom(m + 1);
    binom[0] = 1.0;
    for (int k = 1; k <= m; ++k) binom[k] = binom[k - 1] * (m - k + 1) / k;

    CompensatedSum acc;
    double bound = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double xk = x + (m / 2.0 - k) * fd_step;
        const Inversion part = bromwich_differint(G, reduced, xk, cfg);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * binom[k] * part.value);
        bound = std::max(bound, part.truncation_bound);
    }
    return {acc.sum / std::pow(fd_step, m), bound / std::pow(fd_step, m)};
}

}  // namespace fracdiff::transform
