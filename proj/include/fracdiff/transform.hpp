#ifndef FRACDIFF_TRANSFORM_HPP
#define FRACDIFF_TRANSFORM_HPP

#include <functional>

#include "fracdiff/types.hpp"

namespace fracdiff::transform {

// A one-sided Laplace image G(s), defined for Re s > abscissa.
// decay_exponent p declares the large-|s| envelope |G(s)| ~ |s|^{-p}; it
// bounds the orders for which the inversion integral converges
// (lambda < p is required, enforced with a 0.01 margin).
struct LaplaceImage {
    std::function<Complex(Complex)> evaluate;
    double abscissa = 0.0;
    double decay_exponent = 1.0;
};

LaplaceImage step_image();              // 1/s
LaplaceImage exp_image(double b);       // 1/(s - jb)
LaplaceImage power_image(double mu);    // 1/s^{mu+1}, image of x_+^mu / Gamma(mu+1)

// Quadrature rule on the truncated vertical line.  Both rules use the
// uniform trapezoid grid (spectrally accurate for this smooth integrand);
// they differ in the endpoint taper that suppresses the truncation
// ringing of the oscillatory tail.  Trapezoid applies a C-infinity bump
// taper; TanhSinhMapped maps the taper ramp through tanh(sinh(.)), whose
// double-exponential rolloff is the stronger choice for slowly decaying
// images.
enum class QuadratureRule { Trapezoid, TanhSinhMapped };

struct BromwichConfig {
    double a = 1.0;               // line abscissa, must exceed the image abscissa
    double half_extent = 400.0;   // truncation of the imaginary range
    int nodes = 1 << 15;
    QuadratureRule rule = QuadratureRule::Trapezoid;
    double taper_fraction = 0.7;  // outer fraction of the line the taper occupies
};

struct Inversion {
    Complex value;
    double truncation_bound;  // estimated contribution discarded beyond the line ends
};

// Uniformly sampled complex signal on start + k*step.
struct SampledSignal {
    double start = 0.0;
    double step = 1.0;
    std::vector<Complex> values;
};

struct LaplaceValue {
    Complex value;
    double tail_bound;   // bound on the integral beyond the sampled range
    bool tail_warning;   // tail_bound exceeded the requested tolerance
};

// Trapezoid approximation of integral_0^T f(x) e^{-sx} dx over the sampled
// range; the tail beyond T is bounded and reported.
LaplaceValue laplace_numeric(const SampledSignal& f, Complex s,
                             double tail_tolerance = 1e-6);

// d^lambda f(x) = e^{ax}/(2 pi) * integral over |sigma| <= half_extent of
// G(a + j sigma) (a + j sigma)^lambda e^{j sigma x} d sigma, principal
// branch, with the configured endpoint taper.  Returns the value and an
// estimated truncation bound.
Inversion bromwich_differint(const LaplaceImage& G, FractionalOrder order, double x,
                             const BromwichConfig& cfg = {});

// bromwich_differint plus the integration-constants polynomial; the
// constants are accepted only when lambda is a negative integer -n, with
// at most n of them.
Inversion fourier_form_differint(const LaplaceImage& G, FractionalOrder order, double x,
                                 const IntegrationConstants& constants,
                                 const BromwichConfig& cfg = {});

// Convenience wrapper for orders at or above the image's convergence cap:
// peels off whole derivatives (d^lambda = d^m d^{lambda-m}) and applies
// centered differences of width fd_step to the inverted lower-order
// result.  Accuracy is limited by the differencing; prefer closed forms
// where they exist.
Inversion bromwich_differint_split(const LaplaceImage& G, FractionalOrder order, double x,
                                   const BromwichConfig& cfg = {}, double fd_step = 1e-2);

}  // namespace fracdiff::transform

#endif
