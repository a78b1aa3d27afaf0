#ifndef FRACDIFF_TYPES_HPP
#define FRACDIFF_TYPES_HPP

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

namespace fracdiff {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// Branch policy for the whole library: principal cut along the negative
// real axis, arg z in (-pi, pi].  std::arg can return -pi when the
// imaginary part is a negative zero; principal_arg normalises that case
// so that arg(-x + 0j) == +pi for every negative real input.
inline double principal_arg(Complex z) {
    if (z.imag() == 0.0) z = Complex(z.real(), +0.0);
    return std::arg(z);
}

inline Complex principal_log(Complex z) {
    return Complex(std::log(std::abs(z)), principal_arg(z));
}

// z^p = exp(p (ln|z| + j arg z)) on the principal branch.
inline Complex principal_pow(Complex z, double p) {
    if (z == Complex(0.0, 0.0)) return (p == 0.0) ? Complex(1.0) : Complex(0.0);
    return std::exp(p * principal_log(z));
}

// Exact integer power by repeated squaring; negative exponents invert.
inline Complex integer_pow(Complex z, long n) {
    if (n < 0) return 1.0 / integer_pow(z, -n);
    Complex acc(1.0), base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// A real differintegration order: positive differentiates, negative
// integrates, zero is the identity.  An order counts as integer when it
// sits within kIntegerTol of one, so representation noise near integers
// never routes a value into a gamma pole.
struct FractionalOrder {
    double lambda = 0.0;

    static constexpr double kIntegerTol = 1e-9;

    FractionalOrder() = default;
    FractionalOrder(double value) : lambda(value) {}  // NOLINT(google-explicit-constructor)

    bool is_integer() const {
        return std::abs(lambda - std::round(lambda)) <= kIntegerTol;
    }
    long nearest_integer() const { return static_cast<long>(std::llround(lambda)); }
};

// Constants of integration a0 + a1 x + ... + a_{n-1} x^{n-1} attached to an
// n-fold integral (order -n).  Empty by default; the one-sided transform
// results carry none.
struct IntegrationConstants {
    std::vector<Complex> coefficients;

    IntegrationConstants() = default;
    IntegrationConstants(std::initializer_list<Complex> cs) : coefficients(cs) {}

    bool empty() const { return coefficients.empty(); }
    std::size_t size() const { return coefficients.size(); }

    Complex polynomial(double x) const {
        Complex acc(0.0);
        for (std::size_t k = coefficients.size(); k-- > 0;)
            acc = acc * x + coefficients[k];
        return acc;
    }
};

}  // namespace fracdiff

#endif
