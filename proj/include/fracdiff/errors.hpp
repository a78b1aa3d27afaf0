#ifndef FRACDIFF_ERRORS_HPP
#define FRACDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "fracdiff/types.hpp"

namespace fracdiff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain of definition.
struct DomainError : Error {
    using Error::Error;
};

// Gamma evaluated at a non-positive integer; carries the offending integer.
struct PoleError : Error {
    long pole;
    explicit PoleError(long n)
        : Error("gamma pole at non-positive integer " + std::to_string(n)), pole(n) {}
};

// Non-integrable point, e.g. x_+^mu at the origin with mu < 0.
struct SingularError : Error {
    using Error::Error;
};

// Iteration budget exhausted; carries the partial value and a tail bound.
struct ConvergenceError : Error {
    Complex partial;
    double bound;
    ConvergenceError(const std::string& what, Complex partial_value, double tail_bound)
        : Error(what), partial(partial_value), bound(tail_bound) {}
};

// Pointwise evaluation refused because the analytic result is a
// distribution (delta or a derivative of it), not a function.
struct DistributionalError : Error {
    std::string symbol;       // e.g. "delta^(2)"
    long derivative_order;    // n in delta^(n)
    DistributionalError(std::string sym, long n)
        : Error("result is the distribution " + sym + "; pointwise evaluation refused"),
          symbol(std::move(sym)),
          derivative_order(n) {}
};

// Degenerate parameter choice for which a different operation applies.
struct DegenerateError : Error {
    using Error::Error;
};

// Transform evaluated outside its region of convergence.
struct RegionError : Error {
    using Error::Error;
};

// Bromwich line placed at or left of the image's abscissa of validity.
struct ContourError : Error {
    using Error::Error;
};

// Grid too coarse for the requested evaluation.
struct ResolutionError : Error {
    using Error::Error;
};

}  // namespace fracdiff

#endif
