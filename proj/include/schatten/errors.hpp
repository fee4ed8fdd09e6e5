#pragma once

#include <stdexcept>
#include <string>

namespace schatten {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct SingularPower : Error { using Error::Error; };
struct BadExponent : Error { using Error::Error; };
struct CountTooLarge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct NotContraction : Error { using Error::Error; };
struct SingularGram : Error { using Error::Error; };
struct PreconditionUnmet : Error { using Error::Error; };
struct VariantUnknown : Error { using Error::Error; };
struct BadTriple : Error { using Error::Error; };
struct CaseExponentMismatch : Error { using Error::Error; };
struct BadSubstitution : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct SamplerExhausted : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

// Carries the failing order and its eigenvalue margin.
class NotHypercontractive : public Error {
public:
    NotHypercontractive(const std::string& msg, int order, double margin)
        : Error(msg), order_(order), margin_(margin) {}
    int order() const noexcept { return order_; }
    double margin() const noexcept { return margin_; }

private:
    int order_;
    double margin_;
};

// Carries the residual of the last iterate.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& msg, double residual)
        : Error(msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace schatten
