#pragma once

#include <stdexcept>
#include <string>

namespace modunits {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// numerics
struct NonPositiveImaginaryPart : Error {
    explicit NonPositiveImaginaryPart(const std::string& msg = "point not in the upper half-plane")
        : Error(msg) {}
};
struct QTooCloseToOne : Error {
    explicit QTooCloseToOne(const std::string& msg = "|q| too close to 1 for the requested precision")
        : Error(msg) {}
};

// siegel algebra
struct IntegerIndex : Error {
    explicit IntegerIndex(const std::string& msg = "Siegel index lies in Z^2") : Error(msg) {}
};
struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg = "matrix does not have determinant 1") : Error(msg) {}
};
struct NotGaloisStable : Error {
    explicit NotGaloisStable(const std::string& msg = "product is not a Galois-stable power") : Error(msg) {}
};
struct NotInvertibleDeterminant : Error {
    explicit NotInvertibleDeterminant(const std::string& msg = "determinant not invertible mod N") : Error(msg) {}
};
struct EvenOrSmallM : Error {
    explicit EvenOrSmallM(const std::string& msg = "m must be an odd integer >= 3") : Error(msg) {}
};

// classfield
struct NotFundamentalDiscriminant : Error {
    explicit NotFundamentalDiscriminant(const std::string& msg = "not a fundamental discriminant")
        : Error(msg) {}
};
struct NotPrime : Error {
    explicit NotPrime(const std::string& msg = "argument is not prime") : Error(msg) {}
};

// recognition
struct CoefficientNotNearInteger : Error {
    long index;
    double distance_log2;
    CoefficientNotNearInteger(long idx, double dist_log2, const std::string& msg)
        : Error(msg), index(idx), distance_log2(dist_log2) {}
};
struct ImaginaryResidue : Error {
    explicit ImaginaryResidue(const std::string& msg = "coefficient has a non-negligible imaginary part")
        : Error(msg) {}
};
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& msg = "polynomial has zero constant term") : Error(msg) {}
};
struct NotQuadraticPower : Error {
    explicit NotQuadraticPower(const std::string& msg = "polynomial is not a power of a quadratic")
        : Error(msg) {}
};

// pipeline / cli
struct CertificationFailure : Error {
    explicit CertificationFailure(const std::string& msg) : Error(msg) {}
};
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& msg) : Error(msg) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace modunits
