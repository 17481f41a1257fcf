#pragma once

#include <stdexcept>
#include <string>

namespace fanoep {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : Error {
    using Error::Error;
};

// Matrix inversion at (or numerically indistinguishable from) a pole.
struct SingularMatrix : Error {
    using Error::Error;
};

struct InvalidWindow : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct JacobianSingular : Error {
    using Error::Error;
};

// Residue contour would enclose or graze an unrelated pole.
struct PoleTooClose : Error {
    using Error::Error;
};

struct DegenerateInit : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct NonFinite : Error {
    using Error::Error;
};

struct EmptyCurve : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace fanoep
