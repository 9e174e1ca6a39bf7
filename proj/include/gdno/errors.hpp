#pragma once

#include <stdexcept>
#include <string>

namespace gdno {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMultiplier : Error {
    using Error::Error;
};

struct NonZeroMean : Error {
    using Error::Error;
};

struct StrictConnectednessViolated : Error {
    using Error::Error;
};

struct DeltaTooLarge : Error {
    using Error::Error;
};

struct DeltaOutOfRange : Error {
    using Error::Error;
};

struct UnsupportedDiffeo : Error {
    using Error::Error;
};

struct BottomFluxNonzero : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    int iterations;
    double last_update;
    NonConvergence(int iters, double update)
        : Error("fixed-point iteration did not converge: " + std::to_string(iters) +
                " iterations, last relative update " + std::to_string(update)),
          iterations(iters),
          last_update(update) {}
};

struct SolveFailed : Error {
    double residual;
    explicit SolveFailed(double res)
        : Error("linear solve failed, residual " + std::to_string(res)), residual(res) {}
};

struct DegenerateFit : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace gdno
