#pragma once

#include <stdexcept>
#include <string>

namespace dhflow {

struct SimError : std::runtime_error {
    explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatch : SimError {
    explicit GridMismatch(const std::string& msg) : SimError("grid mismatch: " + msg) {}
};

struct OutOfTube : SimError {
    explicit OutOfTube(const std::string& msg) : SimError("point left tubular neighborhood: " + msg) {}
};

struct BeyondInjectivity : SimError {
    explicit BeyondInjectivity(const std::string& msg) : SimError("beyond injectivity radius: " + msg) {}
};

struct NonTangentInput : SimError {
    explicit NonTangentInput(const std::string& msg) : SimError("input not tangent: " + msg) {}
};

struct SolverNoConvergence : SimError {
    double residual;
    SolverNoConvergence(const std::string& msg, double res)
        : SimError("solver did not converge: " + msg + " (residual " + std::to_string(res) + ")"),
          residual(res) {}
};

struct ContourTouchesSpectrum : SimError {
    explicit ContourTouchesSpectrum(const std::string& msg)
        : SimError("resolvent contour touches spectrum: " + msg) {}
};

struct KernelCollapsed : SimError {
    double seed_norm;
    KernelCollapsed(const std::string& msg, double nrm)
        : SimError("kernel component of transported seed collapsed: " + msg), seed_norm(nrm) {}
};

struct EmptyKernel : SimError {
    explicit EmptyKernel(const std::string& msg) : SimError("no near-zero spectral cluster: " + msg) {}
};

struct NoContraction : SimError {
    explicit NoContraction(const std::string& msg) : SimError("fixed-point iteration not contracting: " + msg) {}
};

struct ConfigError : SimError {
    explicit ConfigError(const std::string& msg) : SimError("config error: " + msg) {}
};

} // namespace dhflow
