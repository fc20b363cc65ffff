#pragma once

#include <functional>
#include <stdexcept>

namespace optstrat {

/// Raised when an iterative numerical routine exhausts its budget
/// without meeting the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    double halfwidth = 12.0;  // integration window in standard deviations

    void validate() const;
};

/// E[f(Z)] for Z standard normal: adaptive Gauss-Kronrod on [-halfwidth, halfwidth]
/// with the normal density folded into the integrand. For bounded f the mass
/// beyond 12 SD is below 1e-33, far under any tolerance used here.
double normal_expectation(const std::function<double(double)>& f,
                          const QuadratureSpec& spec = {});

}  // namespace optstrat
