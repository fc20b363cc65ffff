#pragma once

#include <string>
#include <variant>
#include <vector>

#include "optstrat/model.hpp"

namespace optstrat {

/// A bounded position-sizing rule: maps an indicator value to a notional in
/// [-1, 1]. Positive means long, negative short. Every alternative below is
/// clamped so evaluations never leave the unit interval.
class NotionalFunction {
public:
    /// sign(h - threshold), with 0 exactly at the threshold.
    struct SignThreshold {
        double threshold = 0.0;
    };

    /// The ratio notional of a standardized bivariate-normal model, scaled so
    /// its extreme values are exactly +/-1:
    ///   f(h) = 2 sqrt(1-rho^2) sigma (mu + h rho sigma)
    ///          / (mu^2 + (1-rho^2) sigma^2 + 2 h mu rho sigma + h^2 rho^2 sigma^2)
    struct ClippedRatio {
        double mu = 0.0;
        double sigma = 1.0;
        double rho = 0.5;
    };

    /// clip(lambda * g1(h) / g2(h)) for user-supplied conditional moments.
    struct LambdaClipped {
        ConditionalMoments moments;
        double lambda = 1.0;
    };

    /// Constant position: +1 long, -1 short, 0 flat.
    struct BuyHold {
        int direction = 1;
    };

    /// Piecewise-linear table on a strictly increasing grid; constant
    /// extrapolation outside the grid.
    struct Tabulated {
        std::vector<double> h;
        std::vector<double> value;
    };

    using Repr = std::variant<SignThreshold, ClippedRatio, LambdaClipped, BuyHold, Tabulated>;

    static NotionalFunction sign_threshold(double threshold);
    static NotionalFunction clipped_ratio(const SecurityModel& standardized);
    static NotionalFunction lambda_clipped(ConditionalMoments moments, double lambda);
    static NotionalFunction buy_hold(int direction);
    static NotionalFunction tabulated(std::vector<double> h, std::vector<double> value);

    double operator()(double h) const;
    const Repr& repr() const { return repr_; }
    std::string describe() const;

private:
    explicit NotionalFunction(Repr repr) : repr_(std::move(repr)) {}
    Repr repr_;
};

namespace detail {
// Per-alternative evaluators; the MC kernels dispatch once per block and then
// run a monomorphic inner loop.
double eval(const NotionalFunction::SignThreshold& n, double h);
double eval(const NotionalFunction::ClippedRatio& n, double h);
double eval(const NotionalFunction::LambdaClipped& n, double h);
double eval(const NotionalFunction::BuyHold& n, double h);
double eval(const NotionalFunction::Tabulated& n, double h);
}  // namespace detail

}  // namespace optstrat
