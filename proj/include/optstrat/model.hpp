#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace optstrat {

/// Bivariate-normal joint model of an indicator H and the next-period
/// security return R.
struct SecurityModel {
    double mu_h = 0.0;     // indicator mean
    double sigma_h = 1.0;  // indicator SD, > 0
    double mu = 0.0;       // return mean per period
    double sigma = 1.0;    // return SD per period, > 0
    double rho = 0.0;      // correlation of H and R, in [-1, 1]

    void validate() const;
    bool is_standardized() const { return mu_h == 0.0 && sigma_h == 1.0 && rho >= 0.0; }

    /// Security information ratio mu / sigma.
    double omega() const { return mu / sigma; }
};

struct StandardizedModel {
    SecurityModel model;   // mu_h = 0, sigma_h = 1, rho >= 0
    bool flipped = false;  // true when the indicator was negated to make rho >= 0
};

/// Shift/scale the indicator to mean 0, SD 1 and flip its sign when the
/// correlation is negative. Return-side parameters are untouched.
StandardizedModel standardize(const SecurityModel& model);

/// m-ratio mu / (rho sigma); nullopt when rho == 0 (the indicator carries
/// no information and callers fall back to buy-and-hold).
std::optional<double> m_ratio(const SecurityModel& model);

/// First two conditional moments of R given H, plus their ratio.
struct ConditionalMoments {
    std::function<double(double)> mean;           // E(R | H = h)
    std::function<double(double)> second_moment;  // E(R^2 | H = h), > 0

    double ratio(double h) const { return mean(h) / second_moment(h); }
};

/// The bivariate-normal conditional moments. Accepts any valid model; the
/// indicator enters only through its standardized value (h - mu_h) / sigma_h.
ConditionalMoments normal_conditional_moments(const SecurityModel& model);

inline constexpr double kDegenerateRhoEps = 1e-12;

/// |rho| within 1e-12 of 1: the conditional variance vanishes and the
/// ratio-based notional formulas become singular.
inline bool degenerate_correlation(double rho) {
    return std::abs(rho) >= 1.0 - kDegenerateRhoEps;
}

class DegenerateCorrelationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Throws unless the model is standardized (mu_h = 0, sigma_h = 1, rho >= 0).
void require_standardized(const SecurityModel& model, const char* where);

}  // namespace optstrat
