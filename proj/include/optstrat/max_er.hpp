#pragma once

#include <cstddef>
#include <span>

#include "optstrat/model.hpp"
#include "optstrat/notional.hpp"

namespace optstrat {

/// Closed-form performance of a strategy return Q = f(H) R.
struct StrategyStats {
    double expected_return = 0.0;
    double variance = 0.0;
    double std_dev = 0.0;
    double information_ratio = 0.0;
};

enum class ErRegime {
    informative,   // rho > 0: threshold rule on the indicator
    no_knowledge,  // rho == 0: buy-and-hold by sign of the drift
    degenerate,    // rho == 0 and mu == 0: nothing to optimize, long by convention
};

struct ErSolution {
    NotionalFunction notional;
    ErRegime regime = ErRegime::informative;
};

/// The notional with the highest expected return for a standardized model:
/// sign(H + m), i.e. a sign threshold at -m. Falls back to buy-and-hold when
/// the indicator is uninformative (rho = 0).
ErSolution optimal_er_notional(const SecurityModel& standardized);

/// Highest achievable expected return: rho sigma A(mu / (rho sigma)) where A
/// is the folded-normal mean; |mu| when rho = 0.
double max_expected_return(const SecurityModel& standardized);

/// Expected return, variance, and information ratio of the max-ER strategy.
/// The IR is derived from M and V = sigma^2 + mu^2 - M^2.
StrategyStats strategy_stats_er(const SecurityModel& standardized);

/// Max-ER strategy information ratio at zero drift: sqrt(2) rho / sqrt(pi - 2 rho^2).
double ir_zero_drift(double rho);

/// Probability the zero-drift optimal strategy return is nonnegative:
/// 1/2 + arcsin(rho) / pi.
double prob_positive(double rho);

/// Upper bound on the annualized IR of the max-ER strategy under perfect
/// knowledge: ir_zero_drift(1) * sqrt(periods_per_year).
double annualized_ir_bound(long periods_per_year);

/// Index of the security with the highest optimal expected return against a
/// shared indicator. Ties resolve to the lowest index.
std::size_t select_best_security(std::span<const SecurityModel> models);

}  // namespace optstrat
