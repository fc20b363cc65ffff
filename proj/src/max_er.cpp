#include "optstrat/max_er.hpp"

#include <cmath>
#include <stdexcept>

#include "optstrat/special_functions.hpp"

namespace optstrat {

namespace {

void require_unit_interval(double rho, const char* where) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument(std::string(where) + ": rho must lie in [0, 1]");
    }
}

}  // namespace

ErSolution optimal_er_notional(const SecurityModel& standardized) {
    require_standardized(standardized, "optimal_er_notional");
    if (standardized.rho == 0.0) {
        if (standardized.mu == 0.0) {
            return {NotionalFunction::buy_hold(+1), ErRegime::degenerate};
        }
        return {NotionalFunction::buy_hold(standardized.mu > 0.0 ? +1 : -1),
                ErRegime::no_knowledge};
    }
    const double m = *m_ratio(standardized);
    return {NotionalFunction::sign_threshold(-m), ErRegime::informative};
}

double max_expected_return(const SecurityModel& standardized) {
    require_standardized(standardized, "max_expected_return");
    if (standardized.rho == 0.0) {
        return std::abs(standardized.mu);
    }
    const double m = *m_ratio(standardized);
    return standardized.rho * standardized.sigma * folded_normal_mean(m);
}

StrategyStats strategy_stats_er(const SecurityModel& standardized) {
    const double m1 = max_expected_return(standardized);
    const double sigma = standardized.sigma;
    const double mu = standardized.mu;

    StrategyStats stats;
    stats.expected_return = m1;
    stats.variance = sigma * sigma + mu * mu - m1 * m1;
    stats.std_dev = std::sqrt(stats.variance);
    stats.information_ratio = stats.std_dev > 0.0 ? m1 / stats.std_dev : 0.0;
    return stats;
}

double ir_zero_drift(double rho) {
    require_unit_interval(rho, "ir_zero_drift");
    return std::sqrt(2.0) * rho / std::sqrt(kPi - 2.0 * rho * rho);
}

double prob_positive(double rho) {
    require_unit_interval(rho, "prob_positive");
    return 0.5 + std::asin(rho) / kPi;
}

double annualized_ir_bound(long periods_per_year) {
    if (periods_per_year < 1) {
        throw std::invalid_argument("annualized_ir_bound: periods_per_year must be >= 1");
    }
    return ir_zero_drift(1.0) * std::sqrt(static_cast<double>(periods_per_year));
}

std::size_t select_best_security(std::span<const SecurityModel> models) {
    if (models.empty()) {
        throw std::invalid_argument("select_best_security: empty security list");
    }
    std::size_t best = 0;
    double best_value = max_expected_return(standardize(models[0]).model);
    for (std::size_t j = 1; j < models.size(); ++j) {
        const double value = max_expected_return(standardize(models[j]).model);
        if (value > best_value) {
            best = j;
            best_value = value;
        }
    }
    return best;
}

}  // namespace optstrat
