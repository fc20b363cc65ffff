#pragma once

#include <span>
#include <vector>

#include "optstrat/model.hpp"
#include "optstrat/notional.hpp"
#include "optstrat/quadrature.hpp"

namespace optstrat {

/// Everything the max-IR strategy needs in one bundle.
struct IrSolution {
    double zeta = 0.0;             // E(g1^2 / g2), in (0, 1]
    double b = 0.0;                // sqrt(1 - rho^2) / rho
    double max_ir = 0.0;           // sqrt(zeta / (1 - zeta))
    double expected_return = 0.0;  // 2 sqrt(1 - rho^2) sigma zeta
    double h_plus = 0.0;           // indicator value where the notional hits +1
    double h_minus = 0.0;          // indicator value where the notional hits -1
    NotionalFunction notional;     // the clipped-ratio rule
};

/// zeta for a zero-drift standardized model, via the numerically stable
/// scaled-tail identity zeta = 1 - sqrt(pi/2) b erfcx(b / sqrt(2)).
double zeta_zero_drift(double rho);

/// sqrt(zeta) / sqrt(1 - zeta); requires 0 <= zeta < 1.
double max_ir_from_zeta(double zeta);

/// (pi (1 - rho))^{-1/4}, the rho -> 1 blow-up rate of the max IR.
double ir_asymptotic_approx(double rho);

/// The ratio notional normalized to peak at +/-1. rho = 0 yields a flat
/// (no-trade) notional; rho within 1e-12 of 1 is degenerate.
NotionalFunction optimal_ir_notional(const SecurityModel& standardized);

/// zeta by adaptive quadrature of E(g1^2 / g2) under the standard normal
/// indicator law; works for any drift, and for mu = 0 agrees with
/// zeta_zero_drift to 1e-8 or better.
double zeta_by_quadrature(const SecurityModel& standardized, const QuadratureSpec& spec = {});

/// Full solution for 0 < rho < 1: closed-form zeta when mu = 0, quadrature
/// otherwise.
IrSolution ir_solution(const SecurityModel& standardized, const QuadratureSpec& spec = {});

/// clip(lambda g1 / g2) for arbitrary conditional moments.
NotionalFunction lambda_clipped_notional(ConditionalMoments moments, double lambda);

struct LambdaSearch {
    double lambda = 0.0;
    double information_ratio = 0.0;
};

/// Maximize the information ratio of clip(lambda g1/g2) over lambda > 0 by a
/// coarse log-lambda scan followed by golden-section refinement. Raises
/// ConvergenceError if the scan does not look unimodal.
LambdaSearch optimize_lambda(const ConditionalMoments& moments, const QuadratureSpec& spec = {});

struct ComparisonRow {
    double rho = 0.0;
    double er_ratio = 0.0;  // max-ER expected return over max-IR expected return, mu = 0
    double ir_diff = 0.0;   // max IR minus the max-ER strategy's IR, mu = 0
};

/// Zero-drift comparison of the two optimal strategies across correlations.
std::vector<ComparisonRow> comparison_curves(std::span<const double> rho_grid);

}  // namespace optstrat
