#include "optstrat/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optstrat {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + ": non-finite input");
    }
}

}  // namespace

double norm_cdf(double x) {
    require_finite(x, "norm_cdf");
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double erfcx(double x) {
    require_finite(x, "erfcx");
    if (x < 0.0) {
        throw std::invalid_argument("erfcx: negative input");
    }
    if (x < 26.0) {
        // Both factors are representable here; the product is exact to a few ulp
        // plus the x^2 rounding amplification (~x^2 * eps).
        return std::exp(x * x) * std::erfc(x);
    }
    // Asymptotic series: erfcx(x) ~ 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!! / (2x^2)^k.
    // At x = 26 the eighth term is already below 1e-18 relative.
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
    }
    return kInvSqrtPi / x * sum;
}

double gaussian_tail_scaled(double b) {
    if (!(b >= 0.0)) {
        throw std::invalid_argument("gaussian_tail_scaled: requires b >= 0");
    }
    return 0.5 * erfcx(b * kInvSqrt2);
}

double folded_normal_mean(double theta) {
    require_finite(theta, "folded_normal_mean");
    return std::exp(-0.5 * theta * theta) * kSqrt2OverPi + theta * normal_sign_mean(theta);
}

double normal_sign_mean(double m) {
    require_finite(m, "normal_sign_mean");
    return std::erf(m * kInvSqrt2);
}

double clip_unit(double x) {
    require_finite(x, "clip_unit");
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace optstrat
