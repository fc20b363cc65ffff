#include "optstrat/notional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "optstrat/special_functions.hpp"

namespace optstrat {

namespace detail {

double eval(const NotionalFunction::SignThreshold& n, double h) {
    return sign0(h - n.threshold);
}

double eval(const NotionalFunction::ClippedRatio& n, double h) {
    const double mu = n.mu;
    const double sigma = n.sigma;
    const double rho = n.rho;
    const double num = 2.0 * std::sqrt(1.0 - rho * rho) * sigma * (mu + h * rho * sigma);
    const double den = mu * mu + (1.0 - rho * rho) * sigma * sigma +
                       2.0 * h * mu * rho * sigma + h * h * rho * rho * sigma * sigma;
    // |num/den| <= 1 analytically; the clamp only absorbs the last-ulp spill.
    return std::clamp(num / den, -1.0, 1.0);
}

double eval(const NotionalFunction::LambdaClipped& n, double h) {
    return std::clamp(n.lambda * n.moments.ratio(h), -1.0, 1.0);
}

double eval(const NotionalFunction::BuyHold& n, double h) {
    (void)h;
    return static_cast<double>(n.direction);
}

double eval(const NotionalFunction::Tabulated& n, double h) {
    if (h <= n.h.front()) return n.value.front();
    if (h >= n.h.back()) return n.value.back();
    const auto it = std::upper_bound(n.h.begin(), n.h.end(), h);
    const std::size_t j = static_cast<std::size_t>(it - n.h.begin());
    const double t = (h - n.h[j - 1]) / (n.h[j] - n.h[j - 1]);
    return n.value[j - 1] + t * (n.value[j] - n.value[j - 1]);
}

}  // namespace detail

NotionalFunction NotionalFunction::sign_threshold(double threshold) {
    if (!std::isfinite(threshold)) {
        throw std::invalid_argument("NotionalFunction: threshold must be finite");
    }
    return NotionalFunction(SignThreshold{threshold});
}

NotionalFunction NotionalFunction::clipped_ratio(const SecurityModel& standardized) {
    require_standardized(standardized, "NotionalFunction::clipped_ratio");
    if (standardized.rho <= 0.0 || degenerate_correlation(standardized.rho)) {
        throw std::invalid_argument("NotionalFunction::clipped_ratio: requires 0 < rho < 1");
    }
    return NotionalFunction(ClippedRatio{standardized.mu, standardized.sigma, standardized.rho});
}

NotionalFunction NotionalFunction::lambda_clipped(ConditionalMoments moments, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("NotionalFunction: lambda must be > 0");
    }
    if (!moments.mean || !moments.second_moment) {
        throw std::invalid_argument("NotionalFunction: moments must be populated");
    }
    return NotionalFunction(LambdaClipped{std::move(moments), lambda});
}

NotionalFunction NotionalFunction::buy_hold(int direction) {
    if (direction < -1 || direction > 1) {
        throw std::invalid_argument("NotionalFunction: direction must be -1, 0, or +1");
    }
    return NotionalFunction(BuyHold{direction});
}

NotionalFunction NotionalFunction::tabulated(std::vector<double> h, std::vector<double> value) {
    if (h.empty() || h.size() != value.size()) {
        throw std::invalid_argument("NotionalFunction: tabulated grid must be non-empty and aligned");
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!std::isfinite(h[i]) || !std::isfinite(value[i])) {
            throw std::invalid_argument("NotionalFunction: tabulated entries must be finite");
        }
        if (value[i] < -1.0 || value[i] > 1.0) {
            throw std::invalid_argument("NotionalFunction: tabulated values must lie in [-1, 1]");
        }
        if (i > 0 && !(h[i] > h[i - 1])) {
            throw std::invalid_argument("NotionalFunction: tabulated grid must be strictly increasing");
        }
    }
    return NotionalFunction(Tabulated{std::move(h), std::move(value)});
}

double NotionalFunction::operator()(double h) const {
    return std::visit([h](const auto& alt) { return detail::eval(alt, h); }, repr_);
}

std::string NotionalFunction::describe() const {
    char buf[160];
    return std::visit(
        [&buf](const auto& alt) -> std::string {
            using T = std::decay_t<decltype(alt)>;
            if constexpr (std::is_same_v<T, SignThreshold>) {
                std::snprintf(buf, sizeof(buf), "sign(H - (%.6g))", alt.threshold);
                return buf;
            } else if constexpr (std::is_same_v<T, ClippedRatio>) {
                std::snprintf(buf, sizeof(buf),
                              "clipped-ratio(mu=%.6g, sigma=%.6g, rho=%.6g)", alt.mu, alt.sigma,
                              alt.rho);
                return buf;
            } else if constexpr (std::is_same_v<T, LambdaClipped>) {
                std::snprintf(buf, sizeof(buf), "clip(lambda * g1/g2), lambda=%.6g", alt.lambda);
                return buf;
            } else if constexpr (std::is_same_v<T, BuyHold>) {
                if (alt.direction > 0) return "buy-and-hold (+1)";
                if (alt.direction < 0) return "sell-and-hold (-1)";
                return "flat (0)";
            } else {
                std::snprintf(buf, sizeof(buf), "tabulated (%zu points)", alt.h.size());
                return buf;
            }
        },
        repr_);
}

}  // namespace optstrat
