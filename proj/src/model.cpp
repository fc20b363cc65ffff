#include "optstrat/model.hpp"

#include <cmath>
#include <string>

namespace optstrat {

void SecurityModel::validate() const {
    if (!std::isfinite(mu_h) || !std::isfinite(sigma_h) || !std::isfinite(mu) ||
        !std::isfinite(sigma) || !std::isfinite(rho)) {
        throw std::invalid_argument("SecurityModel: non-finite parameter");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("SecurityModel: sigma must be > 0");
    }
    if (!(sigma_h > 0.0)) {
        throw std::invalid_argument("SecurityModel: sigma_h must be > 0");
    }
    if (rho < -1.0 || rho > 1.0) {
        throw std::invalid_argument("SecurityModel: rho must lie in [-1, 1]");
    }
}

StandardizedModel standardize(const SecurityModel& model) {
    model.validate();
    StandardizedModel out;
    out.flipped = model.rho < 0.0;
    out.model = model;
    out.model.mu_h = 0.0;
    out.model.sigma_h = 1.0;
    out.model.rho = std::abs(model.rho);
    return out;
}

std::optional<double> m_ratio(const SecurityModel& model) {
    model.validate();
    if (model.rho == 0.0) {
        return std::nullopt;
    }
    return model.mu / (model.rho * model.sigma);
}

ConditionalMoments normal_conditional_moments(const SecurityModel& model) {
    model.validate();
    const double mu_h = model.mu_h;
    const double sigma_h = model.sigma_h;
    const double mu = model.mu;
    const double sigma = model.sigma;
    const double rho = model.rho;

    ConditionalMoments cm;
    cm.mean = [=](double h) {
        const double z = (h - mu_h) / sigma_h;
        return mu + z * rho * sigma;
    };
    cm.second_moment = [=](double h) {
        const double z = (h - mu_h) / sigma_h;
        return mu * mu + 2.0 * rho * z * mu * sigma +
               (rho * rho * z * z + 1.0 - rho * rho) * sigma * sigma;
    };
    return cm;
}

void require_standardized(const SecurityModel& model, const char* where) {
    model.validate();
    if (!model.is_standardized()) {
        throw std::invalid_argument(std::string(where) +
                                    ": expects a standardized model (mu_h = 0, sigma_h = 1, rho >= 0); "
                                    "call standardize() first");
    }
}

}  // namespace optstrat
