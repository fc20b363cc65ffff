#pragma once

namespace optstrat {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kSqrt2OverPi = 0.79788456080286535588;
inline constexpr double kInvSqrtPi = 0.56418958354775628695;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647693;

/// Standard normal CDF, absolute error below 1e-14 over the full real line.
double norm_cdf(double x);

/// Scaled complementary error function e^{x^2} erfc(x) for x >= 0.
/// Stays finite for arbitrarily large x (asymptotic branch above x = 26).
double erfcx(double x);

/// e^{b^2/2} (1 - Phi(b)) for b >= 0, computed without overflow.
double gaussian_tail_scaled(double b);

/// E|X| for X ~ N(theta, 1): the folded-normal mean.
/// Even in theta, >= |theta|, and -> |theta| as |theta| grows.
double folded_normal_mean(double theta);

/// E sign(X) for X ~ N(m, 1), i.e. 2 Phi(m) - 1.
double normal_sign_mean(double m);

/// Clamp to the unit interval [-1, 1].
double clip_unit(double x);

/// sign with sign(0) = 0.
inline double sign0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace optstrat
