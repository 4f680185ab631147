#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qposc {

/// Two real deformation parameters (q, p) in the closed unit square,
/// with the corner (0, 0) excluded.
class RealDeformation {
 public:
  RealDeformation(double q, double p) : q_(q), p_(p) {
    if (!(q >= 0.0 && q <= 1.0) || !(p >= 0.0 && p <= 1.0))
      throw std::domain_error("RealDeformation: q and p must lie in [0, 1]");
    if (q == 0.0 && p == 0.0)
      throw std::domain_error("RealDeformation: (q, p) = (0, 0) is excluded");
  }

  double q() const { return q_; }
  double p() const { return p_; }

 private:
  double q_;
  double p_;
};

/// One-parameter Tamm-Dancoff deformation, q in (0, 1].
class TdDeformation {
 public:
  explicit TdDeformation(double q) : q_(q) {
    if (!(q > 0.0 && q <= 1.0))
      throw std::domain_error("TdDeformation: q must lie in (0, 1]");
  }

  double q() const { return q_; }

 private:
  double q_;
};

/// Unit-circle deformation q = exp(i*theta), stored as the real angle and
/// normalized to (-pi, pi] on construction. Keeping the angle instead of the
/// complex number keeps every downstream bracket real.
class PhaseDeformation {
 public:
  explicit PhaseDeformation(double theta) {
    if (!std::isfinite(theta))
      throw std::domain_error("PhaseDeformation: theta must be finite");
    theta_ = normalize(theta);
  }

  /// Angle pi * num / den, computed in one multiply and one divide so that
  /// rational multiples of pi land as sharply as doubles allow.
  static PhaseDeformation pi_fraction(long long num, long long den) {
    if (den == 0)
      throw std::domain_error("PhaseDeformation: denominator must be nonzero");
    return PhaseDeformation(std::numbers::pi * static_cast<double>(num) /
                            static_cast<double>(den));
  }

  double theta() const { return theta_; }

 private:
  static double normalize(double t) {
    double r = std::remainder(t, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
  }

  double theta_;
};

}  // namespace qposc
