#include "qposc/brackets.hpp"

#include <cmath>
#include <stdexcept>

namespace qposc {
namespace {

// sum_{r=0}^{n-1} p^(n-1-r) q^r via S_k = q S_{k-1} + p^(k-1).
// Every term is nonnegative on the unit square, so no cancellation occurs.
double homogeneous_sum(int n, double q, double p) {
  double s = 0.0;
  double pk = 1.0;
  for (int k = 1; k <= n; ++k) {
    s = q * s + pk;
    pk *= p;
  }
  return s;
}

}  // namespace

double qp_bracket(double x, const RealDeformation& d) {
  if (!(x >= 0.0)) throw std::domain_error("qp_bracket: x must be >= 0");
  const double q = d.q();
  const double p = d.p();
  if (std::abs(q - p) < kTdSwitchTol) {
    const double mid = 0.5 * (q + p);  // equals q exactly when p == q
    return x == 0.0 ? 0.0 : x * std::pow(mid, x - 1.0);
  }
  if (x == std::floor(x) && x < 1e6)
    return homogeneous_sum(static_cast<int>(x), q, p);
  if (q == 0.0) return std::pow(p, x - 1.0);
  if (p == 0.0) return std::pow(q, x - 1.0);
  // Cancellation-free form of (q^x - p^x)/(q - p) for non-integer x.
  return std::pow(p, x) * std::expm1(x * std::log(q / p)) / (q - p);
}

double td_bracket(double x, double q) {
  if (!(q > 0.0 && q <= 1.0))
    throw std::domain_error("td_bracket: q must lie in (0, 1]");
  if (!(x >= 0.0)) throw std::domain_error("td_bracket: x must be >= 0");
  return x == 0.0 ? 0.0 : x * std::pow(q, x - 1.0);
}

double bm_bracket_phase(double x, const PhaseDeformation& d) {
  if (!(x >= 0.0))
    throw std::domain_error("bm_bracket_phase: x must be >= 0");
  const double th = d.theta();
  if (std::abs(th) < kThetaLimitTol) return x;
  const double s = std::sin(th);
  if (std::abs(s) < kThetaLimitTol)
    throw std::domain_error(
        "bm_bracket_phase: sin(theta) vanishes at theta near +/-pi");
  return std::sin(x * th) / s;
}

double bracket_factorial(int n, const RealDeformation& d) {
  if (n < 0) throw std::domain_error("bracket_factorial: n must be >= 0");
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) prod *= qp_bracket(j, d);
  return prod;
}

double bracket_factorial(int n, const TdDeformation& d) {
  if (n < 0) throw std::domain_error("bracket_factorial: n must be >= 0");
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) prod *= td_bracket(j, d.q());
  return prod;
}

double bracket_factorial(int n, const PhaseDeformation& d) {
  if (n < 0) throw std::domain_error("bracket_factorial: n must be >= 0");
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) prod *= bm_bracket_phase(j, d);
  return prod;
}

}  // namespace qposc
