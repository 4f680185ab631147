#include "qposc/qp_degeneracy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qposc/deformation.hpp"
#include "qposc/spectrum.hpp"

namespace qposc {
namespace {

constexpr int kScanCells = 1024;
constexpr double kScanLo = 1e-9;
constexpr double kSlopeDenomTol = 1e-14;
constexpr double kSlopeNumerFloor = 1e-10;
// Residual slack for queries that land on an axis intercept computed to
// bisection accuracy rather than exactly.
constexpr double kBoundaryTol = 1e-10;

// sum_{r=0}^{n-1} p^(n-1-r) q^r, evaluated term by term. All terms are
// nonnegative on the unit square.
double power_sum(int n, double q, double p) {
  double acc = 0.0;
  double qr = 1.0;
  for (int r = 0; r < n; ++r) {
    acc += qr * std::pow(p, static_cast<double>(n - 1 - r));
    qr *= q;
  }
  return acc;
}

// d/dq of power_sum: sum_{r=1}^{n-1} r p^(n-1-r) q^(r-1).
double power_sum_dq(int n, double q, double p) {
  double acc = 0.0;
  double qr = 1.0;
  for (int r = 1; r < n; ++r) {
    acc += r * qr * std::pow(p, static_cast<double>(n - 1 - r));
    qr *= q;
  }
  return acc;
}

// F without the unit-square validation, for solver probes.
double eval_f(const CurveSpec& spec, double q, double p) {
  return power_sum(spec.m_high + 1, q, p) + power_sum(spec.m_high, q, p) -
         power_sum(spec.m_low + 1, q, p) - power_sum(spec.m_low, q, p);
}

void require_point(double q, double p) {
  if (!(q >= 0.0 && q <= 1.0) || !(p >= 0.0 && p <= 1.0))
    throw std::domain_error("degeneracy_function: (q, p) outside unit square");
  if (q == 0.0 && p == 0.0)
    throw std::domain_error("degeneracy_function: (0, 0) is excluded");
}

}  // namespace

double degeneracy_function(const CurveSpec& spec, double q, double p) {
  require_point(q, p);
  return eval_f(spec, q, p);
}

double degeneracy_partial_q(const CurveSpec& spec, double q, double p) {
  require_point(q, p);
  return power_sum_dq(spec.m_high + 1, q, p) + power_sum_dq(spec.m_high, q, p) -
         power_sum_dq(spec.m_low + 1, q, p) - power_sum_dq(spec.m_low, q, p);
}

double degeneracy_partial_p(const CurveSpec& spec, double q, double p) {
  // F is symmetric under q <-> p, so dF/dp(q, p) = dF/dq(p, q).
  return degeneracy_partial_q(spec, p, q);
}

double curve_slope(const CurveSpec& spec, double q, double p) {
  const double num = degeneracy_partial_q(spec, q, p);
  const double den = degeneracy_partial_p(spec, q, p);
  if (std::abs(den) < kSlopeDenomTol) {
    if (std::abs(num) > kSlopeNumerFloor)
      return num > 0.0 ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::infinity();
    throw singular_slope_error(
        "curve_slope: dF/dp vanishes and dF/dq is not bounded away from 0");
  }
  return -num / den;
}

double admissible_q_max(const CurveSpec& spec, double tol) {
  return spec.m_low == 0 ? endpoint_qm(spec.m_high, tol).value : 1.0;
}

RootResult solve_p_for_q(const CurveSpec& spec, double q, double tol) {
  if (!(q >= 0.0 && q <= 1.0))
    throw std::domain_error("solve_p_for_q: q must lie in [0, 1]");
  if (!(tol > 0.0)) throw std::domain_error("solve_p_for_q: tol must be > 0");
  const auto f = [&](double p) { return eval_f(spec, q, p); };
  const double f0 = f(0.0);
  const double f1 = f(1.0);
  // At q = 0 the pairs with m_low >= 1 vanish at both edges of [0, 1]; the
  // curve endpoint is (0, 1), while p = 0 only touches the excluded corner.
  if (f1 == 0.0) return {1.0, 0.0, 1.0, 1.0, 0, 1};
  if (f0 == 0.0) return {0.0, 0.0, 0.0, 0.0, 0, 1};
  if (f0 > 0.0) {
    if (f0 <= kBoundaryTol) return {0.0, f0, 0.0, 0.0, 0, 1};
    const double qm = admissible_q_max(spec, tol);
    throw no_root_error("solve_p_for_q: q = " + std::to_string(q) +
                        " is outside the admissible interval [0, " +
                        std::to_string(qm) + "] of the E_" +
                        std::to_string(spec.m_low) + " = E_" +
                        std::to_string(spec.m_high) + " curve");
  }
  if (f1 < 0.0) {
    if (-f1 <= kBoundaryTol) return {1.0, f1, 1.0, 1.0, 0, 1};
    throw no_root_error("solve_p_for_q: F(q, p) < 0 on all of p in [0, 1]");
  }
  return bisect(f, {0.0, 1.0, f0, f1}, tol);
}

std::vector<CurveSample> trace_curve(const CurveSpec& spec, int samples,
                                     double tol) {
  if (samples < 2)
    throw std::invalid_argument("trace_curve: samples must be >= 2");
  const double q_max = admissible_q_max(spec, tol);
  std::vector<CurveSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double q =
        (i == samples - 1) ? q_max : q_max * i / (samples - 1.0);
    const RootResult r = solve_p_for_q(spec, q, tol);
    out.push_back({q, r.value, r.residual, curve_slope(spec, q, r.value)});
  }
  return out;
}

RootResult endpoint_qm(int m, double tol) {
  if (m < 2) throw std::domain_error("endpoint_qm: m must be >= 2");
  if (!(tol > 0.0)) throw std::domain_error("endpoint_qm: tol must be > 0");
  const double md = m;
  const auto f = [md](double q) {
    return std::pow(q, md) + std::pow(q, md - 1.0) - 1.0;
  };
  // f(0) = -1 and f(1) = 1, with f strictly increasing on (0, 1).
  return bisect(f, {0.0, 1.0, -1.0, 1.0}, tol);
}

RootResult intersect_constraint(const CurveSpec& spec, double exponent,
                                double tol) {
  if (!(exponent > 0.0))
    throw std::domain_error("intersect_constraint: exponent must be > 0");
  if (!(tol > 0.0))
    throw std::domain_error("intersect_constraint: tol must be > 0");
  const auto g = [&](double q) {
    return eval_f(spec, q, std::pow(q, exponent));
  };
  const auto brackets = scan_brackets(g, kScanLo, 1.0 - kScanLo, kScanCells);
  if (brackets.empty())
    throw no_root_error(
        "intersect_constraint: no crossing in (0, 1); F(q, q^a) has the same "
        "sign at q = " + std::to_string(kScanLo) + " (" +
        std::to_string(g(kScanLo)) + ") and q = " +
        std::to_string(1.0 - kScanLo) + " (" + std::to_string(g(1.0 - kScanLo)) +
        ")");
  RootResult res = bisect(g, brackets.front(), tol);
  res.sign_changes = static_cast<int>(brackets.size());

  const double q_star = res.value;
  const RealDeformation d(q_star, std::pow(q_star, exponent));
  const double gap =
      std::abs(energy_qp(spec.m_high, d) - energy_qp(spec.m_low, d));
  if (gap > 1e-10)
    throw convergence_error(
        "intersect_constraint: energies differ by " + std::to_string(gap) +
            " at the located crossing",
        res);
  return res;
}

}  // namespace qposc
