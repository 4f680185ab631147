#pragma once

#include <stdexcept>
#include <vector>

#include "qposc/numerics.hpp"

namespace qposc {

/// Ordered level pair (m_low, m_high) whose two-parameter degeneracy locus
/// F(q, p) = 0 is traced in the unit square.
struct CurveSpec {
  int m_low;
  int m_high;

  CurveSpec(int m_low_, int m_high_) : m_low(m_low_), m_high(m_high_) {
    if (m_low < 0) throw std::domain_error("CurveSpec: m_low must be >= 0");
    if (m_high < m_low + 1)
      throw std::domain_error("CurveSpec: m_high must exceed m_low");
    if (m_low == 0 && m_high < 2)
      throw std::domain_error(
          "CurveSpec: E_0 = E_1 would require the excluded value q = 0");
  }

  /// True for the two families whose monotone single-valued curve
  /// p = f(q) is established analytically: E_0 = E_m and E_m = E_{m+1}.
  /// Other pairs are traced numerically without that guarantee.
  bool proof_established() const {
    return m_low == 0 || m_high == m_low + 1;
  }
};

/// One traced curve point with the residual F(q, p) and the analytic slope.
struct CurveSample {
  double q = 0.0;
  double p = 0.0;
  double residual = 0.0;
  double dpdq = 0.0;
};

/// The slope denominator dF/dp vanished with the numerator not bounded away
/// from zero, so no signed-infinity direction can be assigned.
class singular_slope_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F(q, p) = 2 (E_{m_high} - E_{m_low}) written as homogeneous power sums;
/// it specializes to
///   F_{m,0}    = sum_{r<=m} p^(m-r) q^r + sum_{s<=m-1} p^(m-1-s) q^s - 1,
///   F_{m+1,m}  = sum_{r<=m+1} p^(m+1-r) q^r - sum_{s<=m-1} p^(m-1-s) q^s,
/// and is symmetric under q <-> p.
double degeneracy_function(const CurveSpec& spec, double q, double p);

/// Term-wise partial derivatives of the homogeneous sums.
double degeneracy_partial_q(const CurveSpec& spec, double q, double p);
double degeneracy_partial_p(const CurveSpec& spec, double q, double p);

/// Implicit-function slope dp/dq = -(dF/dq)/(dF/dp). Where |dF/dp| < 1e-14
/// with the numerator bounded away from zero, returns the signed infinity
/// the curve approaches (the q -> 1 endpoint of E_m = E_{m+1}, m >= 2);
/// otherwise throws singular_slope_error.
double curve_slope(const CurveSpec& spec, double q, double p);

/// The unique p in [0, 1] with F(q, p) = 0, by bisection in p. Throws
/// no_root_error (naming the admissible interval) when q lies beyond the
/// curve's q-axis intercept.
RootResult solve_p_for_q(const CurveSpec& spec, double q, double tol = 1e-12);

/// Upper end of the admissible q-interval: the axis intercept q_m for the
/// E_0 = E_m family, 1 otherwise.
double admissible_q_max(const CurveSpec& spec, double tol = 1e-12);

/// Samples evenly spaced in q over the admissible interval, each solved by
/// bisection and annotated with the analytic slope.
std::vector<CurveSample> trace_curve(const CurveSpec& spec, int samples = 256,
                                     double tol = 1e-12);

/// Root in (0, 1) of q^m + q^(m-1) - 1 = 0, the q-axis intercept of the
/// E_0 = E_m curve (equivalently q + 1 = 1/q^(m-1)); equals the p-axis
/// intercept by symmetry.
RootResult endpoint_qm(int m, double tol = 1e-12);

/// Crossing of the degeneracy curve with the constraint p = q^a, a > 0:
/// the root q* of F(q, q^a) in (0, 1). The induced one-parameter oscillator
/// has E_{m_low} = E_{m_high} at q*, which is verified before returning.
RootResult intersect_constraint(const CurveSpec& spec, double exponent,
                                double tol = 1e-12);

}  // namespace qposc
