// Test-only reference implementations, kept deliberately naive and
// independent of the library code paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

// Power-sum polynomial evaluation, sum c_i * x^i.
inline double naive_poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    acc += c[i] * std::pow(x, static_cast<double>(i));
  return acc;
}

// Plain midpoint bisection to a fixed iteration count; requires a valid
// sign change on [lo, hi].
inline double plain_bisect(const std::function<double(double)>& f, double lo,
                           double hi, int iters = 200) {
  double f_lo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Unit-circle bracket (q^x - q^-x) / (q - q^-1) evaluated with complex
// arithmetic at q = exp(i*theta).
inline std::complex<double> bm_bracket_complex(double x, double theta) {
  const std::complex<double> q = std::exp(std::complex<double>(0.0, theta));
  return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

// Brute-force homogeneous bracket sum over explicit monomials.
inline double brute_qp_bracket(int n, double q, double p) {
  double acc = 0.0;
  for (int r = 0; r < n; ++r)
    acc += std::pow(p, static_cast<double>(n - 1 - r)) *
           std::pow(q, static_cast<double>(r));
  return acc;
}

// The four explicitly displayed degeneracy polynomials.
inline double f20(double q, double p) {
  return p * p + p * q + q * q + p + q - 1.0;
}
inline double f21(double q, double p) { return p * p + p * q + q * q - 1.0; }
inline double f32(double q, double p) {
  return p * p * p + p * p * q + p * q * q + q * q * q - p - q;
}
inline double f43(double q, double p) {
  const double p2 = p * p, q2 = q * q;
  return p2 * p2 + p2 * p * q + p2 * q2 + p * q2 * q + q2 * q2 - p2 - p * q -
         q2;
}

// Explicit branch p = f_{2,0}(q) of the E_0 = E_2 curve.
inline double f20_explicit_p(double q) {
  return (-1.0 - q + std::sqrt((1.0 + q) * (1.0 - 3.0 * q) + 4.0)) / 2.0;
}

}  // namespace oracles
