#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qposc {

/// Dense univariate polynomial, coefficients stored in ascending degree.
struct Polynomial {
  std::vector<double> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Sign-change interval: f(lo) and f(hi) have opposite signs, or the
/// interval is degenerate (lo == hi) on an exact zero.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Result of a one-dimensional root search.
struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  /// Number of sign-change cells the preceding grid scan found (1 when the
  /// root came from a directly supplied bracket).
  int sign_changes = 1;
};

/// A scanned function produced a non-finite value; carries the abscissa.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(const std::string& what, double where)
      : std::runtime_error(what), x(where) {}
  double x;
};

/// No sign change was found where a root was required.
class no_root_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration cap reached before either tolerance; carries the best estimate.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, const RootResult& best_so_far)
      : std::runtime_error(what), best(best_so_far) {}
  RootResult best;
};

inline double horner_eval(const Polynomial& poly, double x) {
  if (poly.coefficients.empty())
    throw std::domain_error("horner_eval: empty polynomial");
  double acc = 0.0;
  for (std::size_t i = poly.coefficients.size(); i-- > 0;)
    acc = acc * x + poly.coefficients[i];
  return acc;
}

/// All sign-change cells of f on a uniform grid over [lo, hi], in increasing
/// order. An exact zero on a grid node yields a degenerate bracket [x, x].
template <class F>
std::vector<Bracket> scan_brackets(F&& f, double lo, double hi, int cells) {
  if (!(lo < hi)) throw std::invalid_argument("scan_brackets: need lo < hi");
  if (cells < 1) throw std::invalid_argument("scan_brackets: need cells >= 1");

  const auto eval = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw evaluation_error("scan_brackets: non-finite value at x = " +
                                 std::to_string(x),
                             x);
    return v;
  };

  std::vector<Bracket> out;
  double x0 = lo;
  double f0 = eval(x0);
  if (f0 == 0.0) out.push_back({x0, x0, 0.0, 0.0});
  for (int i = 1; i <= cells; ++i) {
    const double x1 = (i == cells) ? hi : lo + (hi - lo) * i / cells;
    const double f1 = eval(x1);
    if (f1 == 0.0) {
      out.push_back({x1, x1, 0.0, 0.0});
    } else if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
      out.push_back({x0, x1, f0, f1});
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

/// Bisection on a valid bracket. Stops when |f(mid)| < residual_tol or the
/// interval width drops below width_tol; throws convergence_error (carrying
/// the best estimate) if max_iter is exhausted first. Deterministic.
template <class F>
RootResult bisect(F&& f, const Bracket& b, double residual_tol,
                  double width_tol = 1e-15, int max_iter = 200) {
  if (!(b.lo <= b.hi)) throw std::invalid_argument("bisect: need lo <= hi");
  if (b.lo == b.hi) {
    const double fx = f(b.lo);
    return {b.lo, fx, b.lo, b.hi, 0, 1};
  }
  double lo = b.lo, hi = b.hi;
  double f_lo = b.f_lo, f_hi = b.f_hi;
  if (f_lo == 0.0) return {lo, 0.0, lo, hi, 0, 1};
  if (f_hi == 0.0) return {hi, 0.0, lo, hi, 0, 1};
  if (!((f_lo < 0.0 && f_hi > 0.0) || (f_lo > 0.0 && f_hi < 0.0)))
    throw std::invalid_argument("bisect: bracket endpoints do not straddle 0");

  RootResult best{0.5 * (lo + hi), 0.0, lo, hi, 0, 1};
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    best = {mid, fm, lo, hi, it, 1};
    if (fm == 0.0 || std::abs(fm) < residual_tol) return best;
    if ((fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
      f_hi = fm;
    }
    if (hi - lo < width_tol) {
      const double x = 0.5 * (lo + hi);
      return {x, f(x), lo, hi, it, 1};
    }
  }
  throw convergence_error("bisect: no convergence within max_iter", best);
}

/// Second-order central difference (f(x+h) - f(x-h)) / (2h).
template <class F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace qposc
