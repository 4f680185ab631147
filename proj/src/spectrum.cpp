#include "qposc/spectrum.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qposc {
namespace {

void require_level(int n) {
  if (n < 0) throw std::domain_error("energy: level index must be >= 0");
}

template <class BracketFn>
TruncatedRep build_rep(int n_max, BracketFn&& bracket) {
  if (n_max < 1)
    throw std::domain_error("build_truncated_rep: n_max must be >= 1");
  const int dim = n_max + 1;
  TruncatedRep rep;
  rep.dim = dim;
  rep.a = Eigen::MatrixXd::Zero(dim, dim);
  rep.number = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n <= n_max; ++n) {
    const double b = bracket(n);
    if (b < 0.0)
      throw std::domain_error(
          "build_truncated_rep: negative bracket under square root");
    rep.a(n - 1, n) = std::sqrt(b);
  }
  for (int n = 0; n <= n_max; ++n) rep.number(n, n) = n;
  rep.adag = rep.a.transpose();
  return rep;
}

void require_consistent(const TruncatedRep& rep) {
  if (rep.dim < 2 || rep.a.rows() != rep.dim || rep.a.cols() != rep.dim ||
      rep.adag.rows() != rep.dim || rep.adag.cols() != rep.dim ||
      rep.number.rows() != rep.dim || rep.number.cols() != rep.dim)
    throw std::invalid_argument(
        "defining_relation_residual: dimension mismatch in TruncatedRep");
}

template <class PowFn>
std::vector<EnergyLevel> make_table(int n_max, PowFn&& energy) {
  if (n_max < 0)
    throw std::domain_error("spectrum_table: n_max must be >= 0");
  std::vector<EnergyLevel> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back({n, energy(n)});
  return out;
}

}  // namespace

double energy_qp(int n, const RealDeformation& d) {
  require_level(n);
  return 0.5 * (qp_bracket(n + 1.0, d) + qp_bracket(static_cast<double>(n), d));
}

double energy_td(int n, double q) {
  require_level(n);
  if (!(q > 0.0 && q <= 1.0))
    throw std::domain_error("energy_td: q must lie in (0, 1]");
  if (n == 0) return 0.5;
  return 0.5 * std::pow(q, n - 1.0) * (q + n * (1.0 + q));
}

double energy_bm(int n, const PhaseDeformation& d) {
  require_level(n);
  const double th = d.theta();
  if (std::abs(th) < kThetaLimitTol) return n + 0.5;
  // Half-angle form of (sin((n+1)t) + sin(n t)) / (2 sin t); unlike the
  // bracket sum it stays regular at t = pi, where E_n -> (-1)^n / 2.
  return std::sin((2.0 * n + 1.0) * th / 2.0) / (2.0 * std::sin(th / 2.0));
}

std::vector<EnergyLevel> spectrum_table(int n_max, const RealDeformation& d) {
  return make_table(n_max, [&](int n) { return energy_qp(n, d); });
}

std::vector<EnergyLevel> spectrum_table(int n_max, const TdDeformation& d) {
  return make_table(n_max, [&](int n) { return energy_td(n, d.q()); });
}

std::vector<EnergyLevel> spectrum_table(int n_max, const PhaseDeformation& d) {
  return make_table(n_max, [&](int n) { return energy_bm(n, d); });
}

TruncatedRep build_truncated_rep(int n_max, const RealDeformation& d) {
  return build_rep(n_max, [&](int n) { return qp_bracket(n, d); });
}

TruncatedRep build_truncated_rep(int n_max, const TdDeformation& d) {
  return build_rep(n_max, [&](int n) { return td_bracket(n, d.q()); });
}

TruncatedRep build_truncated_rep(int n_max, const PhaseDeformation& d) {
  return build_rep(n_max, [&](int n) { return bm_bracket_phase(n, d); });
}

double defining_relation_residual(const TruncatedRep& rep,
                                  const RealDeformation& d) {
  require_consistent(rep);
  const int dim = rep.dim;
  const Eigen::MatrixXd left = rep.a * rep.adag;
  const Eigen::MatrixXd right = rep.adag * rep.a;
  Eigen::MatrixXd pn = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd qn = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    pn(n, n) = std::pow(d.p(), n);
    qn(n, n) = std::pow(d.q(), n);
  }
  Eigen::MatrixXd r1 = left - d.q() * right - pn;
  Eigen::MatrixXd r2 = left - d.p() * right - qn;
  r1(dim - 1, dim - 1) = 0.0;  // truncation corner
  r2(dim - 1, dim - 1) = 0.0;
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

double defining_relation_residual(const TruncatedRep& rep,
                                  const PhaseDeformation& d) {
  require_consistent(rep);
  using Complex = std::complex<double>;
  const int dim = rep.dim;
  const Complex q = std::exp(Complex(0.0, d.theta()));
  const Eigen::MatrixXcd left = (rep.a * rep.adag).cast<Complex>();
  const Eigen::MatrixXcd right = (rep.adag * rep.a).cast<Complex>();
  Eigen::MatrixXcd qinv_n = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd q_n = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    qinv_n(n, n) = std::exp(Complex(0.0, -n * d.theta()));
    q_n(n, n) = std::exp(Complex(0.0, n * d.theta()));
  }
  Eigen::MatrixXcd r1 = left - q * right - qinv_n;
  Eigen::MatrixXcd r2 = left - (1.0 / q) * right - q_n;
  r1(dim - 1, dim - 1) = 0.0;
  r2(dim - 1, dim - 1) = 0.0;
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

}  // namespace qposc
