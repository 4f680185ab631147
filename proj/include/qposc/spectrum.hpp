#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qposc/brackets.hpp"
#include "qposc/deformation.hpp"

namespace qposc {

struct EnergyLevel {
  int n = 0;
  double energy = 0.0;
};

/// Ladder operators on the truncated Fock basis |0..n_max>, stored dense.
/// `a` carries sqrt(bracket(n)) on its first superdiagonal, `adag` is its
/// exact transpose, and `number` is diagonal with entries 0..n_max. The top
/// Fock state cannot satisfy the defining relation, so residual checks skip
/// the (dim-1, dim-1) corner.
struct TruncatedRep {
  int dim = 0;  // n_max + 1
  Eigen::MatrixXd a;
  Eigen::MatrixXd adag;
  Eigen::MatrixXd number;
};

/// E_n = ((n+1) q^n + n q^(n-1)) / 2 for each oscillator family; E_0 = 1/2
/// for every valid parameter choice.
double energy_qp(int n, const RealDeformation& d);
double energy_td(int n, double q);
double energy_bm(int n, const PhaseDeformation& d);

/// Levels 0..n_max in index order.
std::vector<EnergyLevel> spectrum_table(int n_max, const RealDeformation& d);
std::vector<EnergyLevel> spectrum_table(int n_max, const TdDeformation& d);
std::vector<EnergyLevel> spectrum_table(int n_max, const PhaseDeformation& d);

TruncatedRep build_truncated_rep(int n_max, const RealDeformation& d);
TruncatedRep build_truncated_rep(int n_max, const TdDeformation& d);
/// Phase-deformed rep: entries sqrt(sin(n*theta)/sin(theta)) must be real,
/// which restricts theta to |theta| < pi/n_max; negative brackets throw.
TruncatedRep build_truncated_rep(int n_max, const PhaseDeformation& d);

/// Max |entry| of A*Adag - q*Adag*A - p^N and of the q <-> p partner
/// relation, excluding the truncation corner.
double defining_relation_residual(const TruncatedRep& rep,
                                  const RealDeformation& d);

/// Same for the unit-circle relations a*adag - q^{+/-1} adag*a = q^{-/+N}
/// with q = exp(i*theta), evaluated in complex arithmetic.
double defining_relation_residual(const TruncatedRep& rep,
                                  const PhaseDeformation& d);

}  // namespace qposc
