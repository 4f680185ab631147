#pragma once

#include "qposc/deformation.hpp"

namespace qposc {

/// |q - p| below this evaluates the (q,p)-bracket by its p -> q limit
/// x * m^(x-1), m = (q+p)/2; the direct quotient loses all accuracy there.
inline constexpr double kTdSwitchTol = 1e-8;

/// |theta| below this evaluates phase quantities by their q -> 1 limits.
inline constexpr double kThetaLimitTol = 1e-12;

/// (q,p)-bracket (q^x - p^x) / (q - p), x >= 0. For integer x this equals
/// the homogeneous sum over p^(x-1-r) q^r, which is how it is evaluated.
double qp_bracket(double x, const RealDeformation& d);

/// Tamm-Dancoff bracket x * q^(x-1), q in (0, 1], x >= 0.
double td_bracket(double x, double q);

/// Unit-circle bracket sin(x*theta) / sin(theta); returns x when |theta| is
/// below the limit tolerance. Throws where sin(theta) vanishes at theta != 0
/// (theta near +/-pi), where non-integer x has no limit.
double bm_bracket_phase(double x, const PhaseDeformation& d);

/// Product of brackets 1..n; the empty product (n = 0) is 1.
double bracket_factorial(int n, const RealDeformation& d);
double bracket_factorial(int n, const TdDeformation& d);
double bracket_factorial(int n, const PhaseDeformation& d);

}  // namespace qposc
