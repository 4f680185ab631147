#include "qposc/bm_degeneracy.hpp"

#include <cmath>
#include <stdexcept>

#include "qposc/brackets.hpp"
#include "qposc/spectrum.hpp"

namespace qposc {

PhaseDeformation degeneracy_angle(const AngleFamily& fam) {
  return PhaseDeformation::pi_fraction(2LL * fam.k + 1,
                                       2LL * fam.n + fam.r + 1);
}

double level_difference_closed(int n, int r, const PhaseDeformation& d) {
  if (n < 0) throw std::domain_error("level_difference_closed: n must be >= 0");
  if (r < 1) throw std::domain_error("level_difference_closed: r must be >= 1");
  const double th = d.theta();
  const double s = std::sin(th);
  if (std::abs(s) < kThetaLimitTol)
    throw std::domain_error("level_difference_closed: sin(theta) vanishes");
  return 2.0 * std::sin(r * th / 2.0) / s *
         std::cos((2.0 * n + 1.0 + r) * th / 2.0) * std::cos(th / 2.0);
}

double verify_degeneracy(const AngleFamily& fam) {
  const PhaseDeformation d = degeneracy_angle(fam);
  return std::abs(energy_bm(fam.n + fam.r, d) - energy_bm(fam.n, d));
}

}  // namespace qposc
