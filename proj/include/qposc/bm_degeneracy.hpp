#pragma once

#include "qposc/deformation.hpp"

namespace qposc {

/// Indices of one root-of-unity degeneracy family: levels (n, n+r) become
/// degenerate at theta = pi (2k+1) / (2n + r + 1) for any integer branch k.
struct AngleFamily {
  int n;
  int r;
  int k;

  AngleFamily(int n_, int r_, int k_) : n(n_), r(r_), k(k_) {
    if (n < 0) throw std::domain_error("AngleFamily: n must be >= 0");
    if (r < 1) throw std::domain_error("AngleFamily: r must be >= 1");
  }
};

/// theta = pi (2k+1) / (2n + r + 1), normalized into (-pi, pi].
PhaseDeformation degeneracy_angle(const AngleFamily& fam);

/// Closed form of E_{n+r} - E_n:
///   2 sin(r t/2) cos((2n+1+r) t/2) cos(t/2) / sin(t).
double level_difference_closed(int n, int r, const PhaseDeformation& d);

/// |E_{n+r} - E_n| at the family's degeneracy angle; zero up to rounding.
double verify_degeneracy(const AngleFamily& fam);

}  // namespace qposc
