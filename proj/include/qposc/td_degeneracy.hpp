#pragma once

#include <utility>
#include <vector>

#include "qposc/numerics.hpp"

namespace qposc {

/// Level pair (m, m+k) whose Tamm-Dancoff degeneracy E_m = E_{m+k} is
/// sought. k = 1 is excluded at m = 0: E_0 = E_1 would need q = 0.
struct DegeneracyPair {
  int m;
  int k;

  DegeneracyPair(int m_, int k_) : m(m_), k(k_) {
    if (m < 0) throw std::domain_error("DegeneracyPair: m must be >= 0");
    if (k < 1) throw std::domain_error("DegeneracyPair: k must be >= 1");
    if (m == 0 && k < 2)
      throw std::domain_error(
          "DegeneracyPair: E_0 = E_1 would require the excluded value q = 0");
  }
};

/// q = sqrt(m / (m+2)) gives E_m = E_{m+1}, m >= 1.
double closed_form_k1(int m);

/// q = (1 + sqrt(4 m^2 + 12 m + 1)) / (2 (m+3)) gives E_m = E_{m+2}, m >= 0.
double closed_form_k2(int m);

/// Degree-(k+1) polynomial whose root in (0,1) yields E_m = E_{m+k}:
///   (m+k+1) q^(k+1) + (m+k) q^k - (m+1) q - m.
Polynomial degeneracy_polynomial(const DegeneracyPair& pair);

/// Root of the degeneracy condition in (0, 1): uniform 1024-cell sign scan
/// over [1e-9, 1 - 1e-9] followed by bisection. If several sign changes are
/// found, the smallest root is returned and the count is reported in
/// RootResult::sign_changes. The spurious factors q (at m = 0) and q + 1
/// (even k) never contribute roots inside the scanned interval.
RootResult solve_degeneracy(const DegeneracyPair& pair, double tol = 1e-13);

/// Roots q with E_0 = E_m for each listed m >= 2, i.e. the solutions of
/// (m+1) q^m + m q^(m-1) - 1 = 0, in input order.
std::vector<std::pair<int, RootResult>> table_E0_Em(
    const std::vector<int>& m_list, double tol = 1e-13);

}  // namespace qposc
