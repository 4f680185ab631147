#include "qposc/td_degeneracy.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace qposc {
namespace {

constexpr int kScanCells = 1024;
constexpr double kScanLo = 1e-9;

RootResult scan_and_bisect_smallest(const std::function<double(double)>& f,
                                    double tol, const std::string& what) {
  const auto brackets = scan_brackets(f, kScanLo, 1.0 - kScanLo, kScanCells);
  if (brackets.empty()) throw no_root_error(what + ": no sign change in (0, 1)");
  RootResult res = bisect(f, brackets.front(), tol);
  res.sign_changes = static_cast<int>(brackets.size());
  return res;
}

}  // namespace

double closed_form_k1(int m) {
  if (m < 1)
    throw std::domain_error(
        "closed_form_k1: m = 0 is excluded (would require q = 0)");
  return std::sqrt(m / (m + 2.0));
}

double closed_form_k2(int m) {
  if (m < 0) throw std::domain_error("closed_form_k2: m must be >= 0");
  return (1.0 + std::sqrt(4.0 * m * m + 12.0 * m + 1.0)) / (2.0 * (m + 3.0));
}

Polynomial degeneracy_polynomial(const DegeneracyPair& pair) {
  std::vector<double> c(pair.k + 2, 0.0);
  c[0] -= pair.m;
  c[1] -= pair.m + 1;
  c[pair.k] += pair.m + pair.k;
  c[pair.k + 1] += pair.m + pair.k + 1;
  return {std::move(c)};
}

RootResult solve_degeneracy(const DegeneracyPair& pair, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("solve_degeneracy: tol must be > 0");
  std::function<double(double)> f;
  if (pair.m == 0) {
    // The constant term vanishes at m = 0; after dividing the spurious root
    // q = 0 out, the condition reads (k+1) q^k + k q^(k-1) - 1 = 0. Direct
    // power evaluation keeps the sign reliable for large k, where q^k
    // underflows far from the root.
    const double k = pair.k;
    f = [k](double q) {
      return (k + 1.0) * std::pow(q, k) + k * std::pow(q, k - 1.0) - 1.0;
    };
  } else {
    f = [poly = degeneracy_polynomial(pair)](double q) {
      return horner_eval(poly, q);
    };
  }
  return scan_and_bisect_smallest(
      f, tol,
      "solve_degeneracy(m=" + std::to_string(pair.m) +
          ", k=" + std::to_string(pair.k) + ")");
}

std::vector<std::pair<int, RootResult>> table_E0_Em(
    const std::vector<int>& m_list, double tol) {
  for (int m : m_list)
    if (m < 2)
      throw std::domain_error("table_E0_Em: every m must be >= 2");
  std::vector<std::pair<int, RootResult>> out;
  out.reserve(m_list.size());
  for (int m : m_list)
    out.emplace_back(m, solve_degeneracy(DegeneracyPair(0, m), tol));
  return out;
}

}  // namespace qposc
