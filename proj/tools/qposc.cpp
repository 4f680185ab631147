// Command-line front end: spectra, degeneracy roots, curve traces and
// constraint intersections, emitted as CSV or JSON.
//
// Exit codes: 0 success, 2 usage/domain error, 3 root search failure.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qposc/bm_degeneracy.hpp"
#include "qposc/brackets.hpp"
#include "qposc/deformation.hpp"
#include "qposc/qp_degeneracy.hpp"
#include "qposc/spectrum.hpp"
#include "qposc/td_degeneracy.hpp"

namespace {

using nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double. Non-finite values
// become bare tokens (inf/-inf/nan), which strtod parses back exactly.
std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty -> stdout
};

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<ordered_json>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& cell = row.at(columns[i]);
      os << (i ? "," : "");
      if (cell.is_number_float())
        os << format_real(cell.get<double>());
      else
        os << cell.dump();
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const std::vector<ordered_json>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json obj;
    for (const auto& [key, cell] : row.items()) {
      if (cell.is_number_float() && !std::isfinite(cell.get<double>()))
        obj[key] = format_real(cell.get<double>());
      else
        obj[key] = cell;
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << "\n";
}

void emit(const OutputOptions& opts, const std::vector<std::string>& columns,
          const std::vector<ordered_json>& rows) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opts.path.empty()) {
    file.open(opts.path, std::ios::binary);  // LF line endings everywhere
    if (!file)
      throw std::invalid_argument("cannot open output file: " + opts.path);
    os = &file;
  }
  if (opts.format == "json")
    write_json(*os, rows);
  else
    write_csv(*os, columns, rows);
}

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.path, "Write to this file instead of stdout");
}

ordered_json root_row(int m, int k, const qposc::RootResult& r) {
  ordered_json row;
  row["m"] = m;
  row["k"] = k;
  row["q"] = r.value;
  row["residual"] = r.residual;
  row["iterations"] = r.iterations;
  return row;
}

const std::vector<std::string> kSpectrumColumns = {"n", "energy"};
const std::vector<std::string> kRootColumns = {"m", "k", "q", "residual",
                                               "iterations"};
const std::vector<std::string> kCurveColumns = {"q", "p", "residual", "dpdq"};
const std::vector<std::string> kBmColumns = {"theta", "n",      "r",
                                             "e_low", "e_high", "diff"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectra and pairwise level degeneracies of q-, Tamm-Dancoff- and "
      "(q,p)-deformed oscillators"};
  app.require_subcommand(1);

  // --- spectrum ------------------------------------------------------------
  auto* spectrum = app.add_subcommand(
      "spectrum", "Energy levels 0..n_max of one oscillator");
  std::string kind;
  double sp_q = 0.0, sp_p = 0.0;
  long long theta_num = 0, theta_den = 1;
  int n_max = 0;
  OutputOptions sp_out;
  double sp_tol = 1e-12;
  spectrum->add_option("--kind", kind, "Oscillator family")
      ->check(CLI::IsMember({"bm", "td", "qp"}))
      ->required();
  auto* opt_q = spectrum->add_option("--q", sp_q, "Deformation parameter q");
  auto* opt_p = spectrum->add_option("--p", sp_p, "Deformation parameter p");
  auto* opt_tn = spectrum->add_option("--theta-num", theta_num,
                                      "theta = pi * num / den (numerator)");
  auto* opt_td = spectrum->add_option("--theta-den", theta_den,
                                      "theta = pi * num / den (denominator)");
  spectrum->add_option("--n-max", n_max, "Highest level")->required();
  spectrum->add_option("--tol", sp_tol, "Unused; accepted for uniformity");
  add_output_options(spectrum, sp_out);
  spectrum->callback([&] {
    std::vector<qposc::EnergyLevel> levels;
    if (kind == "td") {
      if (!*opt_q) throw std::domain_error("spectrum --kind td requires --q");
      levels = qposc::spectrum_table(n_max, qposc::TdDeformation(sp_q));
    } else if (kind == "qp") {
      if (!*opt_q || !*opt_p)
        throw std::domain_error("spectrum --kind qp requires --q and --p");
      levels = qposc::spectrum_table(n_max, qposc::RealDeformation(sp_q, sp_p));
    } else {
      if (!*opt_tn || !*opt_td)
        throw std::domain_error(
            "spectrum --kind bm requires --theta-num and --theta-den");
      levels = qposc::spectrum_table(
          n_max, qposc::PhaseDeformation::pi_fraction(theta_num, theta_den));
    }
    std::vector<ordered_json> rows;
    for (const auto& level : levels) {
      ordered_json row;
      row["n"] = level.n;
      row["energy"] = level.energy;
      rows.push_back(std::move(row));
    }
    emit(sp_out, kSpectrumColumns, rows);
  });

  // --- td-solve ------------------------------------------------------------
  auto* td_solve = app.add_subcommand(
      "td-solve", "Tamm-Dancoff q with E_m = E_{m+k}");
  int ts_m = 0, ts_k = 0;
  double ts_tol = 1e-12;
  OutputOptions ts_out;
  td_solve->add_option("--m", ts_m, "Lower level")->required();
  td_solve->add_option("--k", ts_k, "Level gap")->required();
  td_solve->add_option("--tol", ts_tol, "Residual tolerance")
      ->capture_default_str();
  add_output_options(td_solve, ts_out);
  td_solve->callback([&] {
    const auto res =
        qposc::solve_degeneracy(qposc::DegeneracyPair(ts_m, ts_k), ts_tol);
    emit(ts_out, kRootColumns, {root_row(ts_m, ts_k, res)});
  });

  // --- curve ---------------------------------------------------------------
  auto* curve = app.add_subcommand(
      "curve", "Trace the (q,p) degeneracy curve of a level pair");
  std::vector<int> cv_pair;
  int cv_samples = 256;
  double cv_tol = 1e-12;
  OutputOptions cv_out;
  curve->add_option("--pair", cv_pair, "Level pair m_low,m_high")
      ->delimiter(',')
      ->required();
  curve->add_option("--samples", cv_samples, "Sample count")
      ->capture_default_str();
  curve->add_option("--tol", cv_tol, "Residual tolerance")
      ->capture_default_str();
  add_output_options(curve, cv_out);
  curve->callback([&] {
    if (cv_pair.size() != 2)
      throw std::domain_error("curve --pair expects exactly two levels");
    const qposc::CurveSpec spec(cv_pair[0], cv_pair[1]);
    if (!spec.proof_established())
      std::cerr << "note: monotonicity of the E_" << spec.m_low << " = E_"
                << spec.m_high
                << " curve is not established analytically; output is "
                   "numerical only\n";
    std::vector<ordered_json> rows;
    for (const auto& s : qposc::trace_curve(spec, cv_samples, cv_tol)) {
      ordered_json row;
      row["q"] = s.q;
      row["p"] = s.p;
      row["residual"] = s.residual;
      row["dpdq"] = s.dpdq;
      rows.push_back(std::move(row));
    }
    emit(cv_out, kCurveColumns, rows);
  });

  // --- intersect -----------------------------------------------------------
  auto* intersect = app.add_subcommand(
      "intersect", "Cross a degeneracy curve with the constraint p = q^a");
  std::vector<int> is_pair;
  double is_exponent = 0.0;
  double is_tol = 1e-12;
  OutputOptions is_out;
  intersect->add_option("--pair", is_pair, "Level pair m_low,m_high")
      ->delimiter(',')
      ->required();
  intersect->add_option("--exponent", is_exponent, "Constraint exponent a > 0")
      ->required();
  intersect->add_option("--tol", is_tol, "Residual tolerance")
      ->capture_default_str();
  add_output_options(intersect, is_out);
  intersect->callback([&] {
    if (is_pair.size() != 2)
      throw std::domain_error("intersect --pair expects exactly two levels");
    const qposc::CurveSpec spec(is_pair[0], is_pair[1]);
    const auto res = qposc::intersect_constraint(spec, is_exponent, is_tol);
    emit(is_out, kRootColumns,
         {root_row(spec.m_low, spec.m_high - spec.m_low, res)});
  });

  // --- bm ------------------------------------------------------------------
  auto* bm = app.add_subcommand(
      "bm", "Root-of-unity degeneracy angle and energies for levels (n, n+r)");
  int bm_n = 0, bm_r = 0, bm_k = 0;
  OutputOptions bm_out;
  bm->add_option("--n", bm_n, "Lower level")->required();
  bm->add_option("--r", bm_r, "Level gap")->required();
  bm->add_option("--k", bm_k, "Branch index, |k| <= 10")
      ->capture_default_str();
  add_output_options(bm, bm_out);
  bm->callback([&] {
    if (bm_k < -10 || bm_k > 10)
      throw std::domain_error("bm: branch index limited to |k| <= 10");
    const qposc::AngleFamily fam(bm_n, bm_r, bm_k);
    const qposc::PhaseDeformation angle = qposc::degeneracy_angle(fam);
    const double e_low = qposc::energy_bm(fam.n, angle);
    const double e_high = qposc::energy_bm(fam.n + fam.r, angle);
    ordered_json row;
    row["theta"] = angle.theta();
    row["n"] = fam.n;
    row["r"] = fam.r;
    row["e_low"] = e_low;
    row["e_high"] = e_high;
    row["diff"] = e_high - e_low;
    emit(bm_out, kBmColumns, {row});
  });

  // --- table ---------------------------------------------------------------
  auto* table = app.add_subcommand(
      "table", "Roots q with E_0 = E_m for a list of m >= 2");
  std::vector<int> tb_m;
  double tb_tol = 1e-12;
  OutputOptions tb_out;
  table->add_option("--m", tb_m, "Comma-separated upper levels")
      ->delimiter(',')
      ->required();
  table->add_option("--tol", tb_tol, "Residual tolerance")
      ->capture_default_str();
  add_output_options(table, tb_out);
  table->callback([&] {
    std::vector<ordered_json> rows;
    for (const auto& [m, res] : qposc::table_E0_Em(tb_m, tb_tol))
      rows.push_back(root_row(0, m, res));
    emit(tb_out, kRootColumns, rows);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const qposc::no_root_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qposc::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qposc::evaluation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qposc::singular_slope_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
