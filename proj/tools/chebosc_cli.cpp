// Command-line front end: evaluation of the Mandel parameter, sign-region
// scans, reference-table reproduction, curve data for plotting, and the
// self-verification suite.
//
// Exit codes: 0 success, 1 domain error, 2 convergence failure,
// 3 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebosc/errors.hpp"
#include "chebosc/mandel.hpp"
#include "chebosc/normalization.hpp"
#include "chebosc/oscillator.hpp"
#include "chebosc/polynomials.hpp"
#include "chebosc/reference_tables.hpp"

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string cell_csv(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_unsigned())
    return std::to_string(v.get<unsigned long long>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return fmt12(v.get<double>());
}

// Renders the same row objects as CSV (12 significant digits) or JSON.
void emit(const std::vector<std::string>& header,
          const std::vector<ojson>& rows, const std::string& format,
          const std::string& out_path) {
  std::string text;
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) text += ',';
      text += header[i];
    }
    text += '\n';
    for (const ojson& r : rows) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text += ',';
        text += cell_csv(r.at(header[i]));
      }
      text += '\n';
    }
  } else {
    ojson arr = ojson::array();
    for (const ojson& r : rows) arr.push_back(r);
    text = arr.dump(2);
    text += '\n';
  }
  if (out_path.empty() || out_path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
      throw chebosc::domain_error("cannot open output file: " + out_path);
    f << text;
  }
}

chebosc::MandelResult eval_q(const chebosc::FamilySpec& spec, double x,
                             const std::string& route, double tol) {
  if (route == "auto" || route == "closed") return chebosc::mandel_auto(spec, x);
  if (route == "series") return chebosc::mandel_series(spec, x, tol);
  if (route == "moments") return chebosc::mandel_moments(spec, x, tol);
  throw chebosc::domain_error("unknown route: " + route);
}

chebosc::NormalizationFactor norm_for_route(const chebosc::FamilySpec& spec,
                                            double x,
                                            const std::string& route,
                                            double tol) {
  if (route == "series") return chebosc::n_series(spec, x, tol);
  if (spec.k() == 1) return chebosc::n_closed_k1(spec.a(), x);
  return chebosc::n_closed_general(spec, x);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw chebosc::domain_error("need at least 2 points");
  if (!(lo < hi)) throw chebosc::domain_error("range requires xmin < xmax");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return out;
}

struct CommonCfg {
  int k = 1;
  std::vector<double> as;
  std::string route = "auto";
  std::string format = "csv";
  std::string out;
  double tol = 1e-12;
};

// ---------------------------------------------------------------- eval ----

struct EvalCfg : CommonCfg {
  std::vector<double> xs;
  double xmin = 0.0;
  double xmax = 0.0;
  int points = 0;
  bool with_norm = false;
  bool with_moments = false;
};

void run_eval(const EvalCfg& c) {
  std::vector<double> points = c.xs;
  if (points.empty()) {
    if (c.points == 0)
      throw chebosc::domain_error(
          "eval: provide --x or the --xmin/--xmax/--points range");
    points = linspace(c.xmin, c.xmax, c.points);
  }
  std::vector<std::string> header = {"k", "a", "x", "route", "q"};
  if (c.with_norm) {
    header.push_back("norm");
    header.push_back("norm_d1");
    header.push_back("norm_d2");
  }
  if (c.with_moments) {
    header.push_back("mean");
    header.push_back("variance");
  }
  std::vector<ojson> rows;
  for (double a : c.as) {
    const chebosc::FamilySpec spec(c.k, a);
    for (double x : points) {
      const chebosc::MandelResult r = eval_q(spec, x, c.route, c.tol);
      ojson row;
      row["k"] = c.k;
      row["a"] = a;
      row["x"] = x;
      row["route"] = chebosc::mandel_route_name(r.route);
      row["q"] = r.q;
      if (c.with_norm) {
        const chebosc::NormalizationFactor nf =
            norm_for_route(spec, x, c.route, c.tol);
        row["norm"] = nf.value;
        row["norm_d1"] = nf.d1;
        row["norm_d2"] = nf.d2;
      }
      if (c.with_moments) {
        const chebosc::PhotonMoments m =
            chebosc::coherent_moments(spec, x, c.tol);
        row["mean"] = m.mean;
        row["variance"] = m.variance;
      }
      rows.push_back(std::move(row));
    }
  }
  emit(header, rows, c.format, c.out);
}

// ------------------------------------------------------------- regions ----

struct RegionsCfg : CommonCfg {
  std::size_t grid = 10000;
  double root_tol = 1e-10;
  double min_tol = 1e-8;
};

void run_regions(const RegionsCfg& c) {
  const std::vector<std::string> header = {"k",  "a",  "tau",  "region", "record",
                                           "lo", "hi", "sign", "x",      "q"};
  std::vector<ojson> rows;
  for (double a : c.as) {
    const chebosc::FamilySpec spec(c.k, a);
    const chebosc::SignRegionReport rep =
        chebosc::scan_regions(spec, c.grid, c.root_tol, c.min_tol);
    auto base = [&]() {
      ojson row;
      row["k"] = rep.k;
      row["a"] = rep.a;
      row["tau"] = rep.tau;
      row["region"] = chebosc::region_name(rep.region);
      row["record"] = nullptr;
      row["lo"] = nullptr;
      row["hi"] = nullptr;
      row["sign"] = nullptr;
      row["x"] = nullptr;
      row["q"] = nullptr;
      return row;
    };
    for (double b : rep.boundaries) {
      ojson row = base();
      row["record"] = "boundary";
      row["x"] = b;
      rows.push_back(std::move(row));
    }
    for (const chebosc::SignInterval& iv : rep.intervals) {
      ojson row = base();
      row["record"] = "interval";
      row["lo"] = iv.lo;
      row["hi"] = iv.hi;
      row["sign"] = iv.sign;
      rows.push_back(std::move(row));
    }
    for (const chebosc::QMinimum& m : rep.minima) {
      ojson row = base();
      row["record"] = "minimum";
      row["x"] = m.x;
      row["q"] = m.q;
      rows.push_back(std::move(row));
    }
  }
  emit(header, rows, c.format, c.out);
}

// --------------------------------------------------------------- table ----

struct TableCfg {
  std::string name;
  std::size_t grid = 10000;
  double root_tol = 1e-10;
  double min_tol = 1e-8;
  double tol_scale = 1.0;
  std::string format = "csv";
  std::string out;
};

bool run_table(const TableCfg& c) {
  const auto& refs = (c.name == "pi3") ? chebosc::reference_pi3_rows()
                                       : chebosc::reference_pi1_rows();
  const std::vector<std::string> header = {
      "a",          "region",       "sign_changes", "root1",
      "root1_ref_lo", "root1_ref_hi", "root2",        "root2_ref_lo",
      "root2_ref_hi", "x_min",        "x_min_ref",    "q_min",
      "q_min_ref",    "structure_ok", "boundaries_ok", "minimum_ok",
      "passed",       "flagged"};
  std::vector<ojson> rows;
  bool all_ok = true;
  for (const chebosc::ReferenceRow& ref : refs) {
    const chebosc::ComputedRow comp =
        chebosc::compute_row(2, ref.a, c.grid, c.root_tol, c.min_tol);
    const chebosc::RowCheck rc = chebosc::check_row(ref, comp, c.tol_scale);
    ojson row;
    row["a"] = ref.a;
    row["region"] = chebosc::region_name(comp.report.region);
    row["sign_changes"] = comp.report.boundaries.size();
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string tag = "root" + std::to_string(i + 1);
      row[tag] = (i < comp.report.boundaries.size())
                     ? ojson(comp.report.boundaries[i])
                     : ojson(nullptr);
      row[tag + "_ref_lo"] = (i < ref.boundaries.size())
                                 ? ojson(ref.boundaries[i].below)
                                 : ojson(nullptr);
      row[tag + "_ref_hi"] = (i < ref.boundaries.size())
                                 ? ojson(ref.boundaries[i].above)
                                 : ojson(nullptr);
    }
    row["x_min"] =
        comp.minimum ? ojson(comp.minimum->x) : ojson(nullptr);
    row["x_min_ref"] = ref.x_min;
    row["q_min"] =
        comp.minimum ? ojson(comp.minimum->q) : ojson(nullptr);
    row["q_min_ref"] = ref.q_min;
    row["structure_ok"] = rc.structure_ok;
    row["boundaries_ok"] = rc.boundaries_ok;
    row["minimum_ok"] = rc.minimum_ok;
    row["passed"] = rc.passed;
    row["flagged"] = ref.flagged;
    rows.push_back(std::move(row));
    if (!rc.passed) {
      all_ok = false;
      std::fprintf(stderr, "row a=%s failed: %s\n", fmt12(ref.a).c_str(),
                   rc.detail.c_str());
    }
  }
  if (c.name == "pi1") {
    const double astar = chebosc::negative_window_vanishing_point();
    std::fprintf(stderr,
                 "note: the negative window closes at a ~ %s (computed; the "
                 "reference rows only bracket it between 0.25 and 0.3)\n",
                 fmt12(astar).c_str());
  }
  emit(header, rows, c.format, c.out);
  return all_ok;
}

// ---------------------------------------------------------------- plot ----

struct PlotCfg : CommonCfg {
  double xmin = 0.01;
  double xmax = 1.99;
  int points = 199;
};

void run_plot(const PlotCfg& c) {
  if (!(c.xmin > 0.0) || !(c.xmax < 2.0))
    throw chebosc::domain_error("plot: range must lie inside (0, 2)");
  const std::vector<double> xs = linspace(c.xmin, c.xmax, c.points);
  std::vector<std::string> header = {"x"};
  std::vector<chebosc::FamilySpec> specs;
  for (double a : c.as) {
    specs.emplace_back(c.k, a);
    header.push_back("Q[a=" + fmt12(a) + "]");
  }
  if (specs.empty()) throw chebosc::domain_error("plot: provide --a values");
  std::vector<ojson> rows;
  for (double x : xs) {
    ojson row;
    row["x"] = x;
    for (std::size_t i = 0; i < specs.size(); ++i)
      row[header[i + 1]] = eval_q(specs[i], x, c.route, c.tol).q;
    rows.push_back(std::move(row));
  }
  emit(header, rows, c.format, c.out);
}

// -------------------------------------------------------------- verify ----

struct VerifyCfg {
  std::string only;
  double tol_scale = 1.0;
  std::size_t grid = 10000;
  std::string format = "json";
  std::string out;
};

struct CheckSink {
  std::vector<ojson> rows;
  bool all_ok = true;

  void add(const std::string& suite, const std::string& name, bool passed,
           const std::string& detail) {
    std::fprintf(stderr, "[%s] %s/%s%s%s\n", passed ? "PASS" : "FAIL",
                 suite.c_str(), name.c_str(), detail.empty() ? "" : " - ",
                 detail.c_str());
    ojson row;
    row["suite"] = suite;
    row["check"] = name;
    row["passed"] = passed;
    row["detail"] = detail;
    rows.push_back(std::move(row));
    if (!passed) all_ok = false;
  }
};

void verify_routes(CheckSink& sink, double tol_scale) {
  const double tol = 1e-8 * tol_scale;
  const int ks[] = {1, 2, 3};
  const double avals[] = {0.3, 1.0 / std::sqrt(2.0), 1.0, std::sqrt(2.0),
                          2.0, 5.0};
  for (int k : ks) {
    for (double a : avals) {
      const chebosc::FamilySpec spec(k, a);
      double maxdev = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double x =
            0.02 + (1.98 - 0.02) * static_cast<double>(i + 1) / 51.0;
        const double qc = chebosc::mandel_auto(spec, x).q;
        const double qs = chebosc::mandel_series(spec, x).q;
        const double qm = chebosc::mandel_moments(spec, x).q;
        maxdev = std::max({maxdev, std::abs(qc - qs), std::abs(qc - qm),
                           std::abs(qs - qm)});
      }
      sink.add("routes", "k=" + std::to_string(k) + ",a=" + fmt12(a),
               maxdev <= tol, "max deviation " + fmt12(maxdev));
    }
  }
}

void verify_orthonormality(CheckSink& sink, double tol_scale) {
  const double tol = 1e-6 * tol_scale;
  const double avals[] = {0.5, 1.0 / std::sqrt(2.0), 1.0, std::sqrt(2.0), 2.0};
  for (double a : avals) {
    const chebosc::FamilySpec spec(1, a);
    double maxdev = 0.0;
    for (int m = 0; m <= 12; ++m) {
      for (int n = m; n <= 12; ++n) {
        const double inner = chebosc::integrate_measure(
            [&](double x) {
              return chebosc::eval_poly(spec, m, x) *
                     chebosc::eval_poly(spec, n, x);
            },
            a, 1e-9);
        const double expected = (m == n) ? 1.0 : 0.0;
        maxdev = std::max(maxdev, std::abs(inner - expected));
      }
    }
    sink.add("orthonormality", "a=" + fmt12(a), maxdev <= tol,
             "max deviation " + fmt12(maxdev) + " over degrees 0..12");
  }
}

void verify_pi2(CheckSink& sink) {
  double minp = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  std::string witness;
  for (int i = 1; i <= 200; ++i) {
    const double t = static_cast<double>(i) / 201.0;
    for (int j = 1; j <= 200; ++j) {
      const double tau = 1.0 + static_cast<double>(j) / 200.0;
      minp = std::min(minp, chebosc::p_poly(2, tau, t));
      const chebosc::Pi2Certificate cert =
          chebosc::pi2_positivity_check(tau, t);
      if (!cert.ok) {
        ++failures;
        if (witness.empty())
          witness = "t=" + fmt12(t) + ", tau=" + fmt12(tau) +
                    ", gamma1=" + fmt12(cert.gamma1);
      }
    }
  }
  sink.add("pi2", "p2-positive-grid", minp > 0.0,
           "min P2 over the 200x200 grid is " + fmt12(minp));
  sink.add("pi2", "gamma-certificate-grid", failures == 0,
           failures == 0
               ? "termwise certificate holds at all 40000 grid points"
               : "termwise certificate fails at " + std::to_string(failures) +
                     "/40000 grid points (P2 itself stays positive); first "
                     "failure at " +
                     witness);
}

void verify_psi(CheckSink& sink) {
  const chebosc::PsiBound b = chebosc::psi_bound_check(10000);
  sink.add("psi", "nonpositive-on-unit-interval", b.nonpositive,
           "max " + fmt12(b.max_value) + "; min " + fmt12(b.min_value) +
               " at t=" + fmt12(b.argmin));
}

void verify_coeffs(CheckSink& sink, double tol_scale) {
  const double tol = 1e-10 * tol_scale;
  double maxrel = 0.0;
  for (int k : {1, 2, 3}) {
    for (double a : {0.3, 0.7, 1.0, 2.0}) {
      const chebosc::FamilySpec spec(k, a);
      for (int n = 0; n <= 12; ++n) {
        const chebosc::CoefficientList e = chebosc::coeff_list_explicit(spec, n);
        const chebosc::CoefficientList r =
            chebosc::coeff_list_recurrence(spec, n);
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
          if (e.coeffs[j] == 0.0 && r.coeffs[j] == 0.0) continue;
          const double rel =
              std::abs(e.coeffs[j] - r.coeffs[j]) /
              std::max(std::abs(e.coeffs[j]), std::abs(r.coeffs[j]));
          maxrel = std::max(maxrel, rel);
        }
      }
    }
  }
  sink.add("coeffs", "explicit-vs-recurrence", maxrel <= tol,
           "max relative deviation " + fmt12(maxrel) +
               " over n<=12, k in {1,2,3}");

  double maxrel_list = 0.0;
  for (double a : {0.7, 1.3}) {
    const chebosc::FamilySpec spec(1, a);
    const std::vector<chebosc::CoefficientList> listed =
        chebosc::reference_low_order_polynomials(a);
    for (std::size_t n = 0; n < listed.size(); ++n) {
      const chebosc::CoefficientList r =
          chebosc::coeff_list_recurrence(spec, static_cast<int>(n));
      for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
        if (listed[n].coeffs[j] == 0.0 && r.coeffs[j] == 0.0) continue;
        const double rel =
            std::abs(listed[n].coeffs[j] - r.coeffs[j]) /
            std::max(std::abs(listed[n].coeffs[j]), std::abs(r.coeffs[j]));
        maxrel_list = std::max(maxrel_list, rel);
      }
    }
  }
  sink.add("coeffs", "low-order-list-vs-recurrence", maxrel_list <= tol,
           "max relative deviation " + fmt12(maxrel_list) +
               " over degrees 0..10");
}

void verify_tables(CheckSink& sink, double tol_scale, std::size_t grid) {
  const struct {
    const char* tag;
    const std::vector<chebosc::ReferenceRow>& rows;
  } tables[] = {{"pi3", chebosc::reference_pi3_rows()},
                {"pi1", chebosc::reference_pi1_rows()}};
  for (const auto& tb : tables) {
    for (const chebosc::ReferenceRow& ref : tb.rows) {
      const chebosc::ComputedRow comp = chebosc::compute_row(2, ref.a, grid);
      const chebosc::RowCheck rc = chebosc::check_row(ref, comp, tol_scale);
      sink.add("tables", std::string(tb.tag) + "-a=" + fmt12(ref.a), rc.passed,
               rc.detail);
    }
  }
}

bool run_verify(const VerifyCfg& c) {
  const std::vector<std::string> header = {"suite", "check", "passed",
                                           "detail"};
  CheckSink sink;
  auto wanted = [&](const char* suite) {
    return c.only.empty() || c.only == suite;
  };
  if (wanted("routes")) verify_routes(sink, c.tol_scale);
  if (wanted("orthonormality")) verify_orthonormality(sink, c.tol_scale);
  if (wanted("pi2")) verify_pi2(sink);
  if (wanted("psi")) verify_psi(sink);
  if (wanted("coeffs")) verify_coeffs(sink, c.tol_scale);
  if (wanted("tables")) verify_tables(sink, c.tol_scale, c.grid);
  std::size_t failed = 0;
  for (const ojson& row : sink.rows)
    if (!row.at("passed").get<bool>()) ++failed;
  std::fprintf(stderr, "%zu checks, %zu failed\n", sink.rows.size(), failed);
  emit(header, sink.rows, c.format, c.out);
  return sink.all_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized Chebyshev oscillator toolkit: coherent-state photon "
      "statistics, Mandel parameter, and sub-Poissonian sign regions"};
  app.require_subcommand(1);
  int exit_code = 0;

  EvalCfg ec;
  ec.as = {1.0};
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate the Mandel parameter at given intensities");
  eval->add_option("--k", ec.k, "perturbation position k >= 1")
      ->capture_default_str();
  eval->add_option("--a", ec.as, "coupling value(s) a > 0")
      ->delimiter(',')
      ->capture_default_str();
  CLI::Option* eval_x =
      eval->add_option("--x", ec.xs, "intensity value(s) in [0, 2)")
          ->delimiter(',');
  CLI::Option* eval_xmin = eval->add_option("--xmin", ec.xmin, "range start");
  CLI::Option* eval_xmax = eval->add_option("--xmax", ec.xmax, "range end");
  CLI::Option* eval_points =
      eval->add_option("--points", ec.points, "number of range points (>= 2)");
  eval_x->excludes(eval_xmin)->excludes(eval_xmax)->excludes(eval_points);
  eval->add_option("--route", ec.route,
                   "formula route; auto selects the closed form")
      ->check(CLI::IsMember({"auto", "closed", "series", "moments"}))
      ->capture_default_str();
  eval->add_option("--tol", ec.tol, "series/moments tail tolerance")
      ->capture_default_str();
  eval->add_option("--format", ec.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  eval->add_option("--out", ec.out, "output path (default stdout)");
  eval->add_flag("--with-norm", ec.with_norm,
                 "append normalization value and derivatives");
  eval->add_flag("--with-moments", ec.with_moments,
                 "append photon-number mean and variance");
  eval->callback([&] { run_eval(ec); });

  RegionsCfg rc;
  rc.as = {1.0};
  CLI::App* regions = app.add_subcommand(
      "regions", "Locate the sign windows and minima of the Mandel parameter");
  regions->add_option("--k", rc.k, "perturbation position k >= 1")
      ->capture_default_str();
  regions->add_option("--a", rc.as, "coupling value(s) a > 0")
      ->delimiter(',')
      ->capture_default_str();
  regions->add_option("--grid", rc.grid, "scan grid size (>= 100)")
      ->capture_default_str();
  regions->add_option("--root-tol", rc.root_tol, "bisection tolerance in t")
      ->capture_default_str();
  regions->add_option("--min-tol", rc.min_tol, "minimum search tolerance in x")
      ->capture_default_str();
  regions->add_option("--format", rc.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  regions->add_option("--out", rc.out, "output path (default stdout)");
  regions->callback([&] { run_regions(rc); });

  TableCfg tc;
  CLI::App* table = app.add_subcommand(
      "table", "Recompute a reference table and compare row by row");
  table->add_option("name", tc.name, "which table: pi3 or pi1")
      ->required()
      ->check(CLI::IsMember({"pi3", "pi1"}));
  table->add_option("--grid", tc.grid, "scan grid size (>= 100)")
      ->capture_default_str();
  table->add_option("--root-tol", tc.root_tol, "bisection tolerance in t")
      ->capture_default_str();
  table->add_option("--min-tol", tc.min_tol, "minimum search tolerance in x")
      ->capture_default_str();
  table->add_option("--tol-scale", tc.tol_scale,
                    "multiplier applied to every comparison tolerance")
      ->capture_default_str();
  table->add_option("--format", tc.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", tc.out, "output path (default stdout)");
  table->callback([&] {
    if (!run_table(tc)) exit_code = 3;
  });

  PlotCfg pc;
  pc.as = {0.5, 0.65, 1.0, 2.0};
  CLI::App* plot = app.add_subcommand(
      "plot", "Emit Mandel-parameter curves sampled on an intensity range");
  plot->add_option("--k", pc.k, "perturbation position k >= 1")
      ->capture_default_str();
  plot->add_option("--a", pc.as, "coupling value(s), one curve each")
      ->delimiter(',')
      ->capture_default_str();
  plot->add_option("--xmin", pc.xmin, "range start (> 0)")
      ->capture_default_str();
  plot->add_option("--xmax", pc.xmax, "range end (< 2)")
      ->capture_default_str();
  plot->add_option("--points", pc.points, "number of samples (>= 2)")
      ->capture_default_str();
  plot->add_option("--route", pc.route,
                   "formula route; auto selects the closed form")
      ->check(CLI::IsMember({"auto", "closed", "series", "moments"}))
      ->capture_default_str();
  plot->add_option("--tol", pc.tol, "series/moments tail tolerance")
      ->capture_default_str();
  plot->add_option("--format", pc.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  plot->add_option("--out", pc.out, "output path (default stdout)");
  plot->callback([&] { run_plot(pc); });

  VerifyCfg vc;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the self-verification suites and report each check");
  verify->add_option("--only", vc.only, "run a single suite")
      ->check(CLI::IsMember({"routes", "orthonormality", "pi2", "psi",
                             "coeffs", "tables"}));
  verify->add_option("--tol-scale", vc.tol_scale,
                     "multiplier applied to every comparison tolerance")
      ->capture_default_str();
  verify->add_option("--grid", vc.grid, "scan grid for the table suite")
      ->capture_default_str();
  verify->add_option("--format", vc.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  verify->add_option("--out", vc.out, "output path (default stdout)");
  verify->callback([&] {
    if (!run_verify(vc)) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const chebosc::convergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const chebosc::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
