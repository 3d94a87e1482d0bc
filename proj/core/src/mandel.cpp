#include "chebosc/mandel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chebosc/errors.hpp"
#include "chebosc/numerics.hpp"
#include "chebosc/oscillator.hpp"

namespace chebosc {

namespace {

void check_intensity(double x, const char* where) {
  if (!(x >= 0.0) || !(x < 2.0))
    throw domain_error(std::string(where) + ": intensity must lie in [0, 2)");
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

const char* mandel_route_name(MandelRoute route) noexcept {
  switch (route) {
    case MandelRoute::closed_k1: return "closed-k1";
    case MandelRoute::closed_k2: return "closed-k2";
    case MandelRoute::closed_general: return "closed-general";
    case MandelRoute::series: return "series";
    case MandelRoute::moments: return "moments";
  }
  return "unknown";
}

double mandel_general(const NormalizationFactor& nf, double x) {
  check_intensity(x, "mandel_general");
  if (x == 0.0) return 0.0;
  if (!(nf.value > 0.0) || !(nf.d1 > 0.0))
    throw domain_error("mandel_general: normalization factor is degenerate");
  return x * (nf.d2 / nf.d1 - nf.d1 / nf.value);
}

double mandel_closed_k1(double a, double x) {
  if (!(a > 0.0)) throw domain_error("mandel_closed_k1: requires a > 0");
  check_intensity(x, "mandel_closed_k1");
  if (x == 0.0) return 0.0;
  const double a2 = a * a;
  return (2.0 * x / (2.0 - x)) * (1.0 - 1.0 / (x + a2 * (2.0 - x)));
}

double mandel_closed_k2(double a, double x) {
  if (!(a > 0.0)) throw domain_error("mandel_closed_k2: requires a > 0");
  check_intensity(x, "mandel_closed_k2");
  if (x == 0.0) return 0.0;
  const double a2 = a * a;
  const double a4 = a2 * a2;
  const double x2 = x * x;
  const double g = x - 2.0;
  const double g2 = g * g;
  const double numerator =
      a4 * g2 * g2 + x2 * (8.0 - 8.0 * x + x2) -
      2.0 * a2 * (16.0 - 16.0 * x + 16.0 * x2 - 8.0 * x2 * x + x2 * x2);
  const double denominator =
      g * (a2 * g2 - (x - 4.0) * x) * (a2 * (x2 - 4.0) - x2);
  if (denominator == 0.0)
    throw domain_error("mandel_closed_k2: denominator vanished");
  return -x * numerator / denominator;
}

MandelResult mandel_auto(const FamilySpec& spec, double x) {
  if (spec.k() == 1)
    return {x, mandel_closed_k1(spec.a(), x), MandelRoute::closed_k1};
  if (spec.k() == 2)
    return {x, mandel_closed_k2(spec.a(), x), MandelRoute::closed_k2};
  return {x, mandel_general(n_closed_general(spec, x), x),
          MandelRoute::closed_general};
}

MandelResult mandel_series(const FamilySpec& spec, double x, double tol) {
  return {x, mandel_general(n_series(spec, x, tol), x), MandelRoute::series};
}

MandelResult mandel_moments(const FamilySpec& spec, double x, double tol) {
  check_intensity(x, "mandel_moments");
  if (x == 0.0) return {x, 0.0, MandelRoute::moments};
  return {x, mandel_from_moments(coherent_moments(spec, x, tol)),
          MandelRoute::moments};
}

int sign_k1(double a, double x) {
  if (!(a > 0.0)) throw domain_error("sign_k1: requires a > 0");
  check_intensity(x, "sign_k1");
  if (x == 0.0) return 0;
  const double a2 = a * a;
  return sign_of(x * (1.0 - a2) + 2.0 * a2 - 1.0);
}

std::optional<double> boundary_k1(double a) {
  if (!(a > 0.0)) throw domain_error("boundary_k1: requires a > 0");
  const double a2 = a * a;
  if (!(a2 < 0.5)) return std::nullopt;
  return (1.0 - 2.0 * a2) / (1.0 - a2);
}

double p_poly(int k, double tau, double t) {
  if (k < 1) throw domain_error("p_poly: k must be positive");
  if (!(tau > 0.0)) throw domain_error("p_poly: tau must be positive");
  const double kd = static_cast<double>(k);
  const double om = 1.0 - tau;
  const double om2 = om * om;
  double p = tau * tau;
  if (k >= 2) {
    // These two terms carry the factor k(k-1), which vanishes at k = 1
    // along with the formal negative power t^{k-2}.
    const double c = tau * om * kd * (kd - 1.0);
    p += c * std::pow(t, k - 2);
    p -= 2.0 * c * std::pow(t, k - 1);
  }
  p += tau * om * (kd * (kd - 1.0) + 2.0) * std::pow(t, k);
  p -= om2 * kd * std::pow(t, 2 * k - 2);
  p += 2.0 * om2 * kd * std::pow(t, 2 * k - 1);
  if (k >= 2) p -= om2 * (kd - 1.0) * std::pow(t, 2 * k);
  return p;
}

double q_k(int k, double tau, double t) {
  const NormTDerivatives d = n_closed_general_t(k, tau, t);
  return d.d2t * d.value - d.d1t * d.d1t;
}

double q_k_fd_oracle(int k, double tau, double t, double h) {
  const double value = n_closed_general_t(k, tau, t).value;
  const CentralDerivatives cd = central_diff(
      [&](double s) { return n_closed_general_t(k, tau, s).value; }, t, h);
  return cd.d2 * value - cd.d1 * cd.d1;
}

Region classify_region(double tau) {
  if (!(tau > 0.0)) throw domain_error("classify_region: tau must be positive");
  if (tau <= 1.0) return Region::pi1;
  if (tau <= 2.0) return Region::pi2;
  return Region::pi3;
}

const char* region_name(Region region) noexcept {
  switch (region) {
    case Region::pi1: return "pi1";
    case Region::pi2: return "pi2";
    case Region::pi3: return "pi3";
  }
  return "unknown";
}

double psi_poly(double t) { return 3.0 * t * t * t - 2.0 * t * t - 1.0; }

PsiBound psi_bound_check(std::size_t grid) {
  if (grid < 2) throw domain_error("psi_bound_check: grid too small");
  PsiBound b{-std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(), 0.0, false};
  for (std::size_t i = 0; i <= grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid);
    const double v = psi_poly(t);
    if (v > b.max_value) b.max_value = v;
    if (v < b.min_value) {
      b.min_value = v;
      b.argmin = t;
    }
  }
  b.nonpositive = b.max_value <= 0.0;
  return b;
}

Pi2Certificate pi2_positivity_check(double tau, double t) {
  const double d = tau - 1.0;
  const double d2 = d * d;
  Pi2Certificate c{};
  c.gamma1 = 1.0 - d2 - 2.0 * d2 * t * t + 3.0 * d2 * t * t * t;
  c.gamma2 = 4.0 * tau * d * t * (1.0 - t);
  c.gamma3 = d2 * (1.0 - t) * t * t * t;
  c.sum = c.gamma1 + c.gamma2 + c.gamma3;
  c.p2 = p_poly(2, tau, t);
  // The decomposition is an exact algebraic identity, so the reassembly
  // tolerance only absorbs rounding.
  c.ok = c.gamma1 >= 0.0 && c.gamma2 >= 0.0 && c.gamma3 >= 0.0 &&
         std::abs(c.sum - c.p2) <= 1e-10;
  return c;
}

SignRegionReport scan_regions(const FamilySpec& spec, std::size_t grid,
                              double root_tol, double min_tol) {
  if (grid < 100) throw domain_error("scan_regions: grid must be at least 100");
  if (!(root_tol > 0.0) || !(min_tol > 0.0))
    throw domain_error("scan_regions: tolerances must be positive");
  const double tau = spec.a() * spec.a();
  const int k = spec.k();
  auto p = [&](double t) { return p_poly(k, tau, t); };

  SignRegionReport rep;
  rep.k = k;
  rep.a = spec.a();
  rep.tau = tau;
  rep.region = classify_region(tau);

  const std::size_t n = grid;
  std::vector<double> ts(n), ps(n);
  for (std::size_t i = 0; i < n; ++i) {
    ts[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
    ps[i] = p(ts[i]);
  }

  std::vector<double> roots_t;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ps[i] == 0.0) {
      roots_t.push_back(ts[i]);
      continue;
    }
    if (ps[i + 1] == 0.0) continue;  // recorded when the loop reaches it
    if ((ps[i] < 0.0) != (ps[i + 1] < 0.0))
      roots_t.push_back(bisect(p, ts[i], ts[i + 1], root_tol).root);
  }
  if (ps[n - 1] == 0.0) roots_t.push_back(ts[n - 1]);

  for (double t : roots_t) rep.boundaries.push_back(2.0 * t);

  std::vector<double> edges;
  edges.reserve(roots_t.size() + 2);
  edges.push_back(0.0);
  edges.insert(edges.end(), roots_t.begin(), roots_t.end());
  edges.push_back(1.0);
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    const double mid = 0.5 * (edges[j] + edges[j + 1]);
    rep.intervals.push_back(
        {2.0 * edges[j], 2.0 * edges[j + 1], sign_of(p(mid))});
  }

  auto qf = [&](double x) { return mandel_auto(spec, x).q; };
  for (const SignInterval& iv : rep.intervals) {
    if (iv.sign >= 0) continue;
    const double tlo = iv.lo / 2.0;
    const double thi = iv.hi / 2.0;
    std::size_t best = n;
    double bestq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(ts[i] > tlo) || !(ts[i] < thi)) continue;
      const double q = qf(2.0 * ts[i]);
      if (q < bestq) {
        bestq = q;
        best = i;
      }
    }
    double xl = iv.lo;
    double xr = iv.hi;
    if (best < n) {
      if (best > 0 && ts[best - 1] > tlo) xl = 2.0 * ts[best - 1];
      if (best + 1 < n && ts[best + 1] < thi) xr = 2.0 * ts[best + 1];
    }
    const GoldenMinimum gm = golden_min(qf, xl, xr, min_tol);
    rep.minima.push_back({gm.x, gm.value});
  }
  return rep;
}

std::optional<QMinimum> interior_minimum(const FamilySpec& spec,
                                         std::size_t grid, double min_tol) {
  if (grid < 8) throw domain_error("interior_minimum: grid too small");
  const std::size_t n = grid;
  auto qf = [&](double x) { return mandel_auto(spec, x).q; };
  std::vector<double> xs(n), qs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = 2.0 * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    qs[i] = qf(xs[i]);
  }
  std::size_t best = n;
  double bestq = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (qs[i] < qs[i - 1] && qs[i] < qs[i + 1] && qs[i] < bestq) {
      best = i;
      bestq = qs[i];
    }
  }
  if (best == n) return std::nullopt;
  const GoldenMinimum gm = golden_min(qf, xs[best - 1], xs[best + 1], min_tol);
  return QMinimum{gm.x, gm.value};
}

}  // namespace chebosc
