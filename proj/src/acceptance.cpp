#include "lieconc/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lieconc/cpn.hpp"
#include "lieconc/curvature.hpp"
#include "lieconc/haar.hpp"
#include "lieconc/volumes.hpp"

namespace lieconc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool exact_volumes(CriterionResult& r, const AcceptanceOptions&) {
  bool ok = true;
  int checked = 0;
  for (SeriesTag tag : {SeriesTag::A, SeriesTag::B, SeriesTag::C, SeriesTag::D})
    for (int n = min_n(tag); n <= 10; ++n) {
      const Series s{tag, n};
      ++checked;
      if (!(macdonald_volume(s) == closed_form_volume(s))) {
        ok = false;
        r.details.push_back("mismatch at " + group_name(s));
      }
    }
  r.details.push_back(fmt("%d groups compared exactly", checked));
  return ok;
}

bool ratio_asymptotics(CriterionResult& r, const AcceptanceOptions&) {
  bool ok = true;
  for (SeriesTag tag : {SeriesTag::A, SeriesTag::B, SeriesTag::C, SeriesTag::D}) {
    const Series s{tag, 50};
    const double q = ratio_exponent(s) / ratio_asymptote(s);
    ok = ok && q >= 0.98 && q <= 1.02;
    r.details.push_back(fmt("%c n=50: ratio/asymptote = %.6f", tag_letter(tag), q));
  }
  return ok;
}

bool curvature_identities(CriterionResult& r, const AcceptanceOptions&) {
  bool ok = true;
  double worst_ricci = 0.0, worst_route = 0.0;
  auto check = [&](AlgebraKind kind, int size) {
    const auto rep = curvature_report(make_basis(kind, size));
    worst_ricci = std::max(worst_ricci, rep.ricci_killing_gap);
    worst_route = std::max(worst_route, rep.killing_route_gap);
    ok = ok && rep.ricci_killing_gap <= 1e-9 && rep.killing_route_gap <= 1e-9;
    return rep;
  };
  for (int n = 2; n <= 8; ++n) {
    const auto rep = check(AlgebraKind::Unitary, n);
    r.details.push_back(fmt("su(%d): chi = %.9g, printed n+2 = %g, %s", n, rep.chi.chi, rep.published_chi,
                            rep.chi_matches_published ? "agrees" : "differs"));
  }
  for (int m = 3; m <= 12; ++m) {
    const auto rep = check(AlgebraKind::Orthogonal, m);
    if (std::abs(rep.chi.chi - (m - 2)) > 1e-9) {
      ok = false;
      r.details.push_back(fmt("so(%d): chi = %.12g, expected %d", m, rep.chi.chi, m - 2));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto rep = check(AlgebraKind::Symplectic, n);
    if (std::abs(rep.chi.chi - (2 * n + 2)) > 1e-9) {
      ok = false;
      r.details.push_back(fmt("usp(%d): chi = %.12g, expected %d", 2 * n, rep.chi.chi, 2 * n + 2));
    }
  }
  r.details.push_back(fmt("max |Ric + K/4| = %.3g, max Killing route gap = %.3g", worst_ricci, worst_route));
  r.details.push_back("so(m) chi = m-2 for m = 3..12 and usp(2n) chi = 2n+2 for n = 1..6 checked");
  return ok;
}

bool band_identity(CriterionResult& r, const AcceptanceOptions&) {
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n)
    for (int k = 0; k < 16; ++k) {
      const auto b = band_mass(n, 0.1 * k);
      worst = std::max(worst, std::abs(b.quadrature - b.closed_form));
    }
  r.details.push_back(fmt("max |quadrature - cos^{2n}eps/(2n)| = %.3g over n = 1..20, eps = 0, 0.1, ..., 1.5", worst));
  return worst <= 1e-10;
}

bool su_concentration(CriterionResult& r, const AcceptanceOptions& o) {
  const long count = o.quick ? 20000 : 100000;
  bool ok = true;
  std::uint64_t salt = 0;
  for (int n : {5, 10, 20})
    for (double rad : {0.2, 0.4}) {
      const auto rep = concentration_experiment({GroupFamily::SU, n + 1, count, o.seed + ++salt, o.workers}, rad);
      const bool pass = std::abs(rep.z_score) < 3.0;
      ok = ok && pass;
      r.details.push_back(fmt("SU(%d) r=%.1f: empirical %.5f, predicted %.5f, z = %+.2f", n + 1, rad,
                              rep.empirical_mass, rep.predicted_mass, rep.z_score));
    }
  int ks_pass = 0;
  for (int k = 0; k < 3; ++k) {
    const auto ks = zeta_squared_ks({GroupFamily::SU, 11, count, o.seed + 100 + k, o.workers});
    ks_pass += ks.pvalue > 0.01;
    r.details.push_back(fmt("|zeta0|^2 vs 1-(1-s)^10, seed %d: D = %.5f, p = %.4f", k, ks.statistic, ks.pvalue));
  }
  return ok && ks_pass >= 2;
}

bool product_factorization(CriterionResult& r, const AcceptanceOptions& o) {
  const long count = o.quick ? 20000 : 100000;
  bool ok = true;
  std::uint64_t salt = 200;
  const std::pair<GroupFamily, int> cases[] = {{GroupFamily::SO, 5}, {GroupFamily::SO, 6}, {GroupFamily::USp, 2}, {GroupFamily::USp, 3}};
  for (const auto& [f, size] : cases) {
    const auto rep = concentration_experiment({f, size, count, o.seed + ++salt, o.workers}, 0.5);
    ok = ok && std::abs(rep.z_score) < 3.0;
    r.details.push_back(fmt("%s on %s, r=0.5: empirical %.5f, predicted %.5f, z = %+.2f", rep.group.c_str(),
                            rep.base.c_str(), rep.empirical_mass, rep.predicted_mass, rep.z_score));
  }
  return ok;
}

bool geometry_checks(CriterionResult& r, const AcceptanceOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> th(0.0, 2 * kPi), ph(0.05, kPi / 2 - 0.05);
  std::normal_distribution<double> g;
  auto coords = [&](int n) {
    QuotientCoords c;
    for (int a = 0; a < n; ++a) {
      c.thetas.push_back(th(rng));
      c.phis.push_back(ph(rng));
    }
    return c;
  };
  double dens = 0.0;
  for (int n : {1, 2})
    for (int t = 0; t < 50; ++t) {
      const auto c = coords(n);
      dens = std::max(dens, std::abs(vielbein_density(c) - measure_density(c)));
    }
  double metric = 0.0;
  for (int t = 0; t < 100; ++t) {
    AffineAngular a{ph(rng), Eigen::VectorXd(2), Eigen::VectorXd(2)};
    AngularVelocity v{g(rng), Eigen::VectorXd(2), Eigen::VectorXd(2)};
    for (int i = 0; i < 2; ++i) {
      a.r(i) = g(rng);
      a.psi(i) = th(rng);
      v.dr(i) = g(rng);
      v.dpsi(i) = g(rng);
    }
    a.r.normalize();
    v.dr -= a.r.dot(v.dr) * a.r;
    metric = std::max(metric, std::abs(fs_metric_angular(a, v) - fs_metric_pullback(a, v)));
  }
  double mc = 0.0;
  for (int t = 0; t < 20; ++t) mc = std::max(mc, structure_equation_residual(coords(2)));
  r.details.push_back(fmt("vielbein density vs closed form (n = 1, 2; 100 points): %.3g", dens));
  r.details.push_back(fmt("angular vs pulled-back affine FS metric (n = 2; 100 points): %.3g", metric));
  r.details.push_back(fmt("Maurer-Cartan structure equation residual (n = 2; 20 points): %.3g", mc));
  return dens <= 1e-8 && metric <= 1e-8 && mc < 1e-4;
}

bool calibration_closure(CriterionResult& r, const AcceptanceOptions&) {
  bool ok = true;
  for (int n : {1, 2}) {
    const auto c = calibrate(n);
    ok = ok && c.relative_error <= 1e-6;
    std::string periods;
    for (double p : c.theta_periods) periods += fmt("%s%.6g", periods.empty() ? "" : ", ", p / kPi) + "pi";
    r.details.push_back(fmt("n=%d: theta periods [%s], phi in [0, pi/2], %g * integral = %.12g vs %s = %.12g, rel err %.2g",
                            n, periods.c_str(), c.volume_factor, c.volume_factor * c.density_integral,
                            c.quotient.to_string().c_str(), c.quotient.to_double(), c.relative_error));
  }
  return ok;
}

struct CriterionDef {
  const char* title;
  double budget;
  bool (*run)(CriterionResult&, const AcceptanceOptions&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"exact volume reproduction", 5, exact_volumes},
    {"ratio asymptotics", 1, ratio_asymptotics},
    {"curvature identities", 30, curvature_identities},
    {"band integral identity", 1, band_identity},
    {"SU concentration law", 180, su_concentration},
    {"product factorization", 180, product_factorization},
    {"geometry cross-checks", 60, geometry_checks},
    {"calibration closure", 60, calibration_closure},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("run_criterion: no criterion " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = def.title;
  r.budget_seconds = def.budget;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = def.run(r, opts);
  } catch (const std::exception& e) {
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_budget = r.seconds < r.budget_seconds;
  r.passed = ok && r.within_budget;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, opts));
    if (progress) progress(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  return fmt("criterion %d %s  %s  (%.2f s / %g s)", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
             r.budget_seconds);
}

}  // namespace lieconc
