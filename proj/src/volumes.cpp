#include "lieconc/volumes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lieconc/root_system.hpp"

namespace lieconc {

namespace {

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

void check_center_order(const Series& s, int gamma) {
  if (gamma < 1 || center_order(s) % gamma != 0) {
    throw std::invalid_argument("center order " + std::to_string(gamma) + " does not divide |Z(" +
                                group_name(s) + ")| = " + std::to_string(center_order(s)));
  }
}

ExactScalar two_pow(unsigned e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return ExactScalar(mpq_class(p));
}

}  // namespace

ExactScalar sphere_volume(int d) {
  if (d < 1) throw std::invalid_argument("sphere_volume: degree must be >= 1");
  return ExactScalar::integer(2) * ExactScalar::pi_power(static_cast<unsigned>(d)) /
         factorial(static_cast<unsigned>(d - 1));
}

ExactScalar macdonald_volume(const Series& series, int gamma) {
  const RootSystem rs = build_root_system(series);
  check_center_order(rs.series, gamma);
  ExactScalar v = torus_volume(rs);
  for (int d : rs.degrees) v *= sphere_volume(d);
  v *= coroot_norm_product(rs);
  return v / ExactScalar::integer(gamma);
}

VolumeResult group_volume(const Series& series, int gamma) {
  const Series s = make_series(series.tag, series.n);
  check_center_order(s, gamma);
  VolumeResult r;
  r.series = s;
  r.center_order = gamma;
  if (s.n <= kExactRankLimit) r.exact = macdonald_volume(s, gamma);
  r.log_value = log_volume(s) - std::log(static_cast<double>(gamma));
  return r;
}

ExactScalar closed_form_volume(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  const auto n = static_cast<unsigned>(s.n);
  ExactScalar denom;
  switch (s.tag) {
    case SeriesTag::A: {
      // √n (2π)^{n(n+1)/2-1} / ∏_{i<n} i!
      for (unsigned i = 1; i < n; ++i) denom *= factorial(i);
      const unsigned e = n * (n + 1) / 2 - 1;
      return ExactScalar::sqrt_of(mpq_class(n)) * two_pow(e) * ExactScalar::pi_power(e) / denom;
    }
    case SeriesTag::B:
      // 2^{n(n+2)+1} π^{n(n+1)} / ∏_{i≤n} (2i-1)!
      for (unsigned i = 1; i <= n; ++i) denom *= factorial(2 * i - 1);
      return two_pow(n * (n + 2) + 1) * ExactScalar::pi_power(n * (n + 1)) / denom;
    case SeriesTag::C:
      // 2^{n²} π^{n(n+1)} / ∏_{i≤n} (2i-1)!
      for (unsigned i = 1; i <= n; ++i) denom *= factorial(2 * i - 1);
      return two_pow(n * n) * ExactScalar::pi_power(n * (n + 1)) / denom;
    case SeriesTag::D:
      // 2^{n²+1} π^{n²} / ((n-1)! ∏_{i<n} (2i-1)!)
      denom = factorial(n - 1);
      for (unsigned i = 1; i < n; ++i) denom *= factorial(2 * i - 1);
      return two_pow(n * n + 1) * ExactScalar::pi_power(n * n) / denom;
  }
  throw std::logic_error("unreachable series tag");
}

std::string closed_form_text(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  const int n = s.n;
  auto factorials = [](int first, int last, int step) {
    std::string out;
    for (int i = first; i <= last; i += step) out += (out.empty() ? "" : "·") + std::to_string(i) + "!";
    return "(" + out + ")";
  };
  const auto sn = std::to_string(n);
  switch (s.tag) {
    case SeriesTag::A:
      return "√" + sn + "·(2π)^" + std::to_string(n * (n + 1) / 2 - 1) + "/" + factorials(1, n - 1, 1);
    case SeriesTag::B:
      return "2^" + std::to_string(n * (n + 2) + 1) + "·π^" + std::to_string(n * (n + 1)) + "/" + factorials(1, 2 * n - 1, 2);
    case SeriesTag::C:
      return "2^" + std::to_string(n * n) + "·π^" + std::to_string(n * (n + 1)) + "/" + factorials(1, 2 * n - 1, 2);
    case SeriesTag::D:
      return "2^" + std::to_string(n * n + 1) + "·π^" + std::to_string(n * n) + "/(" + std::to_string(n - 1) + "!·" +
             factorials(1, 2 * n - 3, 2) + ")";
  }
  throw std::logic_error("unreachable series tag");
}

double log_closed_form(SeriesTag tag, int n) {
  const double ln2 = std::numbers::ln2;
  const double lnpi = std::log(std::numbers::pi);
  const double dn = n;
  double v = 0.0;
  switch (tag) {
    case SeriesTag::A:
      v = 0.5 * std::log(dn) + (dn * (dn + 1) / 2 - 1) * (ln2 + lnpi);
      for (int i = 1; i < n; ++i) v -= log_factorial(i);
      return v;
    case SeriesTag::B:
      v = (dn * (dn + 2) + 1) * ln2 + dn * (dn + 1) * lnpi;
      for (int i = 1; i <= n; ++i) v -= log_factorial(2 * i - 1);
      return v;
    case SeriesTag::C:
      v = dn * dn * ln2 + dn * (dn + 1) * lnpi;
      for (int i = 1; i <= n; ++i) v -= log_factorial(2 * i - 1);
      return v;
    case SeriesTag::D:
      v = (dn * dn + 1) * ln2 + dn * dn * lnpi - log_factorial(n - 1);
      for (int i = 1; i < n; ++i) v -= log_factorial(2 * i - 1);
      return v;
  }
  return v;
}

double log_volume(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  return log_closed_form(s.tag, s.n);
}

int ratio_dim_step(const Series& s) {
  switch (s.tag) {
    case SeriesTag::A: return 2 * s.n + 1;
    case SeriesTag::B:
    case SeriesTag::C: return 4 * s.n - 1;
    case SeriesTag::D: return 4 * s.n - 3;
  }
  return 1;
}

double ratio_exponent(const Series& series) {
  const Series s = make_series(series.tag, series.n);
  const double step = ratio_dim_step(s);
  if (s.tag == SeriesTag::A)
    return std::exp((log_closed_form(s.tag, s.n + 1) - log_closed_form(s.tag, s.n)) / step);
  return std::exp((log_closed_form(s.tag, s.n) - log_closed_form(s.tag, s.n - 1)) / step);
}

double ratio_asymptote(const Series& s) {
  const double scale = s.tag == SeriesTag::A ? s.n : 2.0 * s.n;
  return std::sqrt(2.0 * std::numbers::pi * std::numbers::e / scale);
}

std::vector<std::string> series_notes(const Series& s) {
  std::vector<std::string> notes;
  if (s.tag == SeriesTag::C) {
    notes.push_back("USp(2n) dimension taken as n(2n+1) = " + std::to_string(group_dim(s)) +
                    " (basis count); the value 2n^2+2 = " + std::to_string(2 * s.n * s.n + 2) +
                    " sometimes quoted disagrees");
  }
  if (s.tag == SeriesTag::D) {
    notes.push_back("last simple root taken as e_{n-1}+e_n");
  }
  return notes;
}

}  // namespace lieconc
