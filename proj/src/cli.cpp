#include "lieconc/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "lieconc/acceptance.hpp"
#include "lieconc/cpn.hpp"
#include "lieconc/curvature.hpp"
#include "lieconc/haar.hpp"
#include "lieconc/levy.hpp"
#include "lieconc/serialize.hpp"
#include "lieconc/volumes.hpp"

#ifndef LIECONC_VERSION
#define LIECONC_VERSION "0.0.0"
#endif

namespace lieconc {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw CLI::ValidationError("--format", "expected json, csv or text");
}

std::string leaf_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + leaf_text(e);
    out.emplace_back(prefix, "[" + s + "]");
  } else if (v.is_array()) {
    for (size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, leaf_text(v));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
  return out + "\n";
}

// One report object, three renderings. A "table" member becomes the CSV body.
std::string render(const json& report, Format f) {
  if (f == Format::Json) return report.dump(2) + "\n";
  if (f == Format::Csv) {
    std::vector<std::pair<std::string, std::string>> flat;
    if (report.contains("table") && !report["table"].empty()) {
      std::vector<std::string> header;
      for (auto it = report["table"][0].begin(); it != report["table"][0].end(); ++it) header.push_back(it.key());
      std::string out = csv_row(header);
      for (const auto& row : report["table"]) {
        std::vector<std::string> cells;
        for (const auto& k : header) cells.push_back(row.contains(k) ? leaf_text(row[k]) : "");
        out += csv_row(cells);
      }
      return out;
    }
    flatten(report.contains("result") ? report["result"] : report, "", flat);
    std::vector<std::string> keys, values;
    for (auto& [k, v] : flat) {
      keys.push_back(k);
      values.push_back(v);
    }
    return csv_row(keys) + csv_row(values);
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(report, "", flat);
  std::string out;
  for (auto& [k, v] : flat) out += k + " = " + v + "\n";
  return out;
}

json provenance(const std::string& command, const json& config, std::optional<std::uint64_t> seed) {
  json p;
  p["artifact"] = "lieconc";
  p["version"] = LIECONC_VERSION;
  p["command"] = command;
  p["seed"] = seed ? json(*seed) : json(nullptr);
  p["config"] = config;
  return p;
}

// su/so/usp name an algebra family directly; a/b/c/d go through the series.
LieAlgebraBasis basis_for(const std::string& series, int n) {
  std::string s = series;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "su" || s == "so" || s == "usp") return make_basis(parse_algebra_kind(s), n);
  return build_basis(make_series(parse_series_tag(s), n));
}

// Sampler family and size for a series flag: su/so/spin/usp as given, b → Spin(2n+1), d → Spin(2n).
std::pair<GroupFamily, int> family_for(const std::string& series, int n) {
  std::string s = series;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "b" || s == "spin-odd") return {GroupFamily::SO, 2 * n + 1};
  if (s == "d" || s == "spin-even") return {GroupFamily::SO, 2 * n};
  return {parse_group_family(s), n};
}

struct Common {
  std::string format = "text";
  bool json_flag = false;
  std::string output;

  void add(CLI::App* app) {
    app->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_flag("--json", json_flag, "shorthand for --format json");
    app->add_option("-o,--output", output, "write the report to a file instead of stdout");
  }
  Format fmt() const { return json_flag ? Format::Json : parse_format(format); }
};

void emit(const json& report, const Common& c, std::ostream& out) {
  const std::string text = render(report, c.fmt());
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.output + " for writing");
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes, curvature and measure concentration of the classical compact Lie groups", "lieconc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", LIECONC_VERSION);

  std::string series = "su";
  int n = 2;
  std::uint64_t seed = 0;

  // roots
  Common roots_c;
  auto* roots = app.add_subcommand("roots", "root system data for one series and rank");
  roots->add_option("--series", series, "a/su, b/spin-odd, c/usp, d/spin-even")->required();
  roots->add_option("--n", n, "rank parameter")->required();
  roots_c.add(roots);

  // volume
  Common vol_c;
  int gamma = 1;
  bool exact_only = false, log_only = false;
  auto* volume = app.add_subcommand("volume", "Riemannian volume by Macdonald's formula");
  volume->add_option("--series", series)->required();
  volume->add_option("--n", n)->required();
  volume->add_option("--gamma", gamma, "order of the central subgroup divided out");
  auto* ex = volume->add_flag("--exact", exact_only, "exact value only");
  volume->add_flag("--log", log_only, "log value only")->excludes(ex);
  vol_c.add(volume);

  // ratio
  Common ratio_c;
  int ratio_to = 0;
  auto* ratio = app.add_subcommand("ratio", "consecutive volume ratio exponent and its asymptote");
  ratio->add_option("--series", series)->required();
  ratio->add_option("--n", n)->required();
  ratio->add_option("--to", ratio_to, "tabulate from --n up to this rank");
  ratio_c.add(ratio);

  // curvature
  Common curv_c;
  std::string report_format;
  bool matrices = false;
  auto* curvature = app.add_subcommand("curvature", "Killing form, chi and Ricci tensor from an orthonormal basis");
  curvature->add_option("--series", series, "su, so, usp (matrix families) or a, b, c, d")->required();
  curvature->add_option("--n", n, "su(n), so(n), usp(2n)")->required();
  curvature->add_option("--report", report_format, "same as --format")->check(CLI::IsMember({"json", "csv", "text"}));
  curvature->add_flag("--matrices", matrices, "include the Killing and Ricci matrices");
  curv_c.add(curvature);

  // cpn
  auto* cpn = app.add_subcommand("cpn", "geometry of SU(n+1)/U(n) = CP^n");
  cpn->add_option("--n", n, "complex dimension n")->required();
  cpn->require_subcommand(1);
  Common check_c, band_c, calib_c;
  int points = 100;
  double tol = 1e-8, eps = 0.3;
  auto* check = cpn->add_subcommand("check-metric", "vielbein density, FS metric pullback and Maurer-Cartan residual");
  check->add_option("--points", points)->check(CLI::PositiveNumber);
  check->add_option("--tol", tol);
  check->add_option("--seed", seed);
  check_c.add(check);
  auto* band = cpn->add_subcommand("band-mass", "mass of the band phi_n < pi/2 - eps");
  band->add_option("--eps", eps)->required();
  band_c.add(band);
  auto* calib = cpn->add_subcommand("calibrate", "coordinate ranges and closure against the Macdonald quotient");
  calib_c.add(calib);

  // sample
  Common sample_c;
  long count = 10000;
  double radius = 0.0;
  int workers = default_workers();
  std::string hist;
  int bins = 100;
  std::string hist_out;
  auto* sample = app.add_subcommand("sample", "Haar Monte Carlo band mass against the closed form");
  sample->add_option("--series", series, "su, so/spin, usp, or b/d for Spin(2n+1)/Spin(2n)")->required();
  sample->add_option("--n", n, "SU(n), Spin(n), USp(2n)")->required();
  sample->add_option("--count", count)->check(CLI::PositiveNumber);
  sample->add_option("--r", radius, "band radius in (0, pi/2)")->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--workers", workers)->check(CLI::PositiveNumber);
  sample->add_option("--hist", hist, "histogram of ksi or dist as CSV")->check(CLI::IsMember({"ksi", "dist"}));
  sample->add_option("--bins", bins)->check(CLI::PositiveNumber);
  sample->add_option("--hist-out", hist_out, "CSV file for --hist (default: stdout, replacing the report)");
  sample_c.add(sample);

  // levy
  Common levy_c;
  int from = 0, to = 0;
  double floor = 0.5;
  std::string scale = "log";
  std::optional<double> coroot_length;
  auto* levy = app.add_subcommand("levy", "Ricci lower bounds and the rescaled Levy check");
  levy->add_option("--series", series, "su, so or usp")->required();
  levy->add_option("--from", from)->required();
  levy->add_option("--to", to)->required();
  levy->add_option("--coroot-length", coroot_length, "|coroot| for the relaxed SU bound");
  levy->add_option("--floor", floor, "lower bound c for R_i");
  levy->add_option("--scale", scale, "rescaling c_i: log, sqrt, linear or const")
      ->check(CLI::IsMember({"log", "sqrt", "linear", "const"}));
  levy_c.add(levy);

  // reproduce
  Common repro_c;
  repro_c.format = "json";
  bool quick = false;
  std::uint64_t repro_seed = AcceptanceOptions{}.seed;
  auto* reproduce = app.add_subcommand("reproduce", "run every acceptance criterion and write one JSON report");
  reproduce->add_flag("--quick", quick, "smaller Monte Carlo runs");
  reproduce->add_option("--seed", repro_seed);
  reproduce->add_option("--workers", workers)->check(CLI::PositiveNumber);
  repro_c.add(reproduce);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << LIECONC_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (roots->parsed()) {
      const auto rs = build_root_system(make_series(parse_series_tag(series), n));
      emit({{"provenance", provenance("roots", {{"series", series}, {"n", n}}, std::nullopt)}, {"result", to_json(rs)}},
           roots_c, out);
    } else if (volume->parsed()) {
      const Series s = make_series(parse_series_tag(series), n);
      auto v = to_json(group_volume(s, gamma));
      v["formula"] = gamma == 1 ? closed_form_text(s) : closed_form_text(s) + " / " + std::to_string(gamma);
      if (log_only) v.erase("exact");
      if (exact_only) v.erase("log_value");
      v["notes"] = series_notes(s);
      emit({{"provenance", provenance("volume", {{"series", series}, {"n", n}, {"gamma", gamma}}, std::nullopt)},
            {"result", v}},
           vol_c, out);
    } else if (ratio->parsed()) {
      const SeriesTag tag = parse_series_tag(series);
      const int last = std::max(n, ratio_to);
      json table = json::array();
      for (int k = n; k <= last; ++k) {
        const Series s = make_series(tag, k);
        const double e = ratio_exponent(s), a = ratio_asymptote(s);
        table.push_back({{"n", k}, {"dim_step", ratio_dim_step(s)}, {"ratio_exponent", e}, {"asymptote", a}, {"quotient", e / a}});
      }
      json report{{"provenance", provenance("ratio", {{"series", series}, {"n", n}, {"to", last}}, std::nullopt)},
                  {"result", table.back()}};
      if (last > n) report["table"] = table;
      emit(report, ratio_c, out);
    } else if (curvature->parsed()) {
      if (!report_format.empty()) curv_c.format = report_format;
      const auto basis = basis_for(series, n);
      const auto rep = curvature_report(basis);
      json table = json::array();
      const int lo = basis.kind == AlgebraKind::Unitary ? 2 : basis.kind == AlgebraKind::Orthogonal ? 3 : 1;
      for (int k = lo; k <= basis.size; ++k) {
        const auto r = k == basis.size ? rep : curvature_report(make_basis(basis.kind, k));
        table.push_back({{"algebra", algebra_name(basis.kind, k)},
                         {"chi_computed", r.chi.chi},
                         {"chi_printed", r.published_chi},
                         {"killing_scale", r.chi.killing_scale},
                         {"agrees", r.chi_matches_published}});
      }
      emit({{"provenance", provenance("curvature", {{"series", series}, {"n", n}}, std::nullopt)},
            {"result", to_json(rep, matrices)},
            {"table", table}},
           curv_c, out);
    } else if (cpn->parsed()) {
      if (n < 1) throw std::invalid_argument("cpn: n must be >= 1");
      if (check->parsed()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> th(0.0, 2 * kPi), ph(0.05, kPi / 2 - 0.05);
        std::normal_distribution<double> g;
        double dens = 0.0, metric = 0.0, mc = 0.0;
        for (int t = 0; t < points; ++t) {
          QuotientCoords c;
          for (int a = 0; a < n; ++a) {
            c.thetas.push_back(th(rng));
            c.phis.push_back(ph(rng));
          }
          dens = std::max(dens, std::abs(vielbein_density(c) - measure_density(c)));
          if (t < 20) mc = std::max(mc, structure_equation_residual(c));
          AffineAngular a{ph(rng), Eigen::VectorXd(n), Eigen::VectorXd(n)};
          AngularVelocity v{g(rng), Eigen::VectorXd(n), Eigen::VectorXd(n)};
          for (int i = 0; i < n; ++i) {
            a.r(i) = g(rng);
            a.psi(i) = th(rng);
            v.dr(i) = g(rng);
            v.dpsi(i) = g(rng);
          }
          a.r.normalize();
          v.dr -= a.r.dot(v.dr) * a.r;
          metric = std::max(metric, std::abs(fs_metric_angular(a, v) - fs_metric_pullback(a, v)));
        }
        const bool ok = dens <= tol && metric <= tol && mc < 1e-4;
        emit({{"provenance", provenance("cpn check-metric", {{"n", n}, {"points", points}, {"tol", tol}}, seed)},
              {"result",
               {{"vielbein_density_max_diff", dens},
                {"fs_pullback_max_diff", metric},
                {"maurer_cartan_residual", mc},
                {"passed", ok}}}},
             check_c, out);
        if (!ok) return 1;
      } else if (band->parsed()) {
        emit({{"provenance", provenance("cpn band-mass", {{"n", n}, {"eps", eps}}, std::nullopt)},
              {"result", to_json(band_mass(n, eps))}},
             band_c, out);
      } else {
        emit({{"provenance", provenance("cpn calibrate", {{"n", n}}, std::nullopt)}, {"result", to_json(calibrate(n))}},
             calib_c, out);
      }
    } else if (sample->parsed()) {
      const auto [family, size] = family_for(series, n);
      const auto rep = concentration_experiment({family, size, count, seed, workers}, radius);
      if (!hist.empty()) {
        std::vector<double> v = rep.distances;
        if (hist == "ksi")
          for (auto& x : v) x = kPi / 2 - x;
        const std::string csv = histogram_csv(histogram(v, 0.0, kPi / 2, bins));
        if (hist_out.empty()) {
          out << csv;
          return 0;
        }
        std::ofstream f(hist_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + hist_out + " for writing");
        f << csv;
      }
      emit({{"provenance",
             provenance("sample", {{"series", series}, {"n", n}, {"count", count}, {"r", radius}}, seed)},
            {"result", to_json(rep)}},
           sample_c, out);
    } else if (levy->parsed()) {
      const AlgebraKind kind = parse_algebra_kind(series);
      const auto ric = ricci_bound_sequence(kind, from, to, coroot_length);
      std::vector<double> c;
      for (int i = from; i <= to; ++i)
        c.push_back(scale == "log" ? std::log(i) : scale == "sqrt" ? std::sqrt(i) : scale == "linear" ? i : 1.0);
      const auto chk = rescaled_levy_check(ric, c, floor);
      json table = json::array();
      for (int i = from; i <= to; ++i) {
        const size_t k = static_cast<size_t>(i - from);
        json row{{"i", i}, {"R_i", ric[k]}, {"c_i", c[k]}, {"rescaled", chk.rescaled[k]}};
        // the Ricci constant of the computed bi-invariant metric, where cheap
        row["ricci_computed"] = algebra_dim(kind, i) <= 80 ? json(curvature_report(make_basis(kind, i)).ricci_lower_bound)
                                                           : json(nullptr);
        table.push_back(row);
      }
      emit({{"provenance", provenance("levy", {{"series", series}, {"from", from}, {"to", to}, {"floor", floor}, {"scale", scale},
                                               {"coroot_length", coroot_length ? json(*coroot_length) : json(nullptr)}},
                                      std::nullopt)},
            {"result", {{"levy", chk.levy}, {"bounded_below", chk.bounded_below}, {"diverges", chk.diverges}}},
            {"table", table}},
           levy_c, out);
    } else if (reproduce->parsed()) {
      AcceptanceOptions opts{quick, repro_seed, workers};
      json crit = json::array();
      bool all = true;
      run_acceptance(opts, [&](const CriterionResult& r) {
        err << summary_line(r) << "\n";
        all = all && r.passed;
        crit.push_back({{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"within_budget", r.within_budget},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds},
                        {"details", r.details}});
      });
      emit({{"provenance", provenance("reproduce", {{"quick", quick}}, repro_seed)},
            {"criteria", crit},
            {"all_passed", all}},
           repro_c, out);
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lieconc
