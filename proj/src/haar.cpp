#include "lieconc/haar.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace lieconc {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

MatrixXcd complex_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixXcd z(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = g(rng);
      z(r, c) = cplx(re, g(rng));
    }
  return z;
}

// Q of the QR factorization with the phases of diag(R) moved into Q, which
// makes the distribution exactly invariant.
template <class Matrix>
Matrix haar_from_gaussian(const Matrix& z) {
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(z.rows(), z.cols());
  const auto d = qr.matrixQR().diagonal();
  for (Eigen::Index i = 0; i < z.cols(); ++i) {
    const auto ri = d(i);
    q.col(i) *= ri / std::abs(ri);
  }
  return q;
}

MatrixXcd haar_complex(GroupFamily family, int size, std::mt19937_64& rng) {
  switch (family) {
    case GroupFamily::SU: return haar_su(size, rng);
    case GroupFamily::SO: return haar_so(size, rng).cast<cplx>();
    case GroupFamily::USp: return haar_usp(size, rng);
  }
  throw std::logic_error("unreachable group family");
}

double clamp_asin(double x) { return std::asin(std::min(1.0, std::abs(x))); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

GroupFamily parse_group_family(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "su" || s == "a") return GroupFamily::SU;
  if (s == "so" || s == "spin") return GroupFamily::SO;
  if (s == "usp" || s == "c") return GroupFamily::USp;
  throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

std::string group_label(GroupFamily family, int size) {
  switch (family) {
    case GroupFamily::SU: return "SU(" + std::to_string(size) + ")";
    case GroupFamily::SO: return "Spin(" + std::to_string(size) + ")";
    case GroupFamily::USp: return "USp(" + std::to_string(2 * size) + ")";
  }
  return "?";
}

void validate(const SamplerConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("sampler: count must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("sampler: workers must be >= 1");
  const int lo = cfg.family == GroupFamily::SU ? 2 : cfg.family == GroupFamily::SO ? 3 : 1;
  if (cfg.size < lo)
    throw std::invalid_argument("sampler: " + group_label(cfg.family, cfg.size) + " is below the family minimum");
}

int default_workers() {
  if (const char* env = std::getenv("LIECONC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

Eigen::MatrixXcd haar_su(int n, std::mt19937_64& rng) {
  MatrixXcd u = haar_from_gaussian(complex_gaussian(n, n, rng));
  const double phase = std::arg(u.determinant());
  return u * std::polar(1.0, -phase / n);
}

Eigen::MatrixXd haar_so(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixXd z(m, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < m; ++r) z(r, c) = g(rng);
  MatrixXd q = haar_from_gaussian(z);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

Eigen::MatrixXcd haar_usp(int n, std::mt19937_64& rng) {
  // Quaternionic Gram-Schmidt: column k is a Gaussian vector orthogonalized
  // against the columns so far, and column n+k = -J ū_k is its partner.
  const int d = 2 * n;
  MatrixXcd u = MatrixXcd::Zero(d, d);
  auto jbar = [n](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd w(v.size());
    w.head(n) = -v.tail(n).conjugate();
    w.tail(n) = v.head(n).conjugate();
    return w;
  };
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd v = complex_gaussian(d, 1, rng).col(0);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < k; ++j) {
        v -= u.col(j).dot(v) * u.col(j);
        v -= u.col(n + j).dot(v) * u.col(n + j);
      }
    v.normalize();
    u.col(k) = v;
    u.col(n + k) = jbar(v);
  }
  return u;
}

std::vector<double> map_samples(const SamplerConfig& cfg, int stride,
                                const std::function<void(std::mt19937_64&, long, std::span<double>)>& fn) {
  validate(cfg);
  std::vector<double> out(static_cast<size_t>(cfg.count) * static_cast<size_t>(stride), 0.0);
  const int workers = static_cast<int>(std::min<long>(cfg.workers, cfg.count));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  auto job = [&](int w) {
    try {
      const long begin = cfg.count * w / workers, end = cfg.count * (w + 1) / workers;
      for (long i = begin; i < end; ++i) {
        std::mt19937_64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        fn(rng, i, std::span<double>(out).subspan(static_cast<size_t>(i) * stride, static_cast<size_t>(stride)));
      }
    } catch (...) {
      errors[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

template <class Matrix, class Draw>
std::vector<Matrix> sample_matrices(const SamplerConfig& cfg, GroupFamily family, Draw draw) {
  if (cfg.family != family) throw std::invalid_argument("sampler: config family does not match the sampler");
  validate(cfg);
  std::vector<Matrix> out(static_cast<size_t>(cfg.count));
  map_samples(cfg, 0, [&](std::mt19937_64& rng, long i, std::span<double>) { out[static_cast<size_t>(i)] = draw(cfg.size, rng); });
  return out;
}

}  // namespace

std::vector<Eigen::MatrixXcd> sample_su(const SamplerConfig& cfg) {
  return sample_matrices<MatrixXcd>(cfg, GroupFamily::SU, haar_su);
}
std::vector<Eigen::MatrixXd> sample_so(const SamplerConfig& cfg) {
  return sample_matrices<MatrixXd>(cfg, GroupFamily::SO, haar_so);
}
std::vector<Eigen::MatrixXcd> sample_usp(const SamplerConfig& cfg) {
  return sample_matrices<MatrixXcd>(cfg, GroupFamily::USp, haar_usp);
}

CpCoordinate cp_coordinate(const Eigen::MatrixXcd& g) {
  const double a = std::min(1.0, std::abs(g(0, 0)));
  return {a, std::acos(a)};
}

double sphere_band_mass(int m, double r) {
  if (m < 1) throw std::invalid_argument("sphere_band_mass: m must be >= 1");
  if (!(r >= 0.0 && r <= kPi / 2)) throw std::invalid_argument("sphere_band_mass: r must lie in [0, π/2]");
  if (r == kPi / 2) return 1.0;
  const double s = std::sin(r);
  return boost::math::ibeta(0.5, 0.5 * m, s * s);
}

double sphere_band_mass_quadrature(int m, double r) {
  if (m < 1) throw std::invalid_argument("sphere_band_mass_quadrature: m must be >= 1");
  if (!(r >= 0.0 && r <= kPi / 2)) throw std::invalid_argument("sphere_band_mass_quadrature: r must lie in [0, π/2]");
  auto f = [m](double t) { return std::pow(std::cos(t), m - 1); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  return GK::integrate(f, 0.0, r, 8, 1e-12) / GK::integrate(f, 0.0, kPi / 2, 8, 1e-12);
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.0) {
    // theta-function form, fast for small λ
    double acc = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double t = std::exp(-std::pow(2 * k - 1, 2) * kPi * kPi / (8 * lambda * lambda));
      acc += t;
      if (t < 1e-300) break;
    }
    return std::clamp(1.0 - std::sqrt(2 * kPi) / lambda * acc, 0.0, 1.0);
  }
  double acc = 0.0;
  for (int k = 1; k <= 100; ++k) acc += (k % 2 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(2.0 * acc, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.size() < 8) throw std::invalid_argument("ks_test: need at least 8 samples");
  if (!std::is_sorted(sorted.begin(), sorted.end())) throw std::invalid_argument("ks_test: samples must be sorted");
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return {d, kolmogorov_q(std::sqrt(n) * d)};
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 8 || b.size() < 8) throw std::invalid_argument("ks_two_sample: need at least 8 samples per side");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return {d, kolmogorov_q(std::sqrt(na * nb / (na + nb)) * d)};
}

double predicted_band_mass(GroupFamily family, int size, double r) {
  switch (family) {
    case GroupFamily::SU: return 1.0 - std::pow(std::cos(r), 2 * (size - 1));
    case GroupFamily::SO: return sphere_band_mass(size - 1, r) * sphere_band_mass(size - 2, r);
    case GroupFamily::USp: return sphere_band_mass(4 * size - 1, r);
  }
  return 0.0;
}

double locus_distance_cdf(GroupFamily family, int size, double t) {
  t = std::clamp(t, 0.0, kPi / 2);
  switch (family) {
    case GroupFamily::SU: return 1.0 - std::pow(std::cos(t), 2 * (size - 1));
    case GroupFamily::SO: return sphere_band_mass(size - 1, t);
    case GroupFamily::USp: return sphere_band_mass(4 * size - 1, t);
  }
  return 0.0;
}

ConcentrationReport concentration_experiment(const SamplerConfig& cfg, double r) {
  validate(cfg);
  if (!(r > 0.0 && r < kPi / 2)) throw std::invalid_argument("concentration_experiment: r must lie in (0, π/2)");
  const int size = cfg.size;
  const int stride = cfg.family == GroupFamily::SO ? 2 : 1;

  const auto dist = map_samples(cfg, stride, [&](std::mt19937_64& rng, long, std::span<double> out) {
    switch (cfg.family) {
      case GroupFamily::SU:
        out[0] = kPi / 2 - cp_coordinate(haar_su(size, rng)).xi;
        break;
      case GroupFamily::SO: {
        const MatrixXd g = haar_so(size, rng);
        const Eigen::VectorXd x = g.col(0);
        // reflect x to ∓e_m; the second column then lands on the standard S^{m-2}
        Eigen::VectorXd v = x;
        v(size - 1) += x(size - 1) >= 0 ? 1.0 : -1.0;
        const Eigen::VectorXd y = g.col(1) - 2.0 * v * (v.dot(g.col(1)) / v.squaredNorm());
        out[0] = clamp_asin(x(size - 1));
        out[1] = clamp_asin(y(size - 2));
        break;
      }
      case GroupFamily::USp:
        out[0] = clamp_asin(haar_usp(size, rng)(2 * size - 1, 0).imag());
        break;
    }
  });

  ConcentrationReport rep;
  rep.family = cfg.family;
  rep.size = size;
  rep.group = group_label(cfg.family, size);
  rep.r = r;
  rep.count = cfg.count;
  rep.seed = cfg.seed;
  switch (cfg.family) {
    case GroupFamily::SU: rep.base = "CP^" + std::to_string(size - 1); break;
    case GroupFamily::SO: rep.base = "S^" + std::to_string(size - 1) + " x S^" + std::to_string(size - 2); break;
    case GroupFamily::USp:
      rep.base = "S^" + std::to_string(4 * size - 1);
      rep.notes.push_back("the symplectic concentration statement names Spin(2n+1) in its source text; it is tested here for USp(2n)");
      break;
  }
  if (cfg.family == GroupFamily::SO)
    rep.notes.push_back("sampled on SO(m); band statistics live on the base spheres and are the same for Spin(m)");

  long hits = 0;
  for (long i = 0; i < cfg.count; ++i) {
    bool in = true;
    for (int s = 0; s < stride; ++s) in = in && dist[static_cast<size_t>(i * stride + s)] < r;
    hits += in;
    rep.distances.push_back(dist[static_cast<size_t>(i * stride)]);
  }
  const double n = static_cast<double>(cfg.count);
  rep.empirical_mass = hits / n;
  rep.predicted_mass = predicted_band_mass(cfg.family, size, r);
  const double p = rep.predicted_mass;
  rep.stderr_mass = std::sqrt(p * (1 - p) / n);
  rep.z_score = rep.stderr_mass > 0 ? (rep.empirical_mass - p) / rep.stderr_mass
                                    : (rep.empirical_mass == p ? 0.0 : HUGE_VAL);
  const double half = 1.96 * std::sqrt(rep.empirical_mass * (1 - rep.empirical_mass) / n);
  rep.ci_low = std::max(0.0, rep.empirical_mass - half);
  rep.ci_high = std::min(1.0, rep.empirical_mass + half);
  if (cfg.count >= 8) {
    std::vector<double> sorted = rep.distances;
    std::sort(sorted.begin(), sorted.end());
    const auto ks = ks_test(sorted, [&](double t) { return locus_distance_cdf(cfg.family, size, t); });
    rep.ks_statistic = ks.statistic;
    rep.ks_pvalue = ks.pvalue;
  }
  rep.notes.push_back("r = " + fmt("%.6g", r) + ", predicted band mass " + fmt("%.6g", p));
  return rep;
}

KsResult zeta_squared_ks(const SamplerConfig& cfg) {
  if (cfg.family != GroupFamily::SU) throw std::invalid_argument("zeta_squared_ks: SU samples required");
  auto s = map_samples(cfg, 1, [&](std::mt19937_64& rng, long, std::span<double> out) {
    const double a = cp_coordinate(haar_su(cfg.size, rng)).zeta0;
    out[0] = a * a;
  });
  std::sort(s.begin(), s.end());
  const int n = cfg.size - 1;
  return ks_test(s, [n](double x) { return 1.0 - std::pow(1.0 - std::clamp(x, 0.0, 1.0), n); });
}

KsResult invariance_test(const SamplerConfig& cfg, bool left) {
  validate(cfg);
  std::mt19937_64 fixed(stream_seed(~cfg.seed, 0x6a09e667f3bcc908ULL));
  const MatrixXcd g0 = haar_complex(cfg.family, cfg.size, fixed);
  const long half = cfg.count / 2;
  const auto v = map_samples(cfg, 1, [&](std::mt19937_64& rng, long i, std::span<double> out) {
    const MatrixXcd g = haar_complex(cfg.family, cfg.size, rng);
    if (left) out[0] = i < half ? g.trace().real() : (g0.array() * g.transpose().array()).sum().real();
    else out[0] = i < half ? g(0, 0).real() : (g.row(0) * g0.col(0)).value().real();
  });
  return ks_two_sample(std::vector<double>(v.begin(), v.begin() + half), std::vector<double>(v.begin() + half, v.end()));
}

KsResult su2_trace_test(const SamplerConfig& cfg) {
  if (cfg.family != GroupFamily::SU || cfg.size != 2) throw std::invalid_argument("su2_trace_test: SU(2) samples required");
  auto x = map_samples(cfg, 1, [](std::mt19937_64& rng, long, std::span<double> out) {
    out[0] = haar_su(2, rng).trace().real() / 2;
  });
  std::sort(x.begin(), x.end());
  return ks_test(x, [](double t) {
    t = std::clamp(t, -1.0, 1.0);
    return 0.5 + (t * std::sqrt(1 - t * t) + std::asin(t)) / kPi;
  });
}

Histogram histogram(std::span<const double> values, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram: need bins >= 1 and hi > lo");
  Histogram h{lo, hi, std::vector<long>(static_cast<size_t>(bins), 0)};
  for (double v : values) {
    if (v < lo || v > hi) continue;
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / (hi - lo) * bins));
    ++h.counts[static_cast<size_t>(b)];
  }
  return h;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,count\n";
  const double w = (h.hi - h.lo) / static_cast<double>(h.counts.size());
  char buf[96];
  for (size_t i = 0; i < h.counts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%ld\n", h.lo + w * i, h.lo + w * (i + 1), h.counts[i]);
    out += buf;
  }
  return out;
}

}  // namespace lieconc
