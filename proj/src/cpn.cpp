#include "lieconc/cpn.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lieconc/linalg.hpp"
#include "lieconc/root_system.hpp"
#include "lieconc/volumes.hpp"

namespace lieconc {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void require_coords(const QuotientCoords& c) {
  if (c.n() < 1 || c.phis.size() != c.thetas.size())
    throw std::invalid_argument("QuotientCoords: need n >= 1 thetas and as many phis");
}

// Hermitian generator G̃_f of the f-th factor exp(i x_f G̃_f), flat order θ_1, φ_1, θ_2, …
std::vector<MatrixXcd> factor_generators(int n) {
  const auto lam = gellmann_basis(n + 1);
  auto L = [&lam](int i) { return lam[static_cast<size_t>(i - 1)]; };
  std::vector<MatrixXcd> g{L(3), L(2)};
  for (int a = 2; a <= n; ++a) {
    g.push_back(L(a * a - 1) / cartan_epsilon(a));
    g.push_back(L(a * a + 1));
  }
  return g;
}

std::vector<MatrixXcd> factors(const std::vector<MatrixXcd>& gens, const std::vector<double>& x) {
  std::vector<MatrixXcd> out;
  for (size_t f = 0; f < gens.size(); ++f) out.push_back(HermitianExp(gens[f])(x[f]));
  return out;
}

// flat index of coordinate u in the θ..θ, φ..φ ordering
size_t flat_index(int u, int n) { return u < n ? 2 * static_cast<size_t>(u) : 2 * static_cast<size_t>(u - n) + 1; }

QuotientCoords shifted(const QuotientCoords& c, int u, double dx) {
  QuotientCoords s = c;
  if (u < c.n()) s.thetas[static_cast<size_t>(u)] += dx;
  else s.phis[static_cast<size_t>(u - c.n())] += dx;
  return s;
}

// Column-style lower-triangular Hermite form by integer column operations.
Eigen::MatrixXi lower_hermite(Eigen::MatrixXi h) {
  const int n = static_cast<int>(h.rows());
  for (int i = 0; i < n; ++i) {
    for (;;) {
      int piv = -1;
      for (int j = i; j < n; ++j)
        if (h(i, j) != 0 && (piv < 0 || std::abs(h(i, j)) < std::abs(h(i, piv)))) piv = j;
      if (piv < 0) throw std::runtime_error("lower_hermite: singular lattice");
      h.col(i).swap(h.col(piv));
      bool done = true;
      for (int j = i + 1; j < n; ++j) {
        const int q = h(i, j) / h(i, i);
        h.col(j) -= q * h.col(i);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
  }
  return h;
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-12);
}

}  // namespace

std::vector<Eigen::MatrixXcd> gellmann_basis(int m) {
  if (m < 2) throw std::invalid_argument("gellmann_basis: m must be >= 2");
  std::vector<MatrixXcd> out;
  for (int k = 2; k <= m; ++k) {
    for (int j = 1; j < k; ++j) {
      MatrixXcd s = MatrixXcd::Zero(m, m), a = MatrixXcd::Zero(m, m);
      s(j - 1, k - 1) = s(k - 1, j - 1) = 1.0;
      a(j - 1, k - 1) = -kI;
      a(k - 1, j - 1) = kI;
      out.push_back(s);
      out.push_back(a);
    }
    MatrixXcd d = MatrixXcd::Zero(m, m);
    for (int i = 0; i < k - 1; ++i) d(i, i) = 1.0;
    d(k - 1, k - 1) = -(k - 1.0);
    out.push_back(std::sqrt(2.0 / (k * (k - 1.0))) * d);
  }
  return out;
}

std::vector<double> QuotientCoords::flat() const {
  std::vector<double> x;
  for (size_t a = 0; a < thetas.size(); ++a) {
    x.push_back(thetas[a]);
    x.push_back(phis[a]);
  }
  return x;
}

QuotientCoords QuotientCoords::from_flat(const std::vector<double>& x) {
  if (x.empty() || x.size() % 2) throw std::invalid_argument("QuotientCoords: flat vector must have even length");
  QuotientCoords c;
  for (size_t i = 0; i < x.size(); i += 2) {
    c.thetas.push_back(x[i]);
    c.phis.push_back(x[i + 1]);
  }
  return c;
}

double cartan_epsilon(int a) {
  if (a < 2) throw std::invalid_argument("cartan_epsilon: a must be >= 2");
  return std::sqrt(2.0 / (a * (a - 1.0)));
}

Eigen::MatrixXcd quotient_point(const QuotientCoords& c) {
  require_coords(c);
  const auto fs = factors(factor_generators(c.n()), c.flat());
  MatrixXcd h = MatrixXcd::Identity(c.n() + 1, c.n() + 1);
  for (const auto& f : fs) h *= f;
  return h;
}

std::vector<Eigen::MatrixXcd> maurer_cartan(const QuotientCoords& c) {
  require_coords(c);
  const int n = c.n();
  const auto gens = factor_generators(n);
  const auto fs = factors(gens, c.flat());
  // h⁻¹ ∂_f h = Q_f⁻¹ (i G̃_f) Q_f with Q_f the product of the factors after f
  std::vector<MatrixXcd> by_factor(fs.size());
  MatrixXcd q = MatrixXcd::Identity(n + 1, n + 1);
  for (size_t f = fs.size(); f-- > 0;) {
    by_factor[f] = q.adjoint() * (kI * gens[f]) * q;
    q = fs[f] * q;
  }
  std::vector<MatrixXcd> out;
  for (int u = 0; u < 2 * n; ++u) out.push_back(by_factor[flat_index(u, n)]);
  return out;
}

std::vector<Eigen::MatrixXcd> maurer_cartan_fd(const QuotientCoords& c, double step) {
  require_coords(c);
  const MatrixXcd hinv = quotient_point(c).adjoint();
  std::vector<MatrixXcd> out;
  for (int u = 0; u < 2 * c.n(); ++u)
    out.push_back(hinv * (quotient_point(shifted(c, u, step)) - quotient_point(shifted(c, u, -step))) / (2 * step));
  return out;
}

double structure_equation_residual(const QuotientCoords& c, double step) {
  const int d = 2 * c.n();
  const auto j = maurer_cartan(c);
  std::vector<std::vector<MatrixXcd>> dj;  // dj[u][v] = ∂_u j_v
  for (int u = 0; u < d; ++u) {
    const auto jp = maurer_cartan(shifted(c, u, step)), jm = maurer_cartan(shifted(c, u, -step));
    std::vector<MatrixXcd> row;
    for (int v = 0; v < d; ++v) row.push_back((jp[v] - jm[v]) / (2 * step));
    dj.push_back(std::move(row));
  }
  double worst = 0.0;
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v)
      worst = std::max(worst, (dj[u][v] - dj[v][u] + commutator(j[u], j[v])).cwiseAbs().maxCoeff());
  return worst;
}

Eigen::MatrixXd vielbein(const QuotientCoords& c) {
  const int n = c.n();
  const auto j = maurer_cartan(c);
  const auto lam = gellmann_basis(n + 1);
  Eigen::MatrixXd e(2 * n, 2 * n);
  for (int l = 1; l <= 2 * n; ++l)
    for (int u = 0; u < 2 * n; ++u)
      e(l - 1, u) = (0.5 * trace_product(j[u], lam[static_cast<size_t>(n * n + l - 2)])).imag();
  return e;
}

double vielbein_density(const QuotientCoords& c) { return std::abs(vielbein(c).determinant()); }

double measure_density(const QuotientCoords& c) {
  require_coords(c);
  const int n = c.n();
  const double pn = c.phis.back();
  double v = 2 * std::cos(pn) * std::pow(std::sin(pn), 2 * n - 1);
  for (int a = 1; a < n; ++a) {
    const double p = c.phis[static_cast<size_t>(a - 1)];
    v *= std::sin(p) * std::pow(std::cos(p), 2 * a - 1);
  }
  return v;
}

Eigen::VectorXcd cpn_point(const QuotientCoords& c) {
  const VectorXcd p = quotient_point(c).col(c.n());
  VectorXcd z(p.size());
  z(0) = p(p.size() - 1);
  z.tail(p.size() - 1) = p.head(p.size() - 1);
  return z;
}

ExactScalar unitary_group_volume(int n) {
  if (n < 1) throw std::invalid_argument("unitary_group_volume: n must be >= 1");
  const ExactScalar su = n == 1 ? ExactScalar() : macdonald_volume({SeriesTag::A, n});
  const ExactScalar circle = ExactScalar(mpq_class(2), 1) * ExactScalar::sqrt_of(mpq_class(n * (n + 1)));
  return su * circle / ExactScalar::integer(n);
}

Calibration calibrate(int n) {
  if (n < 1) throw std::invalid_argument("calibrate: n must be >= 1");
  Calibration cal;
  cal.n = n;
  cal.phi_max = kPi / 2;

  // Phase of each component of h·e_{n+1} as a function of θ, at a generic φ.
  QuotientCoords base{std::vector<double>(static_cast<size_t>(n), 0.3), std::vector<double>(static_cast<size_t>(n), 0.7)};
  const double dt = 1e-6;
  cal.phase_matrix = Eigen::MatrixXi(n + 1, n);
  for (int a = 0; a < n; ++a) {
    const VectorXcd p0 = quotient_point(shifted(base, a, -dt)).col(n);
    const VectorXcd p1 = quotient_point(shifted(base, a, dt)).col(n);
    for (int i = 0; i <= n; ++i) {
      const double rate = std::arg(p1(i) / p0(i)) / (2 * dt);
      const double rounded = std::round(rate);
      if (std::abs(rate - rounded) > 1e-6) throw std::runtime_error("calibrate: θ phases are not integral");
      cal.phase_matrix(i, a) = static_cast<int>(rounded);
    }
  }
  Eigen::MatrixXi rel(n, n);
  for (int i = 0; i < n; ++i) rel.row(i) = cal.phase_matrix.row(i) - cal.phase_matrix.row(n);
  const long det = std::lround(rel.cast<double>().determinant());
  if (det == 0) throw std::runtime_error("calibrate: θ directions do not span the phases");
  cal.phase_det = std::labs(det);

  // θ-translations fixing the point form the lattice 2π·rel⁻¹·Zⁿ = (2π/det)·adj·Zⁿ.
  const Eigen::MatrixXd adj = rel.cast<double>().inverse() * static_cast<double>(det);
  const Eigen::MatrixXi hnf = lower_hermite(adj.array().round().cast<int>().matrix());
  for (int a = 0; a < n; ++a)
    cal.theta_periods.push_back(2 * kPi * std::abs(hnf(a, a)) / static_cast<double>(cal.phase_det));

  double integral = std::accumulate(cal.theta_periods.begin(), cal.theta_periods.end(), 1.0, std::multiplies<>());
  for (int a = 1; a < n; ++a)
    integral *= integrate([a](double p) { return std::sin(p) * std::pow(std::cos(p), 2 * a - 1); }, 0, cal.phi_max);
  integral *= integrate([n](double p) { return 2 * std::cos(p) * std::pow(std::sin(p), 2 * n - 1); }, 0, cal.phi_max);
  cal.density_integral = integral;

  // Macdonald's metric makes coroots have the root-system length; compare with -½Tr.
  const RootSystem rs = build_root_system({SeriesTag::A, std::max(n + 1, 2)});
  const RationalVector& cr = rs.simple_coroots.front();
  Eigen::MatrixXcd hmat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(cr.size()), static_cast<Eigen::Index>(cr.size()));
  for (size_t i = 0; i < cr.size(); ++i) hmat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = kI * cr[i].get_d();
  cal.metric_scale = inner(cr, cr).get_d() / (-0.5 * trace_product(hmat, hmat).real());
  cal.volume_factor = std::pow(cal.metric_scale, n);

  cal.quotient = macdonald_volume({SeriesTag::A, n + 1}) / unitary_group_volume(n);
  const double q = cal.quotient.to_double();
  cal.relative_error = std::abs(cal.volume_factor * integral - q) / q;
  return cal;
}

Eigen::VectorXcd to_affine(const AffineAngular& a) {
  if (a.r.size() != a.psi.size()) throw std::invalid_argument("to_affine: R and ψ lengths differ");
  VectorXcd z(a.r.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = std::tan(a.xi) * a.r(i) * std::polar(1.0, a.psi(i));
  return z;
}

AffineAngular to_angular(const Eigen::VectorXcd& z) {
  const double norm = z.norm();
  if (norm == 0.0) throw std::invalid_argument("to_angular: z = 0 has no direction");
  AffineAngular a;
  a.xi = std::atan(norm);
  a.r = z.cwiseAbs() / norm;
  a.psi = Eigen::VectorXd(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double p = std::arg(z(i));
    if (p < 0) p += 2 * kPi;
    a.psi(i) = p;
  }
  return a;
}

Eigen::MatrixXcd fs_metric_affine(const Eigen::VectorXcd& z) {
  const double s = 1.0 + z.squaredNorm();
  return MatrixXcd::Identity(z.size(), z.size()) / s - z.conjugate() * z.transpose() / (s * s);
}

Eigen::MatrixXcd kahler_hessian_fd(const Eigen::VectorXcd& z, double step) {
  const Eigen::Index n = z.size();
  auto K = [](const VectorXcd& w) { return 0.5 * std::log(1.0 + w.squaredNorm()); };
  // real coordinates x_0, y_0, x_1, y_1, …
  auto dir = [n](Eigen::Index k) {
    VectorXcd e = VectorXcd::Zero(n);
    e(k / 2) = k % 2 ? kI : cplx(1.0);
    return e;
  };
  Eigen::MatrixXd hess(2 * n, 2 * n);
  for (Eigen::Index a = 0; a < 2 * n; ++a)
    for (Eigen::Index b = 0; b < 2 * n; ++b) {
      const VectorXcd ea = dir(a) * step, eb = dir(b) * step;
      hess(a, b) = (K(z + ea + eb) - K(z + ea - eb) - K(z - ea + eb) + K(z - ea - eb)) / (4 * step * step);
    }
  // ∂_{z_i}∂_{z̄_j} = ¼[(∂x_i∂x_j + ∂y_i∂y_j) + i(∂x_i∂y_j - ∂y_i∂x_j)]
  MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = 0.25 * cplx(hess(2 * i, 2 * j) + hess(2 * i + 1, 2 * j + 1),
                            hess(2 * i, 2 * j + 1) - hess(2 * i + 1, 2 * j));
  return g;
}

double fs_line_element(const Eigen::VectorXcd& z, const Eigen::VectorXcd& v) {
  return (v.transpose() * fs_metric_affine(z) * v.conjugate()).value().real();
}

double fs_metric_angular(const AffineAngular& a, const AngularVelocity& v) {
  if (!(a.xi > 0.0 && a.xi < kPi / 2)) throw std::domain_error("fs_metric_angular: ξ must lie in (0, π/2)");
  const double s2 = std::pow(std::sin(a.xi), 2);
  const Eigen::ArrayXd r2 = a.r.array().square();
  const double twist = (r2 * v.dpsi.array()).sum();
  return v.dxi * v.dxi + s2 * (v.dr.squaredNorm() + (r2 * v.dpsi.array().square()).sum()) - s2 * s2 * twist * twist;
}

double fs_metric_pullback(const AffineAngular& a, const AngularVelocity& v) {
  if (!(a.xi >= 0.0 && a.xi < kPi / 2)) throw std::domain_error("fs_metric_pullback: ξ must lie in [0, π/2)");
  const double t = std::tan(a.xi), sec2 = 1.0 + t * t;
  VectorXcd dz(a.r.size());
  for (Eigen::Index i = 0; i < dz.size(); ++i) {
    const cplx ph = std::polar(1.0, a.psi(i));
    dz(i) = ph * (sec2 * a.r(i) * v.dxi + t * v.dr(i) + kI * t * a.r(i) * v.dpsi(i));
  }
  return fs_line_element(to_affine(a), dz);
}

BandMass band_mass(int n, double eps) {
  if (n < 1) throw std::invalid_argument("band_mass: n must be >= 1");
  if (!(eps >= 0.0 && eps <= kPi / 2)) throw std::invalid_argument("band_mass: eps must lie in [0, π/2]");
  BandMass b;
  const double c2n = std::pow(std::cos(eps), 2 * n);
  b.closed_form = c2n / (2 * n);
  b.quadrature = integrate([n](double p) { return std::cos(p) * std::pow(std::sin(p), 2 * n - 1); }, 0,
                           kPi / 2 - eps);
  b.complement = 1.0 - c2n;
  return b;
}

Eigen::VectorXcd locus_projection(const Eigen::VectorXcd& zeta) {
  if (zeta.size() < 2) throw std::invalid_argument("locus_projection: need n >= 1");
  const Eigen::Index n = zeta.size() - 1;
  const double norm = zeta.tail(n).norm();
  if (norm == 0.0) throw std::invalid_argument("locus_projection: point has no direction at infinity");
  // fix the homogeneous scale so that ζ_0 is real and non-negative
  const cplx phase = std::abs(zeta(0)) > 0 ? std::conj(zeta(0)) / std::abs(zeta(0)) : cplx(1.0);
  VectorXcd out = VectorXcd::Zero(zeta.size());
  out.tail(n) = phase * zeta.tail(n) / norm;
  return out;
}

Eigen::VectorXcd locus_projection_chart(const Eigen::VectorXcd& z) {
  VectorXcd zeta(z.size() + 1);
  zeta(0) = 1.0;
  zeta.tail(z.size()) = z;
  return locus_projection(zeta);
}

double fs_distance(const Eigen::VectorXcd& zeta, const Eigen::VectorXcd& eta) {
  if (zeta.size() != eta.size()) throw std::invalid_argument("fs_distance: dimension mismatch");
  const double c = std::abs(zeta.dot(eta)) / (zeta.norm() * eta.norm());
  return std::acos(std::min(1.0, c));
}

}  // namespace lieconc
