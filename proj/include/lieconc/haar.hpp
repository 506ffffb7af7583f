#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lieconc {

/// Matrix groups sampled here. `size` means n for SU(n), m for SO(m) and
/// n for USp(2n). Spin(m) is sampled through SO(m).
enum class GroupFamily { SU, SO, USp };

GroupFamily parse_group_family(std::string_view name);  // "su", "so"/"spin", "usp"
std::string group_label(GroupFamily family, int size);  // "SU(11)", "Spin(5)", "USp(4)"

struct SamplerConfig {
  GroupFamily family = GroupFamily::SU;
  int size = 2;
  long count = 1;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// Throws std::invalid_argument on count < 1, workers < 1 or a size below the
/// family minimum (SU: 2, SO: 3, USp: 1).
void validate(const SamplerConfig& cfg);

/// Worker count from LIECONC_WORKERS, else the hardware concurrency.
int default_workers();

/// Seed of the private stream of sample `index`; streams do not depend on
/// how samples are split among workers.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

Eigen::MatrixXcd haar_su(int n, std::mt19937_64& rng);
Eigen::MatrixXd haar_so(int m, std::mt19937_64& rng);
/// 2n×2n unitary U with Uᵀ J U = J, J = [[0, I], [-I, 0]].
Eigen::MatrixXcd haar_usp(int n, std::mt19937_64& rng);

std::vector<Eigen::MatrixXcd> sample_su(const SamplerConfig& cfg);
std::vector<Eigen::MatrixXd> sample_so(const SamplerConfig& cfg);
std::vector<Eigen::MatrixXcd> sample_usp(const SamplerConfig& cfg);

/// Runs fn(rng, index, out) for every sample on cfg.workers threads; `out`
/// is the sample's slice of length `stride` in the returned buffer.
std::vector<double> map_samples(const SamplerConfig& cfg, int stride,
                                const std::function<void(std::mt19937_64&, long, std::span<double>)>& fn);

struct CpCoordinate {
  double zeta0 = 0.0;  // |g_00|
  double xi = 0.0;     // arccos |g_00|
};
/// First column of g as the homogeneous representative of a point of CPⁿ.
CpCoordinate cp_coordinate(const Eigen::MatrixXcd& g);

/// Normalized mass of {x ∈ S^m : geodesic distance to the equator < r}, via
/// the regularized incomplete beta function I_{sin²r}(½, m/2).
double sphere_band_mass(int m, double r);
/// ∫_{-r}^{r} cos^{m-1}t dt / ∫_{-π/2}^{π/2} cos^{m-1}t dt by quadrature.
double sphere_band_mass_quadrature(int m, double r);

struct KsResult {
  double statistic = 0.0;
  double pvalue = 0.0;
};
/// Kolmogorov survival function Q(λ) = 2 Σ_{k≥1} (-1)^{k-1} e^{-2k²λ²}.
double kolmogorov_q(double lambda);
/// One-sample test on sorted data (std::invalid_argument if unsorted or fewer than 8).
KsResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf);
/// Two-sample test; inputs need not be sorted.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct ConcentrationReport {
  GroupFamily family = GroupFamily::SU;
  int size = 0;
  std::string group;
  std::string base;        // "CP^10", "S^4 x S^3", "S^7"
  double r = 0.0;
  long count = 0;
  std::uint64_t seed = 0;
  double empirical_mass = 0.0;
  double predicted_mass = 0.0;
  double stderr_mass = 0.0;  // √(p(1-p)/N) at the predicted p
  double z_score = 0.0;
  double ci_low = 0.0, ci_high = 0.0;  // 95% normal interval around the empirical mass
  double ks_statistic = 0.0;           // distance to the locus (first factor) vs its exact law
  double ks_pvalue = 0.0;
  std::vector<std::string> notes;
  std::vector<double> distances;       // per-sample distance to the locus, first factor
};

/// Band mass of Haar samples within r of the concentration locus, against
/// the closed form. Throws std::invalid_argument unless 0 < r < π/2.
ConcentrationReport concentration_experiment(const SamplerConfig& cfg, double r);

/// Predicted band mass for the family at radius r.
double predicted_band_mass(GroupFamily family, int size, double r);

/// Exact CDF of the first-factor distance to the locus.
double locus_distance_cdf(GroupFamily family, int size, double t);

/// |ζ₀|² of the SU(n+1) samples, KS-tested against 1 - (1-s)^n.
KsResult zeta_squared_ks(const SamplerConfig& cfg);

/// Invariance check with g₀ a fixed Haar draw, two-sample KS between the two
/// halves of the samples. Left: Re tr(g) vs Re tr(g₀g). Right: Re g_00 vs
/// Re (g g₀)_00 (the trace cannot tell the sides apart).
KsResult invariance_test(const SamplerConfig& cfg, bool left);

/// Re tr(g)/2 for SU(2) samples vs the law ½ + (x√(1-x²) + arcsin x)/π.
KsResult su2_trace_test(const SamplerConfig& cfg);

struct Histogram {
  double lo = 0.0, hi = 0.0;
  std::vector<long> counts;
};
Histogram histogram(std::span<const double> values, double lo, double hi, int bins);
/// "bin_lo,bin_hi,count" with a header line, fixed formatting.
std::string histogram_csv(const Histogram& h);

}  // namespace lieconc
