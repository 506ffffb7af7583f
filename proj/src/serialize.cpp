#include "lieconc/serialize.hpp"

#include <cmath>
#include <stdexcept>

namespace lieconc {

namespace {

std::string rational_text(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

json rational_vector(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_text(x));
  return a;
}

// JSON has no infinities; out-of-range values are emitted as null
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const ExactScalar& x) {
  json j;
  j["q"] = rational_text(x.q());
  j["pi_pow"] = x.pi_pow();
  j["sqrt"] = x.radicand().get_str();
  j["text"] = x.to_string();
  j["decimal"] = x.to_decimal();
  j["value"] = number(x.to_double());
  return j;
}

ExactScalar exact_from_json(const json& j) {
  mpq_class q;
  if (q.set_str(j.at("q").get<std::string>(), 10) != 0) throw std::invalid_argument("exact_from_json: bad rational");
  q.canonicalize();
  return ExactScalar(q, j.at("pi_pow").get<unsigned>(), mpz_class(j.at("sqrt").get<std::string>()));
}

json to_json(const RootSystem& rs) {
  json j;
  j["series"] = std::string(1, tag_letter(rs.series.tag));
  j["n"] = rs.series.n;
  j["group"] = group_name(rs.series);
  j["rank"] = rs.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["positive_root_count"] = rs.positive_roots.size();
  j["degrees"] = rs.degrees;
  json simple = json::array(), coroots = json::array();
  for (const auto& r : rs.simple_roots) simple.push_back(rational_vector(r));
  for (const auto& c : rs.simple_coroots) coroots.push_back(rational_vector(c));
  json positive = json::array(), all_coroots = json::array();
  for (const auto& r : rs.positive_roots) positive.push_back(rational_vector(r));
  for (const auto& c : rs.coroots) all_coroots.push_back(rational_vector(c));
  j["simple_roots"] = simple;
  j["simple_coroots"] = coroots;
  j["positive_roots"] = positive;
  j["coroots"] = all_coroots;
  j["gram_determinant"] = rational_text(gram_determinant(rs.simple_coroots));
  j["torus_volume"] = to_json(torus_volume(rs));
  j["coroot_norm_product"] = to_json(coroot_norm_product(rs));
  return j;
}

json to_json(const VolumeResult& v) {
  json j;
  j["series"] = std::string(1, tag_letter(v.series.tag));
  j["n"] = v.series.n;
  j["group"] = group_name(v.series);
  j["center_order"] = v.center_order;
  j["exact"] = v.exact ? to_json(*v.exact) : json(nullptr);
  j["log_value"] = v.log_value;
  return j;
}

json to_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    a.push_back(row);
  }
  return a;
}

json to_json(const CurvatureReport& r, bool with_matrices) {
  json j;
  j["algebra"] = algebra_name(r.kind, r.size);
  j["dim"] = r.dim;
  j["chi"] = r.chi.chi;
  j["killing_scale"] = r.chi.killing_scale;
  j["killing_diagonal_spread"] = r.chi.diagonal_spread;
  j["killing_off_diagonal"] = r.chi.off_diagonal;
  j["published_chi"] = r.published_chi;
  j["chi_matches_published"] = r.chi_matches_published;
  j["ricci_scalar_factor"] = r.ricci.diagonal().mean();
  j["ricci_lower_bound"] = r.ricci_lower_bound;
  j["killing_route_gap"] = r.killing_route_gap;
  j["ricci_killing_gap"] = r.ricci_killing_gap;
  j["orthonormality_defect"] = r.orthonormality_defect;
  j["antisymmetry_defect"] = r.antisymmetry_defect;
  if (with_matrices) {
    j["killing"] = to_json(r.killing);
    j["ricci"] = to_json(r.ricci);
  }
  return j;
}

json to_json(const Calibration& c) {
  json j;
  j["n"] = c.n;
  json m = json::array();
  for (Eigen::Index r = 0; r < c.phase_matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.phase_matrix.cols(); ++k) row.push_back(c.phase_matrix(r, k));
    m.push_back(row);
  }
  j["phase_matrix"] = m;
  j["phase_det"] = c.phase_det;
  j["theta_periods"] = c.theta_periods;
  j["phi_max"] = c.phi_max;
  j["density_integral"] = c.density_integral;
  j["metric_scale"] = c.metric_scale;
  j["volume_factor"] = c.volume_factor;
  j["quotient"] = to_json(c.quotient);
  j["relative_error"] = c.relative_error;
  return j;
}

json to_json(const BandMass& b) {
  json j;
  j["closed_form"] = b.closed_form;
  j["quadrature"] = b.quadrature;
  j["abs_diff"] = std::abs(b.closed_form - b.quadrature);
  j["complement"] = b.complement;
  return j;
}

json to_json(const KsResult& k) {
  json j;
  j["statistic"] = k.statistic;
  j["pvalue"] = k.pvalue;
  return j;
}

json to_json(const ConcentrationReport& r) {
  json j;
  j["group"] = r.group;
  j["base"] = r.base;
  j["r"] = r.r;
  j["count"] = r.count;
  j["seed"] = r.seed;
  j["empirical_mass"] = r.empirical_mass;
  j["predicted_mass"] = r.predicted_mass;
  j["stderr"] = r.stderr_mass;
  j["z_score"] = number(r.z_score);
  j["ci95"] = {r.ci_low, r.ci_high};
  j["ks_statistic"] = r.ks_statistic;
  j["ks_pvalue"] = r.ks_pvalue;
  j["notes"] = r.notes;
  return j;
}

}  // namespace lieconc
