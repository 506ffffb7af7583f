#pragma once

#include "json.hpp"

#include "lieconc/cpn.hpp"
#include "lieconc/curvature.hpp"
#include "lieconc/exact_scalar.hpp"
#include "lieconc/haar.hpp"
#include "lieconc/root_system.hpp"
#include "lieconc/volumes.hpp"

namespace lieconc {

using json = nlohmann::ordered_json;

/// {"q": "num/den", "pi_pow": k, "sqrt": "s", "text": …, "value": …}
json to_json(const ExactScalar& x);
/// Inverse of to_json on the q / pi_pow / sqrt fields.
ExactScalar exact_from_json(const json& j);

json to_json(const RootSystem& rs);
json to_json(const VolumeResult& v);
json to_json(const CurvatureReport& r, bool with_matrices = false);
json to_json(const Calibration& c);
json to_json(const BandMass& b);
json to_json(const KsResult& k);
/// Per-sample distances are left out.
json to_json(const ConcentrationReport& r);

json to_json(const Eigen::MatrixXd& m);

}  // namespace lieconc
