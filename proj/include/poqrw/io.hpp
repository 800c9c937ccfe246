#pragma once

// JSON and CSV surfaces shared by the command-line tool and the tests.
//
// Walk spec schema:
//   { "n": int, "n1": int, "p": float,
//     "unitary": {"re": [[float]], "im": [[float]]},
//     "phi0": {"re": [float], "im": [float]} }
// A spec may instead name a preset: {"preset": "hadamard", "theta": float, "p": float}
// or {"preset": "example-n3", "p": float}; "unitary" is then ignored and
// "phi0" defaults to the first coin basis state.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "poqrw/evolve.hpp"
#include "poqrw/limits.hpp"
#include "poqrw/mc.hpp"
#include "poqrw/model.hpp"
#include "poqrw/spectral.hpp"

namespace poqrw::io {

using nlohmann::json;

/// Parses a spec; shape errors raise ValidationError. Invariants are not
/// checked here (see validate()).
WalkSpec spec_from_json(const json& j);
json spec_to_json(const WalkSpec& spec);

WalkSpec load_spec(const std::string& path);

/// Preset spec by name ("hadamard" or "example-n3").
WalkSpec preset(const std::string& name, double theta, double p);

/// FNV-1a 64 of the canonical spec JSON, as 16 hex digits.
std::string spec_hash(const WalkSpec& spec);

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);
json complex_list(const std::vector<cplx>& values);

json to_json(const SpectralReport& r);
json to_json(const LiftReport& r);
json to_json(const Moments& m, int t);
json to_json(const CltReport& r);

/// CSV "k,sigma2,z0p_re,z0p_im,z0pp_re,z0pp_im,gap".
void write_limit_csv(std::ostream& os, const std::vector<LimitReport>& rows,
                     const std::vector<double>& gaps);
/// CSV "x,prob", increasing x.
void write_distribution_csv(std::ostream& os, const Distribution& d);
/// CSV "x,count,freq", increasing x.
void write_empirical_csv(std::ostream& os, const EmpiricalDist& d);

}  // namespace poqrw::io
