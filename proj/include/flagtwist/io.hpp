#pragma once

#include <json.hpp>
#include <string>

#include "flagtwist/biform.hpp"
#include "flagtwist/flag_geometry.hpp"

namespace flagtwist {

// Insertion-ordered JSON keeps report bytes reproducible.
using Json = nlohmann::ordered_json;

Json gauss_rat_to_json(const GaussRat& x);
GaussRat gauss_rat_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);

// {"conics": [{"q": [...], "m": [...]}, ...]}; "m" omitted for twistor
// fibers and reconstructed as conj(q) on load.
Json config_to_json(const Configuration& cfg);
Configuration config_from_json(const Json& j);

void save_config(const std::string& path, const Configuration& cfg);
Configuration load_config(const std::string& path);

// Bidegree header plus a sparse term list {pexp, lexp, coeff}.
Json biform_to_json(const BiForm& f);
BiForm biform_from_json(const Json& j);

}  // namespace flagtwist
