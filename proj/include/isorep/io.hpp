#pragma once

// JSON encodings of every domain type.  Decoders throw InputError on
// malformed input; integers may be JSON numbers or decimal strings (for
// values beyond 64 bits), and encoders emit strings only when needed.

#include <string>

#include <json.hpp>

#include "isorep/complex.hpp"
#include "isorep/groupoid.hpp"
#include "isorep/nonab.hpp"
#include "isorep/rep_ab.hpp"
#include "isorep/torus.hpp"

namespace isorep::io {

using nlohmann::json;

json to_json(const Int& x);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
Int int_from_json(const json& j);
IntVector vector_from_json(const json& j);
/// `cols` fixes the width of an empty matrix and is checked otherwise.
IntMatrix matrix_from_json(const json& j, std::size_t cols);

json to_json(const CwComplex& c);
/// Face sets are transitively closed on load.
CwComplex complex_from_json(const json& j);

json to_json(const TorusSubgroup& h);
/// {"ambient_rank": n, "characters": [...]}; inside a groupoid the rank may
/// be omitted and defaults to `default_rank`.
TorusSubgroup torus_from_json(const json& j, std::size_t default_rank);

json to_json(const CellularGroupoid& g);
CellularGroupoid groupoid_from_json(const json& j);

json to_json(const WeightFamily& f);
WeightFamily family_from_json(const json& j);

json to_json(const RepGroup& r);
json to_json(const CohomologyGroup& h);
json to_json(const BundleGroup& b);
json to_json(const EulerNumbers& k);
json to_json(const AffineReport& r);
json to_json(const KappaLiftResult& r);
json to_json(const DoubleCosetInstance& inst, const DoubleCosetResult& r);
json to_json(const std::vector<GroupoidViolation>& v);

/// {"order": N, "table": [[...]]} or {"catalog": "trivial" | "cyclic" |
/// "symmetric" | "dihedral" | "quaternion", "n": k}.
FinGroup fingroup_from_json(const json& j);
json to_json(const FinGroup& g);
DoubleCosetInstance instance_from_json(const json& j);

/// Parses "free=r,torsion=d1,d2,...".
CohomologyGroup parse_h2_override(const std::string& spec);

/// The named example groupoids with JSON parameters (null for defaults).
CellularGroupoid build_example(const std::string& name, const json& params);

}  // namespace isorep::io
