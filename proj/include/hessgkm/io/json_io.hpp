#pragma once

#include <json.hpp>
#include <string>

#include "hessgkm/classify/f2.hpp"
#include "hessgkm/classify/moment_graph.hpp"
#include "hessgkm/classify/varieties.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/curves.hpp"
#include "hessgkm/hess/stabilizer.hpp"

namespace hessgkm::io {

using Json = nlohmann::ordered_json;

/// Version tag written into the top-level "schema" field of every document.
inline constexpr const char* kSchemaVersion = "1";

/// {"schema": "hessgkm.<kind>/<version>"} to which callers add fields.
Json document(const std::string& kind);

// Rationals are [numerator, denominator]; integers that do not fit in 64
// bits are written as decimal strings.
Json to_json(const mpq_class& q);
Json to_json(const RationalMatrix& m);
Json to_json(const HessenbergFunction& h);
/// [[row, col, num, den], ...]
Json to_json(const SkeletalNilpotent& x);
Json to_json(const Permutation& w);
Json to_json(const Character& c);
/// {"rank": n, "codimension": c, "basis": [[...], ...]}
Json to_json(const Subtorus& k);
Json to_json(const TorusConstraintReport& r);
/// Coordinates keyed by "i,j".
Json to_json(const CellProfile& p);
Json to_json(const StabilizerEstimate& e);
Json to_json(const StabilityVerdict& v);
Json to_json(const BruteStability& b);
Json to_json(const MomentGraph& g);
Json to_json(const CellContainmentResult& r);
Json to_json(const MaxSubtorusVerdict& v);

mpq_class rational_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
HessenbergFunction hessenberg_from_json(const Json& j);
SkeletalNilpotent skeletal_from_json(int n, const Json& j);
Permutation permutation_from_json(const Json& j);

/// Undirected graph; vertices in one-line notation, edges labeled by the
/// weight's exponent vector.
std::string to_dot(const MomentGraph& g);

}  // namespace hessgkm::io
