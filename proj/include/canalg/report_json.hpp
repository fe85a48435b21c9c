#pragma once

#include <json.hpp>

#include "canalg/geometry.hpp"
#include "canalg/numeric.hpp"
#include "canalg/oracle.hpp"
#include "canalg/zeroset.hpp"

namespace canalg {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json json_int(const Int& v);

Json to_json(const GeometryReport& r);
Json to_json(const ZeroSetReport& r);
Json to_json(const ZTriple& z);

// {"type": [...], "lambdas": [...], "dim": "...", "arrows": {"i,j": [[...]]}}
// with every rational written as "num/den".
Json to_json(const oracle::MatrixRep& m);
oracle::MatrixRep matrix_rep_from_json(const Json& j);

}  // namespace canalg
