#pragma once

// JSON encodings. Rationals are strings "p/q" throughout.

#include "slodowy/gradings.hpp"
#include "slodowy/partitions.hpp"
#include "slodowy/pbw.hpp"
#include "slodowy/poly.hpp"
#include "slodowy/pyramids.hpp"
#include "slodowy/report.hpp"
#include "slodowy/stages.hpp"

#include <json.hpp>

namespace slodowy {

using nlohmann::json;

json to_json(const Partition& p);                 // [3,2,1]
json to_json(const Pyramid& p);                   // {shape, offsets}
json to_json(const Filling& f);                   // {shape, offsets, labels}
json to_json(const Mat& m);                       // {n, entries: [[i, j, "p/q"]]}
json to_json(const Subalg& s);                    // [Mat, ...]
json to_json(const PBWElem& u);                   // [{mono, hpow, coeff}]
json to_json(const Poly& p);                      // {vars, terms: [[e1, .., ek, "p/q"]]}
json to_json(const GoodReport& r);
json to_json(const PremetReport& r);
json to_json(const StageData& sd);
json to_json(const StageReport& r);
json to_json(const Report& r);

/// Decoders throw InputError on malformed input.
Partition partition_from_json(const json& j);
Pyramid pyramid_from_json(const json& j);
Filling filling_from_json(const json& j);
Mat mat_from_json(const json& j);
PBWElem pbw_from_json(const json& j, int num_letters);
Poly poly_from_json(const json& j);

}  // namespace slodowy
