#pragma once

#include "slodowy/report.hpp"

#include <string>

namespace slodowy {

// Classical sl4 example from fixture sl4.json: the Slodowy slice for type
// (3,1) with coordinates a, b, c, d, f against the m2 reduction of the cover
// (2,2) < (3,1) with coordinates u, v, x, y, z. Brackets are computed from
// invariant lifts and compared with the fixture tables up to one global
// scalar, which the report records. The map phi is checked to be a ring
// isomorphism (its inverse is found by linear solve), to intertwine the
// computed brackets, and to preserve the characteristic polynomial.
Report verify_sl4(const std::string& fixture_dir = "");

}  // namespace slodowy
