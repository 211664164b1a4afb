#pragma once

#include "slodowy/report.hpp"

#include <string>

namespace slodowy {

/// Quantum reduction of U_hbar(sl3) by the lower triangular subalgebra, in one
/// shot and in two stages, against the fixture sl3.json.
///
/// Checks: fixture layout matches the stage construction for (2,1) < (3);
/// z1, z2 invariant in the one-shot reduction and commuting; the fixture lifts
/// m1-invariant and k-invariant in the first reduction; phi sends each lift to
/// its z; two-stage and one-shot dimensions agree in every degree up to
/// max_degree (fixture default when negative).
///
/// When a z or lift check fails, the notes record the invariant nearest to the
/// given formula: the unique-up-to-kernel u with u = z mod hbar whose lift
/// u + (lift - z) is m1-invariant, and whether it passes the remaining checks.
Report verify_sl3(const std::string& fixture_dir = "", int max_degree = -1);

}  // namespace slodowy
