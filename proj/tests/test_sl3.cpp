#include "doctest.h"

#include "slodowy/invariants.hpp"
#include "slodowy/sl3_example.hpp"

#include <map>

using namespace slodowy;

static const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Number of (a, b, c) with a + 2b + 3c = D: degrees of hbar, z1, z2.
static int poly_ring_dim(int D) {
  int count = 0;
  for (int c = 0; 3 * c <= D; ++c)
    for (int b = 0; 2 * b + 3 * c <= D; ++b) ++count;
  return count;
}

TEST_CASE("one-shot sl3 reduction is free on generators of degree 1, 2, 3") {
  auto sq = make_stage_quantum(build_stage(Partition({2, 1}), Partition({3})));
  for (int D = 0; D <= 7; ++D) CHECK(invariant_basis(*sq.oneshot, D).size() == static_cast<std::size_t>(poly_ring_dim(D)));
}

TEST_CASE("verify_sl3 report") {
  const Report r = verify_sl3("", 5);
  CHECK(r.subject == "sl3");
  REQUIRE(find(r, "fixture_matches_stage"));
  CHECK(find(r, "fixture_matches_stage")->ok);
  CHECK(find(r, "dims_agree_D<=5")->ok);
  CHECK(find(r, "phi_lift_z1")->ok);
  CHECK(find(r, "phi_lift_z2")->ok);
  for (const char* name : {"z1_invariant", "z2_invariant", "z1_z2_commute", "lift_z1_m1_invariant",
                           "lift_z1_k_invariant", "lift_z2_m1_invariant", "lift_z2_k_invariant"})
    CHECK_MESSAGE(find(r, name) != nullptr, name);

  // Whatever the formulas give, an invariant agreeing with each modulo hbar
  // exists whose lift with the same extra term passes every stage check.
  std::map<std::string, std::string> notes(r.notes.begin(), r.notes.end());
  for (const char* z : {"z1", "z2"}) {
    const bool literal_ok = find(r, std::string(z) + "_invariant")->ok;
    if (literal_ok) continue;
    REQUIRE(notes.count(std::string(z) + "_corrected_lift"));
    CHECK(notes[std::string(z) + "_corrected_lift"] ==
          "m1-invariant, k-invariant, phi maps it to the corrected invariant");
  }
  if (notes.count("corrected_commute")) CHECK(notes["corrected_commute"] == "yes");
}
