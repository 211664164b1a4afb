#include "doctest.h"

#include "slodowy/errors.hpp"
#include "slodowy/json_io.hpp"

#include <random>

using namespace slodowy;

static Rat Q(int p, int q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }

TEST_CASE("partition and pyramid round trip") {
  auto p = P({4, 3});
  CHECK(to_json(p).dump() == "[4,3]");
  CHECK(partition_from_json(to_json(p)) == p);
  for (const auto& py : enumerate_pyramids(p)) {
    CHECK(pyramid_from_json(to_json(py)) == py);
    auto f = standard_filling(py);
    auto g = filling_from_json(to_json(f));
    CHECK(g.pyramid() == py);
    CHECK(g.labels_row_major() == f.labels_row_major());
  }
  CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), InputError);
  CHECK_THROWS_AS(partition_from_json(json::parse("{\"a\":1}")), InputError);
}

TEST_CASE("matrix format") {
  Mat m(3);
  m.set(1, 2, Rat(1, 2));
  m.set(3, 1, Rat(-4));
  auto j = to_json(m);
  CHECK(j.dump() == R"({"entries":[[1,2,"1/2"],[3,1,"-4"]],"n":3})");
  CHECK(mat_from_json(j) == m);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"n":2,"entries":[[3,1,"1"]]})")), InputError);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"n":2,"entries":[[1,1,"1/0"]]})")), InputError);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"entries":[]})")), InputError);
}

TEST_CASE("stage data dump carries the construction") {
  auto sd = build_stage(P({2, 2, 2}), P({3, 2, 1}));
  auto j = to_json(sd);
  CHECK(mat_from_json(j["e2"]) == sd.e2);
  CHECK(mat_from_json(j["h2prime"]) == sd.h2prime);
  CHECK(j["m2"].size() == 11);
  CHECK(j["E"].size() == 2);
  CHECK(j["rows"]["i"] == 1);
  CHECK(j["rows"]["j"] == 3);
  CHECK(j["K"] == "-1");
  auto r = to_json(verify_stage(sd.mu, sd.lam));
  CHECK(r["mu"].dump() == "[2,2,2]");
  CHECK(r["checks"].is_object());
}

TEST_CASE("PBW and polynomial round trips on random samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 5), len(0, 3), h(0, 2), c(-9, 9);
  for (int s = 0; s < 100; ++s) {
    PBWElem u;
    for (int t = 0; t < 4; ++t) {
      Mono m;
      int L = len(rng);
      for (int k = 0; k < L; ++k) m.w.push_back(letter(rng));
      std::sort(m.w.begin(), m.w.end());
      m.h = h(rng);
      u.add(m, Q(c(rng), 1 + (c(rng) + 9) % 5));
    }
    CHECK(pbw_from_json(to_json(u), 6) == u);
  }
  auto vars = make_vars({"x", "y", "z"});
  for (int s = 0; s < 100; ++s) {
    Poly p(vars);
    for (int t = 0; t < 4; ++t) p.add({len(rng), len(rng), len(rng)}, Q(c(rng), 1 + (c(rng) + 9) % 5));
    CHECK(poly_from_json(to_json(p)) == p);
  }
  CHECK_THROWS_AS(pbw_from_json(json::parse(R"([{"mono":[2,1],"hpow":0,"coeff":"1"}])"), 6), InputError);
  CHECK_THROWS_AS(pbw_from_json(json::parse(R"([{"mono":[7],"hpow":0,"coeff":"1"}])"), 6), InputError);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"vars":["x"],"terms":[[1,2,"1"]]})")), InputError);
}
