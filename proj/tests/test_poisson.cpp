#include "doctest.h"

#include "slodowy/errors.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/sl4_example.hpp"

#include <map>
#include <random>

using namespace slodowy;

static Mat E(int n, int i, int j) { return Mat::unit(n, i, j); }

static LieBasis sl3_basis() {
  return LieBasis({E(3, 1, 1) - E(3, 2, 2), E(3, 2, 2) - E(3, 3, 3), E(3, 1, 2), E(3, 2, 3), E(3, 1, 3), E(3, 3, 2),
                   E(3, 2, 1), E(3, 3, 1)},
                  {"h1", "h2", "e1", "e2", "e3", "f2", "f1", "f3"});
}

static Poly random_poly(std::mt19937& rng, const Vars& v, int deg, int terms) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(v->size()) - 1), d(0, deg), c(-3, 3);
  Poly p(v);
  for (int t = 0; t < terms; ++t) {
    Poly::Exps e(v->size(), 0);
    const int k = d(rng);
    for (int s = 0; s < k; ++s) ++e[var(rng)];
    p.add(e, c(rng));
  }
  return p;
}

TEST_CASE("Poly arithmetic and parsing") {
  auto v = make_vars({"x", "y"});
  auto p = parse_poly(v, "(x + y)^2 - 2*x*y");
  CHECK(p == parse_poly(v, "x^2 + y^2"));
  CHECK(p.degree() == 2);
  CHECK(p.derivative(0) == parse_poly(v, "2*x"));
  CHECK(parse_poly(v, p.str()) == p);
  CHECK(parse_poly(v, "3/4*x - 1/2").str() == "3/4*x - 1/2");
  auto w = make_vars({"s"});
  CHECK(p.substitute({Poly::var(w, 0), Poly::constant(w, 1)}) == parse_poly(w, "s^2 + 1"));
  CHECK_THROWS_AS(parse_poly(v, "x + q"), InputError);
  CHECK_THROWS_AS(p + Poly::var(w, 0), InputError);
  auto big = make_vars({"y", "z", "x"});
  CHECK(p.rebase(big) == parse_poly(big, "x^2 + y^2"));
  CHECK(monomials_upto(3, 2).size() == 10);
  std::mt19937 rng(1);
  for (int s = 0; s < 50; ++s) {
    auto a = random_poly(rng, v, 3, 4), b = random_poly(rng, v, 3, 4);
    CHECK(parse_poly(v, a.str()) == a);
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
  }
}

TEST_CASE("Lie-Poisson bracket") {
  PoissonAlgebra sl2(LieBasis({E(2, 1, 2), E(2, 2, 1), E(2, 1, 1) - E(2, 2, 2)}, {"e", "f", "h"}));
  CHECK(sl2.bracket(sl2.coord(0), sl2.coord(1)) == sl2.coord(2));
  CHECK(sl2.bracket(sl2.coord(2), sl2.coord(0)) == sl2.coord(0) * 2);

  PoissonAlgebra P(sl3_basis());
  std::mt19937 rng(17);
  for (int s = 0; s < 100; ++s) {
    auto f = random_poly(rng, P.vars(), 2, 3), g = random_poly(rng, P.vars(), 2, 3), h = random_poly(rng, P.vars(), 2, 3);
    CHECK(P.bracket(f, f).is_zero());
    CHECK(P.bracket(f, g) == P.bracket(g, f) * -1);
    CHECK((P.bracket(f, P.bracket(g, h)) + P.bracket(g, P.bracket(h, f)) + P.bracket(h, P.bracket(f, g))).is_zero());
    CHECK(P.bracket(f, g * h) == P.bracket(f, g) * h + g * P.bracket(f, h));
  }
}

TEST_CASE("reduction mod I_chi") {
  PoissonAlgebra P(sl3_basis());
  PoissonCtx ctx(P, 5, {1, 1, 0});
  for (int y = 5; y < 8; ++y) CHECK(reduce_mod_ichi(P.coord(y) - Poly::constant(P.vars(), ctx.chi[y - 5]), ctx).is_zero());
  std::mt19937 rng(23);
  for (int s = 0; s < 100; ++s) {
    auto f = random_poly(rng, P.vars(), 2, 3), g = random_poly(rng, P.vars(), 2, 3);
    CHECK(reduce_mod_ichi(f * g, ctx) == reduce_mod_ichi(f, ctx) * reduce_mod_ichi(g, ctx));
  }
  CHECK_THROWS_AS(PoissonCtx(P, 5, {1, 1, 1}), InputError);
  CHECK_THROWS_AS(reduced_bracket(P.coord(0), P.coord(1), ctx), DomainError);
}

TEST_CASE("sl2 regular: the reduced algebra is generated by the Casimir") {
  PoissonAlgebra P(LieBasis({E(2, 1, 1) - E(2, 2, 2), E(2, 1, 2), E(2, 2, 1)}, {"h", "e", "f"}));
  PoissonCtx ctx(P, 2, {1});
  auto cas = parse_poly(P.vars(), "h^2 + 4*e*f");
  CHECK(is_invariant(cas, ctx));
  CHECK(reduced_bracket(cas, cas, ctx).is_zero());
  CHECK_FALSE(is_invariant(P.coord(0), ctx));

  // transversal section e + b f^T: invariants restrict to polynomials in b
  auto prm = make_vars({"b"});
  std::vector<std::vector<Poly>> X{{Poly::constant(prm, 0), Poly::constant(prm, 1)},
                                   {Poly::var(prm, 0), Poly::constant(prm, 0)}};
  auto sec = section_from_matrix(ctx, prm, X);
  auto L = invariant_lift(Poly::var(prm, 0), sec, ctx, 2);
  CHECK(is_invariant(L, ctx));
  CHECK(restrict_to_section(L, ctx, sec) == Poly::var(prm, 0));
  CHECK(L == invariant_lift_serial(Poly::var(prm, 0), sec, ctx, 2));
  CHECK(invariant_lift(Poly::constant(prm, 5), sec, ctx, 0) == Poly::constant(P.vars(), 5));

  // negative control: on the diagonal family only even functions of a extend
  auto pa = make_vars({"a"});
  std::vector<std::vector<Poly>> D{{Poly::var(pa, 0), Poly::constant(pa, 1)},
                                   {Poly::constant(pa, 0), Poly::var(pa, 0) * -1}};
  auto bad = section_from_matrix(ctx, pa, D);
  for (int bound = 0; bound <= 3; ++bound)
    CHECK_THROWS_AS(invariant_lift(Poly::var(pa, 0), bad, ctx, bound), BoundedSearchFailure);
}

TEST_CASE("reduced brackets do not depend on the lift") {
  // slice for the (3,1) nilpotent of sl4
  const int n = 4;
  std::vector<Mat> m{E(n, 2, 1), E(n, 3, 1), E(n, 3, 2), E(n, 4, 1), E(n, 3, 4)};
  std::vector<Mat> elems;
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) {
    elems.push_back(E(n, i, i) - E(n, i + 1, i + 1));
    names.push_back("h" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool in_m = false;
      for (const auto& y : m) in_m = in_m || y == E(n, i, j);
      if (in_m) continue;
      elems.push_back(E(n, i, j));
      names.push_back(default_name(E(n, i, j), 0));
    }
  const int first_m = static_cast<int>(elems.size());
  const Mat e = E(n, 1, 2) + E(n, 2, 3);
  std::vector<Rat> chi;
  for (const auto& y : m) {
    elems.push_back(y);
    names.push_back(default_name(y, 0));
    chi.push_back((e * y).trace());
  }
  PoissonAlgebra P(LieBasis(elems, names));
  PoissonCtx ctx(P, first_m, chi);
  auto prm = make_vars({"a", "b", "c", "d", "f"});
  const char* rows[4][4] = {{"a", "1", "0", "0"},
                            {"b - 3*a^2", "a", "1", "0"},
                            {"c + 20*a^3", "b - 3*a^2", "a", "d"},
                            {"f", "0", "0", "-3*a"}};
  std::vector<std::vector<Poly>> X(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) X[i].push_back(parse_poly(prm, rows[i][j]));
  auto sec = section_from_matrix(ctx, prm, X);
  std::vector<Poly> L;
  for (int k = 0; k < 5; ++k) L.push_back(invariant_lift(Poly::var(prm, k), sec, ctx, 3));

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> pick(0, 4), ym(first_m, first_m + 4);
  auto ideal_elem = [&]() {
    Poly g(P.vars());
    for (int t = 0; t < 2; ++t) {
      const int y = ym(rng);
      g = g + (P.coord(y) - Poly::constant(P.vars(), chi[y - first_m])) * random_poly(rng, P.vars(), 1, 2);
    }
    return g;
  };
  for (int s = 0; s < 100; ++s) {
    const int i = pick(rng), j = pick(rng);
    const Poly base = reduced_bracket(L[i], L[j], ctx);
    const Poly alt = reduce_mod_ichi(P.bracket(L[i] + ideal_elem(), L[j] + ideal_elem()), ctx);
    CHECK(restrict_to_section(alt, ctx, sec) == restrict_to_section(base, ctx, sec));
    CHECK(is_invariant(base, ctx));
  }
}

TEST_CASE("verify_sl4 report") {
  const Report r = verify_sl4();
  std::map<std::string, const Check*> by;
  for (const auto& c : r.checks) by[c.name] = &c;
  REQUIRE(by.count("phi_ring_isomorphism"));
  CHECK(by["fixture_matches_stage"]->ok);
  CHECK(by["slice_section_in_level_set"]->ok);
  CHECK(by["reduced_section_in_level_set"]->ok);
  CHECK(by["phi_ring_isomorphism"]->ok);
  CHECK(by["phi_preserves_computed_brackets"]->ok);
  CHECK(by["phi_preserves_characteristic_polynomial"]->ok);
  REQUIRE(by.count("bracket_tables_up_to_scalar"));
}
