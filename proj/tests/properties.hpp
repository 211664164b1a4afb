#pragma once

// Randomized algebraic property suites. Each returns the number of samples
// drawn and the number that violated the property.

#include "slodowy/pbw.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/reduction.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace props {

using namespace slodowy;

struct Tally {
  int samples = 0;
  int failures = 0;
  void record(bool ok) {
    ++samples;
    if (!ok) ++failures;
  }
};

inline Mat E(int n, int i, int j) { return Mat::unit(n, i, j); }

inline LieBasis sl3_basis() {
  return LieBasis({E(3, 1, 1) - E(3, 2, 2), E(3, 2, 2) - E(3, 3, 3), E(3, 1, 2), E(3, 2, 3), E(3, 1, 3), E(3, 3, 2),
                   E(3, 2, 1), E(3, 3, 1)},
                  {"h1", "h2", "e1", "e2", "e3", "f2", "f1", "f3"});
}

inline PBWElem random_elem(std::mt19937& rng, int letters, int max_len, int terms) {
  std::uniform_int_distribution<int> L(0, letters - 1), len(0, max_len), hp(0, 1), c(-3, 3);
  PBWElem u;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) m.w.push_back(L(rng));
    std::sort(m.w.begin(), m.w.end());
    m.h = hp(rng);
    u.add(m, c(rng));
  }
  return u;
}

inline Poly random_poly(std::mt19937& rng, const Vars& v, int deg, int terms) {
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

/// (xy)z = x(yz) and 1x = x1 = x in U_hbar(sl3).
inline Tally pbw_associativity(int samples, unsigned seed) {
  PBWAlgebra A(sl3_basis());
  std::mt19937 rng(seed);
  Tally t;
  for (int s = 0; s < samples; ++s) {
    auto x = random_elem(rng, 8, 3, 2), y = random_elem(rng, 8, 3, 2), z = random_elem(rng, 8, 2, 2);
    t.record(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)) && A.mul(A.one(), x) == x && A.mul(x, A.one()) == x);
  }
  return t;
}

/// Idempotence, linearity and vanishing on u (y - chi(y) hbar) for the
/// lower-triangular reduction of U_hbar(sl3).
inline Tally ideal_reduce_properties(int samples, unsigned seed) {
  PBWAlgebra A(sl3_basis());
  ReductionCtx ctx(A, 5, {1, 1, 0});  // f2, f1, f3
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(5, 7);
  Tally t;
  for (int s = 0; s < samples; ++s) {
    auto u = random_elem(rng, 8, 3, 3), v = random_elem(rng, 8, 3, 3);
    const int y = pick(rng);
    auto shifted = A.letter(y) - A.hbar() * ctx.chi[y - 5];
    auto r = ideal_reduce(u, ctx);
    t.record(ideal_reduce(r, ctx) == r && ideal_reduce(u * 3 - v, ctx) == r * 3 - ideal_reduce(v, ctx) &&
             ideal_reduce(A.mul(u, shifted), ctx).is_zero());
  }
  return t;
}

/// Antisymmetry, Jacobi and Leibniz for the Lie-Poisson bracket on sl3*.
inline Tally lie_poisson(int samples, unsigned seed) {
  PoissonAlgebra P(sl3_basis());
  std::mt19937 rng(seed);
  Tally t;
  for (int s = 0; s < samples; ++s) {
    auto f = random_poly(rng, P.vars(), 2, 3), g = random_poly(rng, P.vars(), 2, 3), h = random_poly(rng, P.vars(), 2, 3);
    const bool anti = P.bracket(f, g) == P.bracket(g, f) * -1;
    const bool jacobi =
        (P.bracket(f, P.bracket(g, h)) + P.bracket(g, P.bracket(h, f)) + P.bracket(h, P.bracket(f, g))).is_zero();
    const bool leibniz = P.bracket(f, g * h) == P.bracket(f, g) * h + g * P.bracket(f, h);
    t.record(anti && jacobi && leibniz);
  }
  return t;
}

/// Reduced brackets of slice coordinates for the (3,1) nilpotent of sl4 do not
/// change when the lifts are moved by elements of I_chi.
inline Tally reduced_bracket_lift_independence(int samples, unsigned seed) {
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
      if (i == j || std::find(m.begin(), m.end(), E(n, i, j)) != m.end()) continue;
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

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 4), ym(first_m, first_m + 4);
  auto ideal_elem = [&] {
    Poly g(P.vars());
    for (int t = 0; t < 2; ++t) {
      const int y = ym(rng);
      g = g + (P.coord(y) - Poly::constant(P.vars(), chi[y - first_m])) * random_poly(rng, P.vars(), 1, 2);
    }
    return g;
  };
  Tally t;
  for (int s = 0; s < samples; ++s) {
    const int i = pick(rng), j = pick(rng);
    const Poly base = reduced_bracket(L[i], L[j], ctx);
    const Poly alt = reduce_mod_ichi(P.bracket(L[i] + ideal_elem(), L[j] + ideal_elem()), ctx);
    t.record(restrict_to_section(alt, ctx, sec) == restrict_to_section(base, ctx, sec) && is_invariant(base, ctx));
  }
  return t;
}

}  // namespace props
