#include "doctest.h"
#include "oracles.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/expr.hpp"
#include "slodowy/pbw.hpp"
#include "slodowy/reduction.hpp"

#include <random>

using namespace slodowy;

static Mat E(int n, int i, int j) { return Mat::unit(n, i, j); }

static LieBasis sl2_basis(std::vector<std::string> order) {
  std::vector<Mat> els;
  for (const auto& nm : order) {
    if (nm == "e") els.push_back(E(2, 1, 2));
    if (nm == "f") els.push_back(E(2, 2, 1));
    if (nm == "h") els.push_back(E(2, 1, 1) - E(2, 2, 2));
  }
  return LieBasis(els, order);
}

static LieBasis sl3_basis() {
  std::vector<Mat> els{E(3, 1, 1) - E(3, 2, 2), E(3, 2, 2) - E(3, 3, 3), E(3, 1, 2), E(3, 2, 3),
                       E(3, 1, 3),           E(3, 3, 2),           E(3, 2, 1), E(3, 3, 1)};
  return LieBasis(els, {"h1", "h2", "e1", "e2", "e3", "f2", "f1", "f3"});
}

static PBWElem random_elem(std::mt19937& rng, int letters, int max_len, int terms) {
  std::uniform_int_distribution<int> L(0, letters - 1), len(0, max_len), hp(0, 1), c(-3, 3);
  PBWElem u;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    int l = len(rng);
    for (int k = 0; k < l; ++k) m.w.push_back(L(rng));
    std::sort(m.w.begin(), m.w.end());
    m.h = hp(rng);
    u.add(m, c(rng));
  }
  return u;
}

// Natural representation with hbar = 1: letters act as their matrices.
static Mat natural(const LieBasis& b, const PBWElem& u) {
  Mat out(b.n());
  for (const auto& [m, c] : u.terms()) {
    Mat p = Mat::identity(b.n());
    for (int x : m.w) p = p * b.elem(x);
    out = out + p * c;
  }
  return out;
}

TEST_CASE("LieBasis structure constants") {
  auto b = sl2_basis({"e", "f", "h"});
  CHECK(b.bracket(0, 1) == std::vector<std::pair<int, Rat>>{{2, 1}});
  CHECK(b.bracket(2, 0) == std::vector<std::pair<int, Rat>>{{0, 2}});
  CHECK(b.index("h") == 2);
  CHECK_THROWS_AS(b.index("q"), InputError);
  CHECK_THROWS_AS(LieBasis({E(2, 1, 2), E(2, 2, 1)}, {"e", "f"}), InputError);
  CHECK_THROWS_AS(LieBasis({E(2, 1, 2), E(2, 1, 2)}, {"a", "b"}), InputError);
  CHECK(default_name(E(3, 1, 2), 0) == "E12");
  CHECK(default_name(E(3, 2, 2) - E(3, 3, 3), 0) == "h2");
}

TEST_CASE("sl2 relation and unit") {
  auto b = sl2_basis({"e", "f", "h"});
  PBWAlgebra A(b);
  auto e = A.letter("e"), f = A.letter("f"), h = A.letter("h");
  CHECK(A.commutator(e, f) == A.mul(h, A.hbar()));
  CHECK(A.commutator(h, e) == A.mul(e, A.hbar()) * 2);
  CHECK(A.commutator(h, f) == A.mul(f, A.hbar()) * -2);
  CHECK(A.mul(A.one(), e) == e);
  CHECK(A.mul(f, A.one()) == f);
  // order [e, f, h]: f e is out of order and straightens
  CHECK(A.mul(f, e) == A.word({"e", "f"}) - A.mul(h, A.hbar()));
}

TEST_CASE("product agrees with the reference straightening") {
  auto b = sl3_basis();
  PBWAlgebra A(b);
  std::mt19937 rng(7);
  for (int s = 0; s < 120; ++s) {
    auto x = random_elem(rng, b.size(), 3, 3), y = random_elem(rng, b.size(), 3, 3);
    CHECK(A.mul(x, y) == pbw_mul_reference(b, x, y));
  }
}

TEST_CASE("associativity and the natural representation") {
  auto b = sl3_basis();
  PBWAlgebra A(b);
  std::mt19937 rng(11);
  for (int s = 0; s < 100; ++s) {
    auto x = random_elem(rng, b.size(), 2, 2), y = random_elem(rng, b.size(), 2, 2),
         z = random_elem(rng, b.size(), 2, 2);
    CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
    CHECK(natural(b, A.mul(x, y)) == natural(b, x) * natural(b, y));
  }
}

TEST_CASE("Casimir is central") {
  auto b = sl2_basis({"h", "e", "f"});
  PBWAlgebra A(b);
  auto C = A.word({"h", "h"}) + A.word({"e", "f"}) * 2 + A.word({"f", "e"}) * 2;
  for (int i = 0; i < b.size(); ++i) CHECK(A.commutator(A.letter(i), C).is_zero());
  CHECK(C.max_degree() == 2);
  CHECK(C.component(2) == C);
}

TEST_CASE("left ideal reduction") {
  auto b = sl2_basis({"h", "e", "f"});
  PBWAlgebra A(b);
  ReductionCtx ctx(A, 2, {1});
  auto shifted = A.letter("f") - A.hbar();
  std::mt19937 rng(3);
  for (int s = 0; s < 50; ++s) {
    auto u = random_elem(rng, 3, 3, 3), v = random_elem(rng, 3, 3, 3);
    CHECK(ideal_reduce(A.mul(u, shifted), ctx).is_zero());
    auto r = ideal_reduce(u, ctx);
    CHECK(ideal_reduce(r, ctx) == r);
    CHECK(ideal_reduce(u * 3 + v, ctx) == r * 3 + ideal_reduce(v, ctx));
    for (const auto& [m, c] : r.terms())
      for (int x : m.w) CHECK(x < 2);
  }
  auto C = A.word({"h", "h"}) + A.word({"e", "f"}) * 2 + A.word({"f", "e"}) * 2;
  CHECK(first_non_invariant(ideal_reduce(C, ctx), ctx) == -1);
  CHECK(first_non_invariant(A.letter("h"), ctx) == 2);
  CHECK(ad_invariant(E(2, 2, 1), A.letter("e"), ctx) == false);
}

TEST_CASE("reduction guards") {
  auto b = sl2_basis({"h", "e", "f"});
  PBWAlgebra A(b);
  CHECK_THROWS_AS(ReductionCtx(A, 1, {1, 1}), InputError);  // e, f not closed
  CHECK_THROWS_AS(ReductionCtx(A, 2, {1, 1}), InputError);  // wrong length
  auto b3 = sl3_basis();
  PBWAlgebra A3(b3);
  CHECK_NOTHROW(ReductionCtx(A3, 5, {1, 1, 0}));
  CHECK_THROWS_AS(ReductionCtx(A3, 5, {1, 1, 1}), InputError);  // f3 = [f2, f1] up to sign
}

TEST_CASE("printing round-trips through the expression parser") {
  auto b = sl3_basis();
  PBWAlgebra A(b);
  std::mt19937 rng(5);
  for (int s = 0; s < 100; ++s) {
    auto u = random_elem(rng, b.size(), 3, 4) * Rat(3, 4);
    const auto text = A.str(u);
    const auto back = eval_expr<PBWElem>(
        parse_expr(text), [&](const std::string& v) { return v == "hbar" ? A.hbar() : A.letter(v); },
        [](const Rat& c) { return PBWElem::scalar(c); }, [&](const PBWElem& x, const PBWElem& y) { return A.mul(x, y); });
    CHECK_MESSAGE(back == u, text);
  }
  CHECK(A.str(A.word({"h1", "h1"}) - A.word({"e1"}, 3, 1)) == "h1^2 - 3*e1*hbar");
  CHECK(A.str(PBWElem()) == "0");
}

TEST_CASE("expression parser") {
  CHECK_THROWS_AS(parse_expr("h1 +"), InputError);
  CHECK_THROWS_AS(parse_expr("h1 / h2"), InputError);
  CHECK_THROWS_AS(parse_expr("(h1"), InputError);
  CHECK(expr_variables(parse_expr("2*x^2 - (y + hbar)/3")) == std::vector<std::string>{"hbar", "x", "y"});
}
