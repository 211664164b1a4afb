#include "doctest.h"
#include "oracles.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/lie.hpp"
#include "slodowy/pyramids.hpp"

#include <set>

using namespace slodowy;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }

TEST_CASE("pyramid validation") {
  CHECK_NOTHROW(Pyramid(P({4, 3}), {0, 1}));
  CHECK_THROWS_AS(Pyramid(P({4, 3}), {0, 3}), InputError);
  CHECK_THROWS_AS(Pyramid(P({4, 3}), {0, -1}), InputError);
  CHECK_THROWS_AS(Pyramid(P({4, 3}), {0}), InputError);
}

TEST_CASE("enumerate_pyramids") {
  CHECK(enumerate_pyramids(P({4, 3})).size() == 3);
  CHECK(enumerate_pyramids(P({5})).size() == 1);
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : all_partitions(n)) {
      std::set<std::vector<int>> got;
      for (const auto& p : enumerate_pyramids(shape)) got.insert(p.offsets());
      auto want = oracle::pyramid_offsets(shape);
      CHECK(got == std::set<std::vector<int>>(want.begin(), want.end()));
    }
}

TEST_CASE("right_aligned and standard filling") {
  auto p = right_aligned(P({2, 2, 2}));
  CHECK(p.offsets() == std::vector<int>{0, 0, 0});
  auto f = standard_filling(p);
  CHECK(f.labels_row_major() == std::vector<int>{1, 4, 2, 5, 3, 6});
  auto q = right_aligned(P({4, 3}));
  CHECK(q.offsets() == std::vector<int>{0, 2});
  CHECK(standard_filling(q).labels_row_major() == std::vector<int>{1, 2, 4, 6, 3, 5, 7});
  auto s = standard_filling(right_aligned(P({4})));
  CHECK(s.labels_row_major() == std::vector<int>{1, 2, 3, 4});
  CHECK(right_aligned(P({1, 1})).offsets() == std::vector<int>{0, 0});
}

TEST_CASE("the three (4,3) fillings") {
  std::set<std::vector<int>> got;
  for (const auto& p : enumerate_pyramids(P({4, 3}))) got.insert(standard_filling(p).labels_row_major());
  // offsets 0, 1, 2: the upper row slides from left-aligned to right-aligned
  CHECK(got.count({1, 3, 5, 7, 2, 4, 6}) == 1);
  CHECK(got.count({1, 2, 4, 6, 3, 5, 7}) == 1);
}

TEST_CASE("filling validation") {
  auto p = right_aligned(P({2, 1}));
  CHECK_THROWS_AS(Filling(p, {1, 1, 2}), InputError);
  CHECK_THROWS_AS(Filling(p, {1, 2}), InputError);
  CHECK_THROWS_AS(Filling(p, {0, 1, 2}), InputError);
}

TEST_CASE("nilpotent_of") {
  auto f = standard_filling(right_aligned(P({2, 2, 2})));
  Mat want = Mat::unit(6, 1, 4) + Mat::unit(6, 2, 5) + Mat::unit(6, 3, 6);
  CHECK(nilpotent_of(f) == want);
  CHECK(nilpotent_of(standard_filling(right_aligned(P({1})))).is_zero());
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : all_partitions(n))
      for (const auto& p : enumerate_pyramids(shape)) CHECK(jordan_type(nilpotent_of(standard_filling(p))) == shape);
}

TEST_CASE("relabelling conjugates e_P") {
  auto p = enumerate_pyramids(P({3, 2}))[1];
  auto f = standard_filling(p);
  std::vector<int> perm{3, 5, 1, 2, 4};  // label k -> perm[k-1]
  auto labels = f.labels_row_major();
  std::vector<int> relabelled;
  for (int k : labels) relabelled.push_back(perm[k - 1]);
  Filling g(p, relabelled);
  Mat Q(5);
  for (int k = 1; k <= 5; ++k) Q.set(perm[k - 1], k, Rat(1));
  CHECK(nilpotent_of(g) == Q * nilpotent_of(f) * Q.transpose());
  CHECK(jordan_type(nilpotent_of(g)) == jordan_type(nilpotent_of(f)));
}

TEST_CASE("pyramid semisimple element") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : all_partitions(n))
      for (const auto& p : enumerate_pyramids(shape)) {
        auto f = standard_filling(p);
        Mat h = pyramid_semisimple(f);
        Mat e = nilpotent_of(f);
        CHECK(h.trace() == 0);
        CHECK(bracket(h, e) == e * Rat(2));
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) CHECK(h.at(i, i) - h.at(j, j) == f.col(j) - f.col(i));
      }
  auto f = standard_filling(right_aligned(P({3, 3})));
  Mat h = pyramid_semisimple(f);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) CHECK(is_integer(Rat((h.at(i, i) - h.at(j, j)) / 2)));
  auto mid = enumerate_pyramids(P({4, 3}))[1];
  auto fm = standard_filling(mid);
  bool odd = false;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      if ((fm.col(j) - fm.col(i)) % 2 != 0) odd = true;
  CHECK(odd);
}

TEST_CASE("render snapshots") {
  auto p = right_aligned(P({2, 2, 2}));
  auto f = standard_filling(p);
  CHECK(render(p, f, RenderFormat::ascii) == "[ 3][ 6]\n[ 2][ 5]\n[ 1][ 4]\n");
  auto q = right_aligned(P({4, 3}));
  CHECK(render(q, standard_filling(q), RenderFormat::ascii) == "    [ 3][ 5][ 7]\n[ 1][ 2][ 4][ 6]\n");
  auto tex = render(q, standard_filling(q), RenderFormat::tex);
  CHECK(tex.rfind("\\begin{tikzpicture}", 0) == 0);
  CHECK(tex.find("\\draw (1,1) rectangle (3,2); \\node at (2,1.5) {3};") != std::string::npos);
  auto dot = render(q, std::nullopt, RenderFormat::dot);
  CHECK(dot.find("digraph pyramid {") == 0);
  int nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 7);
  CHECK(edges == 5);
  CHECK_THROWS_AS(parse_render_format("svg"), InputError);
}

TEST_CASE("hasse diagram rendering") {
  auto dot = render_hasse(5, RenderFormat::dot);
  auto count = [&](const std::string& s, const std::string& pat) {
    int c = 0;
    for (auto pos = s.find(pat); pos != std::string::npos; pos = s.find(pat, pos + 1)) ++c;
    return c;
  };
  // p(5) = 7 nodes; the dominance order on partitions of 5 is a chain of length 6
  CHECK(count(dot, "[label=") == 7);
  CHECK(count(dot, " -> ") == 6);
  CHECK(dot.find("digraph") == 0);
  // p(6) = 11
  auto dot6 = render_hasse(6, RenderFormat::dot);
  CHECK(count(dot6, "[label=") == 11);
  CHECK(count(dot6, " -> ") == static_cast<int>(oracle::hasse(6).size()));
  CHECK(render_hasse(4, RenderFormat::tex).find("tikzpicture") != std::string::npos);
  CHECK(render_hasse(3, RenderFormat::ascii) == "(3)\n(2,1) < (3)\n(1,1,1) < (2,1)\n");
}
