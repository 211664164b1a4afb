#include "slodowy/gradings.hpp"

#include "slodowy/errors.hpp"

#include <sstream>

namespace slodowy {

bool Grading::integral() const {
  for (const auto& [d, piece] : pieces)
    if (!is_integer(d)) return false;
  return true;
}

int Grading::dim(const Rat& j) const {
  auto it = pieces.find(j);
  return it == pieces.end() ? 0 : it->second.dim();
}

Mat Grading::component(const Mat& x, const Rat& j) const {
  Mat out(x.dim());
  for (const auto& [idx, c] : x.entries())
    if (degree(idx.first, idx.second) == j) out.set(idx.first, idx.second, c);
  return out;
}

bool Grading::homogeneous(const Mat& x, const Rat& j) const {
  for (const auto& [idx, c] : x.entries())
    if (degree(idx.first, idx.second) != j) return false;
  return true;
}

Grading grade_from_semisimple(const Mat& h) {
  if (!h.is_diagonal()) throw DomainError("grading element must be diagonal");
  const int n = h.dim();
  Grading g{h, {}};
  std::map<Rat, std::vector<Mat>> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gens[h.at(i, i) - h.at(j, j)].push_back(Mat::unit(n, i, j));
  for (auto& [d, v] : gens) g.pieces.emplace(d, Subalg(n, v));
  return g;
}

namespace {

std::size_t ad_rank(const Mat& e, const Subalg& piece) {
  std::vector<SparseVec> imgs;
  for (const auto& b : piece.basis()) imgs.push_back(bracket(e, b).vec());
  return rank(imgs);
}

}  // namespace

GoodReport check_good(const Grading& g, const Mat& e) {
  GoodReport r;
  std::ostringstream why;
  r.gg1 = g.homogeneous(e, 2);
  if (!r.gg1) why << "e not in g_2; ";

  r.gg2 = r.gg3 = true;
  for (const auto& [j, piece] : g.pieces) {
    const std::size_t rk = ad_rank(e, piece);
    if (j <= -1 && rk != static_cast<std::size_t>(piece.dim())) {
      if (r.gg2) why << "ad e not injective on g_" << to_string(j) << "; ";
      r.gg2 = false;
    }
    if (j >= -1 && rk != static_cast<std::size_t>(g.dim(j + 2))) {
      if (r.gg3) why << "ad e not onto g_" << to_string(j + 2) << "; ";
      r.gg3 = false;
    }
  }
  // surjectivity onto pieces whose source degree is missing
  for (const auto& [j, piece] : g.pieces)
    if (j - 2 >= -1 && !g.pieces.count(j - 2) && piece.dim() > 0) {
      if (r.gg3) why << "ad e not onto g_" << to_string(j) << "; ";
      r.gg3 = false;
    }

  Subalg z = centralizer(e);
  r.gg4 = true;
  for (const auto& b : z.basis())
    for (const auto& [idx, c] : b.entries())
      if (g.degree(idx.first, idx.second) < 0) r.gg4 = false;
  if (!r.gg4) why << "centralizer meets negative degrees; ";

  r.gg5 = true;
  for (const auto& [i, pi] : g.pieces)
    for (const auto& [j, pj] : g.pieces) {
      if (i + j == 0 || !r.gg5) continue;
      for (const auto& x : pi.basis())
        for (const auto& y : pj.basis())
          if (trace_pair(x, y) != 0) r.gg5 = false;
    }
  if (!r.gg5) why << "trace form pairs non-opposite degrees; ";

  // Telescoping GG3 along each coset j + 2Z leaves the pieces with -1 <= j < 1.
  int low = 0;
  for (const auto& [j, piece] : g.pieces)
    if (j >= -1 && j < 1) low += piece.dim();
  r.gg6 = z.dim() == low;
  if (!r.gg6) why << "dim z(e) = " << z.dim() << " but the pieces of degree in [-1, 1) have dim " << low << "; ";
  r.witness = why.str();
  return r;
}

Rat SympForm::operator()(const Mat& x, const Mat& y) const { return trace_pair(e, bracket(x, y)); }

std::size_t SympForm::rank() const {
  std::vector<SparseVec> rows;
  for (const auto& row : gram) {
    std::vector<SparseVec::Entry> ent;
    for (std::size_t k = 0; k < row.size(); ++k) ent.emplace_back(static_cast<int>(k), row[k]);
    rows.emplace_back(std::move(ent));
  }
  return slodowy::rank(rows);
}

SympForm symplectic_on_gminus1(const Grading& g, const Mat& e) {
  auto it = g.pieces.find(Rat(-1));
  Subalg space = it == g.pieces.end() ? Subalg(g.n(), {}) : it->second;
  SympForm s{e, space, {}};
  const auto& b = space.basis();
  s.gram.assign(b.size(), std::vector<Rat>(b.size(), Rat(0)));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s.gram[i][j] = s(b[i], b[j]);
  return s;
}

Subalg choose_lagrangian(const SympForm& s) {
  std::vector<Mat> rest = s.space.basis();
  std::vector<Mat> keep;
  while (!rest.empty()) {
    Mat x = rest.front();
    std::size_t p = 1;
    while (p < rest.size() && s(x, rest[p]) == 0) ++p;
    if (p == rest.size()) throw InternalError("symplectic form on g_{-1} is degenerate");
    Mat y = rest[p] * (1 / s(x, rest[p]));
    std::vector<Mat> next;
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k == p) continue;
      const Mat& z = rest[k];
      next.push_back(z - x * s(z, y) + y * s(z, x));
    }
    keep.push_back(x);
    rest = std::move(next);
  }
  return Subalg(s.space.ambient(), keep);
}

Subalg premet_subalgebra(const Grading& g, const Mat& e, const Subalg& l) {
  auto it = g.pieces.find(Rat(-1));
  for (const auto& x : l.basis()) {
    if (it == g.pieces.end() || !it->second.contains(x)) throw InputError("Lagrangian is not inside g_{-1}");
    for (const auto& y : l.basis())
      if (trace_pair(e, bracket(x, y)) != 0) throw InputError("subspace of g_{-1} is not isotropic");
  }
  std::vector<Mat> gens = l.basis();
  for (const auto& [j, piece] : g.pieces)
    if (j <= -2) gens.insert(gens.end(), piece.basis().begin(), piece.basis().end());
  return Subalg(g.n(), gens);
}

bool acts_nilpotently(const Subalg& m) {
  const int n = m.ambient();
  if (m.dim() == 0) return true;
  std::vector<SparseVec> w;
  for (int i = 0; i < n; ++i) w.push_back(SparseVec::unit(i));
  for (int step = 0; step <= n && !w.empty(); ++step) {
    Echelon next;
    std::vector<SparseVec> out;
    for (const auto& y : m.basis())
      for (const auto& v : w) {
        std::vector<SparseVec::Entry> img;
        for (const auto& [idx, c] : y.entries())
          if (Rat a = v.at(idx.second - 1); a != 0) img.emplace_back(idx.first - 1, c * a);
        SparseVec u(std::move(img));
        if (next.insert(u)) out.push_back(u);
      }
    w = std::move(out);
  }
  return w.empty();
}

PremetReport premet_report(const Subalg& m, const Mat& e) {
  PremetReport r;
  r.dim_m = m.dim();
  r.chi1 = is_closed(m) && acts_nilpotently(m);
  r.half_orbit_dim = e.is_zero() ? 0 : orbit_dim(jordan_type(e)) / 2;
  r.chi2 = r.dim_m == r.half_orbit_dim;
  std::vector<SparseVec> imgs;
  for (const auto& b : m.basis()) imgs.push_back(bracket(e, b).vec());
  r.chi3 = rank(imgs) == static_cast<std::size_t>(m.dim());
  r.chi4 = is_character(chi_of(e, m));
  return r;
}

}  // namespace slodowy
