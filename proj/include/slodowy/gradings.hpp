#pragma once

#include "slodowy/lie.hpp"
#include "slodowy/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace slodowy {

/// Grading of gl_n from a diagonal semisimple element: E_ij has degree
/// h_ii - h_jj. Degrees are rational in general; pyramid gradings are
/// integral, the stage element h2' need not be.
struct Grading {
  Mat semisimple;
  std::map<Rat, Subalg> pieces;

  int n() const { return semisimple.dim(); }
  Rat degree(int i, int j) const { return semisimple.at(i, i) - semisimple.at(j, j); }
  bool integral() const;
  /// Dimension of g_j (0 when the piece is absent).
  int dim(const Rat& j) const;
  /// Degree-j component of x.
  Mat component(const Mat& x, const Rat& j) const;
  /// True when x lies in g_j.
  bool homogeneous(const Mat& x, const Rat& j) const;
};

/// Throws DomainError for non-diagonal h.
Grading grade_from_semisimple(const Mat& h);

struct GoodReport {
  bool gg1 = false;  // e in g_2
  bool gg2 = false;  // ad e injective on g_j, j <= -1
  bool gg3 = false;  // ad e surjective g_j -> g_{j+2}, j >= -1
  bool gg4 = false;  // centralizer in nonnegative degrees
  bool gg5 = false;  // trace form pairs g_i with g_{-i} only
  bool gg6 = false;  // dim z(e) = sum of dim g_j over -1 <= j < 1 (dim g_0 + dim g_1 when integral)
  std::string witness;  // first failure, human readable
  bool all() const { return gg1 && gg2 && gg3 && gg4 && gg5 && gg6; }
};

GoodReport check_good(const Grading& g, const Mat& e);

/// omega(x, y) = tr(e [x, y]) on g_{-1}.
struct SympForm {
  Mat e;
  Subalg space;
  std::vector<std::vector<Rat>> gram;

  Rat operator()(const Mat& x, const Mat& y) const;
  std::size_t rank() const;
};

SympForm symplectic_on_gminus1(const Grading& g, const Mat& e);

/// Greedy symplectic basis: repeatedly pair the first remaining vector with
/// its first partner and keep the first member. Throws InternalError when
/// omega is degenerate.
Subalg choose_lagrangian(const SympForm& s);

/// l followed by the pieces of degree <= -2 (most negative first).
/// Throws InputError unless l is an omega-isotropic subspace of g_{-1}.
Subalg premet_subalgebra(const Grading& g, const Mat& e, const Subalg& l);

struct PremetReport {
  bool chi1 = false;  // closed, acting nilpotently
  bool chi2 = false;  // dim m = orbit dim / 2
  bool chi3 = false;  // m meets z(e) trivially
  bool chi4 = false;  // tr(e .) vanishes on [m, m]
  int dim_m = 0;
  int half_orbit_dim = 0;
  bool all() const { return chi1 && chi2 && chi3 && chi4; }
};

PremetReport premet_report(const Subalg& m, const Mat& e);

/// Every element of m is nilpotent and products of n elements vanish: the
/// flag W_{k+1} = m W_k reaches zero.
bool acts_nilpotently(const Subalg& m);

}  // namespace slodowy
