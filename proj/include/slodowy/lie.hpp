#pragma once

// Matrix Lie algebra layer over Q: spanned subalgebras, characters given by
// the trace form, centralizers, Jordan types and sl2-triples.

#include "slodowy/linalg.hpp"
#include "slodowy/matrix.hpp"
#include "slodowy/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slodowy {

/// Linear span of matrices in gl_n. The basis keeps the caller's order
/// (dependent generators are dropped); canonical() gives the reduced echelon
/// form used to compare spans.
class Subalg {
 public:
  Subalg() = default;
  Subalg(int n, const std::vector<Mat>& generators);

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }

  bool contains(const Mat& x) const;
  bool contains(const Subalg& other) const;
  bool same_span(const Subalg& other) const;
  /// Coordinates of x in basis(); nullopt when x is outside the span.
  std::optional<std::vector<Rat>> coords(const Mat& x) const;
  std::vector<SparseVec> canonical() const { return ech_.rref(); }

  /// Span of this basis followed by the other's.
  Subalg plus(const Subalg& other) const;

 private:
  int n_ = 0;
  std::vector<Mat> basis_;
  Echelon ech_{true};
};

/// Span of all [a, b] with a in x, b in y.
Subalg bracket_span(const Subalg& x, const Subalg& y);
bool is_closed(const Subalg& m);
/// [outer, inner] is contained in inner.
bool is_ideal(const Subalg& inner, const Subalg& outer);
bool is_abelian(const Subalg& m);

/// A linear functional on a subalgebra, stored by its values on the basis.
struct Char {
  Subalg domain;
  std::vector<Rat> values;

  /// Throws InputError when y is outside the domain.
  Rat operator()(const Mat& y) const;
  /// Restriction to a subspace of the domain.
  Char restrict_to(const Subalg& sub) const;
};

/// y -> tr(e y) on the basis of m.
Char chi_of(const Mat& e, const Subalg& m);

/// True when chi vanishes on [m, m].
bool is_character(const Char& chi);

enum class Ambient { gl, sl };

/// Kernel of x -> [e, x] on gl_n, or on its trace-zero part.
Subalg centralizer(const Mat& e, Ambient ambient = Ambient::gl);

/// Basis of gl_n: E_11, E_12, ..., E_nn.
std::vector<Mat> gl_basis(int n);

/// Throws DomainError unless x^n = 0.
void require_nilpotent(const Mat& x);

/// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition jordan_type(const Mat& x);

/// Jordan chains of a nilpotent x: each chain lists v, xv, ..., x^{s-1}v with
/// x^s v = 0; the chains together form a basis of Q^n. Longest chains first.
std::vector<std::vector<std::vector<Rat>>> jordan_chains(const Mat& x);

struct Sl2Triple {
  Mat e, h, f;
};

/// Standard triple on each Jordan block, transported back to the standard
/// basis. Throws DomainError for zero or non-nilpotent e.
Sl2Triple sl2_complete(const Mat& e);

struct SubalgebraReport {
  bool m1_closed = false;
  bool m2_closed = false;   // m1 + k, when k is given
  bool m1_ideal = false;    // m1 is an ideal of m1 + k
  bool k_abelian = false;
  bool chi_character = false;  // chi vanishes on [m, m] for the largest algebra present
  bool all() const { return m1_closed && m2_closed && m1_ideal && k_abelian && chi_character; }
};

/// Closure and semidirect-product checks. Missing k or chi count as passing.
SubalgebraReport subalgebra_checks(const Subalg& m1, const std::optional<Subalg>& k,
                                   const std::optional<Char>& chi);

}  // namespace slodowy
