#pragma once

// The hbar-extended enveloping algebra U_hbar(g) of a matrix Lie algebra g,
// realized on sorted (PBW) monomials over a fixed ordered basis of g.
// Relation: x y - y x = [x, y] hbar, with hbar central.

#include "slodowy/lie.hpp"
#include "slodowy/matrix.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace slodowy {

/// Sorted word of basis indices times hbar^h.
struct Mono {
  std::vector<int> w;
  int h = 0;
  int degree() const { return static_cast<int>(w.size()) + h; }
  auto operator<=>(const Mono&) const = default;
};

/// Rational combination of PBW monomials.
class PBWElem {
 public:
  using Terms = std::map<Mono, Rat>;

  PBWElem() = default;
  static PBWElem scalar(const Rat& c, int hpow = 0);
  static PBWElem monomial(Mono m, const Rat& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Mono& m, const Rat& c);
  void axpy(const Rat& c, const PBWElem& o);
  PBWElem operator+(const PBWElem& o) const;
  PBWElem operator-(const PBWElem& o) const;
  PBWElem operator*(const Rat& c) const;
  PBWElem times_hbar(int k = 1) const;
  bool operator==(const PBWElem&) const = default;

  /// Largest total degree (letters plus hbar power); -1 for zero.
  int max_degree() const;
  /// Part of total degree exactly d.
  PBWElem component(int d) const;

 private:
  Terms terms_;
};

/// Ordered basis of a Lie subalgebra of gl_n with structure constants.
class LieBasis {
 public:
  LieBasis() = default;
  /// Throws InputError unless the elements are independent and closed under brackets.
  LieBasis(std::vector<Mat> elements, std::vector<std::string> names);

  int size() const { return static_cast<int>(elems_.size()); }
  int n() const { return n_; }
  const Mat& elem(int i) const { return elems_[i]; }
  const std::vector<Mat>& elems() const { return elems_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a named basis element; throws InputError when unknown.
  int index(const std::string& name) const;
  /// Coordinates of [b_i, b_j].
  const std::vector<std::pair<int, Rat>>& bracket(int i, int j) const { return struct_[i * size() + j]; }
  /// Coordinates of x in the basis; throws InputError when x is outside the span.
  std::vector<std::pair<int, Rat>> coords(const Mat& x) const;

 private:
  int n_ = 0;
  std::vector<Mat> elems_;
  std::vector<std::string> names_;
  Subalg span_;
  std::vector<std::vector<std::pair<int, Rat>>> struct_;
};

/// "E12" for an elementary matrix, "h1" for E_11 - E_22, otherwise "x<fallback>".
std::string default_name(const Mat& x, int fallback);

/// U_hbar over a LieBasis. Products are memoized in one cache per OpenMP
/// thread, so mul() may be called from inside a parallel region.
class PBWAlgebra {
 public:
  explicit PBWAlgebra(LieBasis basis);
  ~PBWAlgebra();
  PBWAlgebra(const PBWAlgebra&) = delete;
  PBWAlgebra& operator=(const PBWAlgebra&) = delete;

  const LieBasis& basis() const { return basis_; }
  PBWElem one() const { return PBWElem::scalar(1); }
  PBWElem hbar() const { return PBWElem::scalar(1, 1); }
  PBWElem letter(int i) const;
  PBWElem letter(const std::string& name) const { return letter(basis_.index(name)); }
  /// Linear element for a matrix in the span of the basis.
  PBWElem from_mat(const Mat& x) const;

  PBWElem mul(const PBWElem& a, const PBWElem& b) const;
  PBWElem commutator(const PBWElem& a, const PBWElem& b) const;
  /// Product of named letters in the given order, times c hbar^h.
  PBWElem word(const std::vector<std::string>& names, const Rat& c = 1, int h = 0) const;

  std::string str(const PBWElem& u) const;

  /// Upper bound on the team size of parallel regions that call mul().
  int thread_slots() const { return static_cast<int>(caches_.size()); }

 private:
  struct Cache;
  // sorted word times one letter, without hbar bookkeeping
  const PBWElem& word_times_letter(const std::vector<int>& w, int x) const;
  LieBasis basis_;
  std::vector<std::unique_ptr<Cache>> caches_;  // one per OpenMP thread
};

/// Naive reference product: straightens the concatenated word by repeatedly
/// swapping the leftmost out-of-order adjacent pair. Used to test mul().
PBWElem pbw_mul_reference(const LieBasis& basis, const PBWElem& a, const PBWElem& b);

}  // namespace slodowy
