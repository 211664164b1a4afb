#pragma once

// Lie-Poisson structure on C[g*] for a matrix Lie algebra g and classical
// Hamiltonian reduction by a subalgebra m at a character chi.

#include "slodowy/pbw.hpp"
#include "slodowy/poly.hpp"

#include <vector>

namespace slodowy {

/// Coordinates x_b on g* for each basis element b, named like the basis.
/// {x_a, x_b} = x_[a,b].
class PoissonAlgebra {
 public:
  explicit PoissonAlgebra(LieBasis basis);

  const LieBasis& basis() const { return basis_; }
  const Vars& vars() const { return vars_; }
  Poly coord(int i) const { return Poly::var(vars_, i); }
  /// Linear function X -> tr(x X) for x in the span of the basis.
  Poly linear(const Mat& x) const;

  Poly bracket(const Poly& f, const Poly& g) const;

 private:
  LieBasis basis_;
  Vars vars_;
  std::vector<Poly> struct_;  // x_[a,b], row-major
};

Poly lp_bracket(const PoissonAlgebra& P, const Poly& f, const Poly& g);

/// m spanned by the basis letters from first_m on, with chi on them.
struct PoissonCtx {
  const PoissonAlgebra* alg = nullptr;
  int first_m = 0;
  std::vector<Rat> chi;

  /// Throws InputError unless m is closed and chi vanishes on [m, m].
  PoissonCtx(const PoissonAlgebra& algebra, int first_m_letter, std::vector<Rat> chi_values);
  int num_m() const { return static_cast<int>(chi.size()); }
};

/// Substitutes chi(y) for every m-coordinate x_y.
Poly reduce_mod_ichi(const Poly& f, const PoissonCtx& ctx);

/// First m-letter y with {x_y, f} not in I_chi, or -1.
int first_non_invariant(const Poly& f, const PoissonCtx& ctx);
inline bool is_invariant(const Poly& f, const PoissonCtx& ctx) { return first_non_invariant(f, ctx) < 0; }

/// reduce({f, g}); throws DomainError naming the failing m-letter when an
/// argument is not invariant.
Poly reduced_bracket(const Poly& f, const Poly& g, const PoissonCtx& ctx);

/// A cross-section: section[k] is the value of the k-th non-m coordinate on
/// the section, a polynomial in the section parameters.
struct Section {
  Vars params;
  std::vector<Poly> values;
};

/// Section from a matrix family X(params): coordinate x_b takes tr(b X).
Section section_from_matrix(const PoissonCtx& ctx, const Vars& params, const std::vector<std::vector<Poly>>& X);

/// Restriction of an element of C[g*]/I_chi to the section.
Poly restrict_to_section(const Poly& f, const PoissonCtx& ctx, const Section& s);

/// Invariant polynomial in the non-m coordinates, of degree <= bound, whose
/// restriction to the section is target. Throws BoundedSearchFailure when
/// none exists at that bound. Column assembly runs under OpenMP.
Poly invariant_lift(const Poly& target, const Section& s, const PoissonCtx& ctx, int bound);
Poly invariant_lift_serial(const Poly& target, const Section& s, const PoissonCtx& ctx, int bound);

}  // namespace slodowy
