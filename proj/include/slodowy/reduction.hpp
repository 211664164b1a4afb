#pragma once

#include "slodowy/lie.hpp"
#include "slodowy/pbw.hpp"

#include <vector>

namespace slodowy {

/// Quotient U_hbar(g) / U_hbar(g) m_chi, where m_chi is spanned by y - chi(y) hbar.
/// The m-letters must form a suffix of the basis order, so every PBW monomial
/// ends with its m-letters and the quotient has the monomials over the
/// remaining letters as a basis.
struct ReductionCtx {
  const PBWAlgebra* alg = nullptr;
  int first_m = 0;            // basis indices >= first_m span m
  std::vector<Rat> chi;       // chi on basis letters first_m, first_m+1, ...

  /// Throws InputError unless the letters from first_m on are closed and chi
  /// vanishes on their brackets.
  ReductionCtx(const PBWAlgebra& algebra, int first_m_letter, std::vector<Rat> chi_values);

  int num_m() const { return static_cast<int>(chi.size()); }
  bool is_m_letter(int k) const { return k >= first_m; }
  Subalg m() const;
};

/// Canonical representative: every trailing m-letter y becomes chi(y) hbar.
PBWElem ideal_reduce(const PBWElem& u, const ReductionCtx& ctx);

/// True iff [a, u] lies in the left ideal, for a in the span of the m-letters.
bool ad_invariant(const Mat& a, const PBWElem& u, const ReductionCtx& ctx);

/// ad_invariant for every m-letter; returns the first failing letter or -1.
int first_non_invariant(const PBWElem& u, const ReductionCtx& ctx);

}  // namespace slodowy
