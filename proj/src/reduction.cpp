#include "slodowy/reduction.hpp"

#include "slodowy/errors.hpp"

namespace slodowy {

ReductionCtx::ReductionCtx(const PBWAlgebra& algebra, int first_m_letter, std::vector<Rat> chi_values)
    : alg(&algebra), first_m(first_m_letter), chi(std::move(chi_values)) {
  const auto& b = alg->basis();
  if (first_m + num_m() != b.size()) throw InputError("m-letters must be the last letters of the basis order");
  for (int x = first_m; x < b.size(); ++x)
    for (int y = first_m; y < b.size(); ++y) {
      Rat val = 0;
      for (const auto& [z, c] : b.bracket(x, y)) {
        if (z < first_m) throw InputError("m is not closed under brackets");
        val += c * chi[z - first_m];
      }
      if (val != 0) throw InputError("chi is not a character of m");
    }
}

Subalg ReductionCtx::m() const {
  std::vector<Mat> gens(alg->basis().elems().begin() + first_m, alg->basis().elems().end());
  return Subalg(alg->basis().n(), gens);
}

PBWElem ideal_reduce(const PBWElem& u, const ReductionCtx& ctx) {
  PBWElem out;
  for (const auto& [m, c] : u.terms()) {
    std::size_t keep = m.w.size();
    Rat coeff = c;
    while (keep > 0 && ctx.is_m_letter(m.w[keep - 1])) {
      coeff *= ctx.chi[m.w[keep - 1] - ctx.first_m];
      if (coeff == 0) break;
      --keep;
    }
    if (coeff == 0) continue;
    const int dropped = static_cast<int>(m.w.size() - keep);
    out.add(Mono{std::vector<int>(m.w.begin(), m.w.begin() + keep), m.h + dropped}, coeff);
  }
  return out;
}

bool ad_invariant(const Mat& a, const PBWElem& u, const ReductionCtx& ctx) {
  return ideal_reduce(ctx.alg->commutator(ctx.alg->from_mat(a), u), ctx).is_zero();
}

int first_non_invariant(const PBWElem& u, const ReductionCtx& ctx) {
  for (int y = ctx.first_m; y < ctx.alg->basis().size(); ++y)
    if (!ideal_reduce(ctx.alg->commutator(ctx.alg->letter(y), u), ctx).is_zero()) return y;
  return -1;
}

}  // namespace slodowy
