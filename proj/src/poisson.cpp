#include "slodowy/poisson.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/linalg.hpp"

#include <map>
#include <omp.h>

namespace slodowy {

PoissonAlgebra::PoissonAlgebra(LieBasis basis) : basis_(std::move(basis)), vars_(make_vars(basis_.names())) {
  const int d = basis_.size();
  struct_.reserve(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Poly p(vars_);
      for (const auto& [z, c] : basis_.bracket(a, b)) p = p + coord(z) * c;
      struct_.push_back(std::move(p));
    }
}

Poly PoissonAlgebra::linear(const Mat& x) const {
  Poly p(vars_);
  for (const auto& [k, c] : basis_.coords(x)) p = p + coord(k) * c;
  return p;
}

Poly PoissonAlgebra::bracket(const Poly& f, const Poly& g) const {
  const int d = basis_.size();
  std::vector<Poly> df(d), dg(d);
  for (int a = 0; a < d; ++a) {
    df[a] = f.derivative(a);
    dg[a] = g.derivative(a);
  }
  Poly r(vars_);
  for (int a = 0; a < d; ++a) {
    if (df[a].is_zero()) continue;
    for (int b = 0; b < d; ++b) {
      if (dg[b].is_zero() || struct_[a * d + b].is_zero()) continue;
      r = r + df[a] * dg[b] * struct_[a * d + b];
    }
  }
  return r;
}

Poly lp_bracket(const PoissonAlgebra& P, const Poly& f, const Poly& g) { return P.bracket(f, g); }

PoissonCtx::PoissonCtx(const PoissonAlgebra& algebra, int first_m_letter, std::vector<Rat> chi_values)
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

Poly reduce_mod_ichi(const Poly& f, const PoissonCtx& ctx) {
  const Vars& v = ctx.alg->vars();
  std::vector<Poly> images;
  for (int k = 0; k < static_cast<int>(v->size()); ++k)
    images.push_back(k < ctx.first_m ? Poly::var(v, k) : Poly::constant(v, ctx.chi[k - ctx.first_m]));
  return f.rebase(v).substitute(images);
}

int first_non_invariant(const Poly& f, const PoissonCtx& ctx) {
  for (int y = ctx.first_m; y < ctx.alg->basis().size(); ++y)
    if (!reduce_mod_ichi(ctx.alg->bracket(ctx.alg->coord(y), f), ctx).is_zero()) return y;
  return -1;
}

Poly reduced_bracket(const Poly& f, const Poly& g, const PoissonCtx& ctx) {
  for (const Poly* p : {&f, &g}) {
    const int bad = first_non_invariant(*p, ctx);
    if (bad >= 0) throw DomainError("not invariant under " + ctx.alg->basis().name(bad) + ": " + p->str());
  }
  return reduce_mod_ichi(ctx.alg->bracket(f, g), ctx);
}

Section section_from_matrix(const PoissonCtx& ctx, const Vars& params, const std::vector<std::vector<Poly>>& X) {
  const auto& b = ctx.alg->basis();
  const int n = b.n();
  if (static_cast<int>(X.size()) != n) throw InputError("section matrix has the wrong size");
  Section s{params, {}};
  for (int k = 0; k < ctx.first_m; ++k) {
    Poly v(params);
    for (const auto& [ij, c] : b.elem(k).entries()) v = v + X.at(ij.second - 1).at(ij.first - 1).rebase(params) * c;
    s.values.push_back(std::move(v));
  }
  return s;
}

Poly restrict_to_section(const Poly& f, const PoissonCtx& ctx, const Section& s) {
  const Vars& v = ctx.alg->vars();
  std::vector<Poly> images;
  for (int k = 0; k < static_cast<int>(v->size()); ++k)
    images.push_back(k < ctx.first_m ? s.values[k] : Poly::constant(s.params, ctx.chi[k - ctx.first_m]));
  return f.rebase(v).substitute(images);
}

namespace {

Poly lift_impl(const Poly& target, const Section& s, const PoissonCtx& ctx, int bound, bool parallel) {
  const Vars& v = ctx.alg->vars();
  const int nv = static_cast<int>(v->size());
  std::vector<Poly::Exps> monos;
  for (auto e : monomials_upto(ctx.first_m, bound)) {
    e.resize(nv, 0);
    monos.push_back(std::move(e));
  }
  const int cols = static_cast<int>(monos.size());
  const int blocks = ctx.num_m() + 1;
  // images[c][0] = restriction, images[c][1 + y] = reduced bracket with x_y
  std::vector<std::vector<Poly>> images(cols, std::vector<Poly>(blocks));
  auto fill = [&](int c) {
    const Poly m = Poly::monomial(v, monos[c]);
    images[c][0] = restrict_to_section(m, ctx, s);
    for (int y = 0; y < ctx.num_m(); ++y)
      images[c][1 + y] = reduce_mod_ichi(ctx.alg->bracket(ctx.alg->coord(ctx.first_m + y), m), ctx);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int c = 0; c < cols; ++c) fill(c);
  } else {
    for (int c = 0; c < cols; ++c) fill(c);
  }

  std::map<std::pair<int, Poly::Exps>, int> rows;
  auto vec = [&](const Poly& p, int block) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [ex, c] : p.terms()) {
      auto [it, fresh] = rows.try_emplace({block, ex}, static_cast<int>(rows.size()));
      (void)fresh;
      e.emplace_back(it->second, c);
    }
    return SparseVec(std::move(e));
  };
  // descending degree keeps elimination sparse
  std::vector<SparseVec> columns;
  for (int c = cols - 1; c >= 0; --c) {
    SparseVec col;
    for (int b = 0; b < blocks; ++b) col = col + vec(images[c][b], b);
    columns.push_back(std::move(col));
  }
  const SparseVec rhs = vec(target.rebase(s.params), 0);
  auto sol = solve(columns, rhs);
  if (!sol)
    throw BoundedSearchFailure("no invariant lift of " + target.str() + " with degree <= " + std::to_string(bound));
  Poly out(v);
  for (const auto& [i, c] : sol->entries()) out.add(monos[cols - 1 - i], c);
  return out;
}

}  // namespace

Poly invariant_lift(const Poly& target, const Section& s, const PoissonCtx& ctx, int bound) {
  return lift_impl(target, s, ctx, bound, true);
}

Poly invariant_lift_serial(const Poly& target, const Section& s, const PoissonCtx& ctx, int bound) {
  return lift_impl(target, s, ctx, bound, false);
}

}  // namespace slodowy
