#include "slodowy/invariants.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/linalg.hpp"

#include <algorithm>
#include <omp.h>
#include <random>

namespace slodowy {

namespace {

void words(int letters, int len, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < letters; ++x) {
    cur.push_back(x);
    words(letters, len, x, cur, out);
    cur.pop_back();
  }
}

// Stable indices for monomials met while assembling a linear system.
class MonoIndex {
 public:
  int operator()(const Mono& m) {
    auto [it, fresh] = idx_.try_emplace(m, static_cast<int>(idx_.size()));
    (void)fresh;
    return it->second;
  }
  SparseVec vec(const PBWElem& u, int block = 0, int blocks = 1) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [m, c] : u.terms()) e.emplace_back((*this)(m) * blocks + block, c);
    return SparseVec(std::move(e));
  }
  int size() const { return static_cast<int>(idx_.size()); }

 private:
  std::map<Mono, int> idx_;
};

std::vector<PBWElem> invariants_impl(const ReductionCtx& ctx, int degree, std::size_t max_columns,
                                     bool parallel) {
  const auto monos = quotient_monomials(ctx.first_m, degree);
  if (monos.size() > max_columns)
    throw ResourceError("degree " + std::to_string(degree) + " needs " + std::to_string(monos.size()) +
                        " columns, budget is " + std::to_string(max_columns));
  const int nm = ctx.num_m();
  const int cols = static_cast<int>(monos.size());
  std::vector<std::vector<PBWElem>> images(monos.size(), std::vector<PBWElem>(nm));
  const PBWAlgebra& A = *ctx.alg;
  auto fill = [&](int c) {
    const PBWElem u = PBWElem::monomial(monos[c]);
    for (int y = 0; y < nm; ++y)
      images[c][y] = ideal_reduce(A.commutator(A.letter(ctx.first_m + y), u), ctx);
  };
  if (parallel) {
    const int team = std::min(omp_get_max_threads(), A.thread_slots());
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
    for (int c = 0; c < cols; ++c) fill(c);
  } else {
    for (int c = 0; c < cols; ++c) fill(c);
  }

  // Columns in descending monomial order and rows numbered backwards keep
  // fill-in low during elimination.
  MonoIndex index;
  std::vector<SparseVec> columns;
  columns.reserve(monos.size());
  for (int c = cols - 1; c >= 0; --c) {
    SparseVec col;
    for (int y = 0; y < nm; ++y) col = col + index.vec(images[c][y], y, nm);
    columns.push_back(std::move(col));
  }
  const int rows = index.size() * nm;
  for (auto& col : columns) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [r, v] : col.entries()) e.emplace_back(rows - 1 - r, v);
    col = SparseVec(std::move(e));
  }
  std::vector<PBWElem> out;
  for (const auto& k : kernel(columns)) {
    PBWElem u;
    for (const auto& [i, v] : k.entries()) u.add(monos[cols - 1 - i], v);
    out.push_back(std::move(u));
  }
  return out;
}

// S_D: reduce1(w Phi_K(xi)) for w in the degree D-1 invariants.
std::vector<PBWElem> shifted_ideal_part(const StageQuantum& sq, const std::vector<PBWElem>& w_prev) {
  std::vector<PBWElem> out;
  for (int k = 0; k < sq.num_k; ++k) {
    const PBWElem phi = comoment_K(sq, k);
    for (const auto& w : w_prev) out.push_back(ideal_reduce(sq.alg->mul(w, phi), *sq.first));
  }
  return out;
}

}  // namespace

std::vector<Mono> quotient_monomials(int num_letters, int degree) {
  std::vector<Mono> out;
  for (int len = 0; len <= degree; ++len) {
    std::vector<std::vector<int>> ws;
    std::vector<int> cur;
    words(num_letters, len, 0, cur, ws);
    for (auto& w : ws) out.push_back(Mono{std::move(w), degree - len});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PBWElem> invariant_basis(const ReductionCtx& ctx, int degree, std::size_t max_columns) {
  return invariants_impl(ctx, degree, max_columns, true);
}

std::vector<PBWElem> invariant_basis_serial(const ReductionCtx& ctx, int degree, std::size_t max_columns) {
  return invariants_impl(ctx, degree, max_columns, false);
}

std::vector<PBWElem> invariant_basis_upto(const ReductionCtx& ctx, int max_degree) {
  std::vector<PBWElem> out;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& u : invariant_basis(ctx, d)) out.push_back(std::move(u));
  return out;
}

StageQuantum make_stage_quantum(const StageData& sd) {
  const int n = sd.lam.size();
  std::vector<Mat> cands;
  for (int i = 1; i < n; ++i) cands.push_back(Mat::unit(n, i, i) - Mat::unit(n, i + 1, i + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cands.push_back(Mat::unit(n, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) cands.push_back(Mat::unit(n, i, j));

  Echelon span;
  for (const auto& y : sd.m2.basis()) span.insert(SparseVec(y.vec()));
  std::vector<Mat> elems;
  std::vector<std::string> names;
  for (const auto& x : cands)
    if (span.insert(SparseVec(x.vec()))) {
      elems.push_back(x);
      names.push_back(default_name(x, static_cast<int>(elems.size())));
    }
  const int first_k = static_cast<int>(elems.size());
  std::vector<Rat> kappa, eta;
  for (std::size_t m = 0; m < sd.E.size(); ++m) {
    elems.push_back(sd.E[m]);
    names.push_back("K" + std::to_string(m + 1));
    kappa.push_back(sd.chi2(sd.E[m]));
  }
  for (const auto& y : sd.m1.basis()) {
    elems.push_back(y);
    names.push_back(default_name(y, static_cast<int>(elems.size())));
    eta.push_back(sd.chi1(y));
  }
  if (static_cast<int>(elems.size()) != n * n - 1) throw InternalError("stage basis does not span sl_n");
  return make_quantum(LieBasis(elems, names), first_k, kappa, eta);
}

StageQuantum make_quantum(LieBasis basis, int first_k, std::vector<Rat> kappa, std::vector<Rat> eta) {
  StageQuantum sq;
  sq.first_k = first_k;
  sq.num_k = static_cast<int>(kappa.size());
  sq.kappa = kappa;
  std::vector<Rat> chi = kappa;
  chi.insert(chi.end(), eta.begin(), eta.end());
  sq.alg = std::make_unique<PBWAlgebra>(std::move(basis));
  sq.first = std::make_unique<ReductionCtx>(*sq.alg, first_k + sq.num_k, std::move(eta));
  sq.oneshot = std::make_unique<ReductionCtx>(*sq.alg, first_k, std::move(chi));
  return sq;
}

PBWElem comoment_K(const StageQuantum& sq, int k) {
  return sq.alg->letter(sq.first_k + k) - PBWElem::scalar(sq.kappa.at(k), 1);
}

int two_stage_dim(const StageQuantum& sq, int degree) {
  const auto w_prev = degree > 0 ? invariant_basis(*sq.first, degree - 1) : std::vector<PBWElem>{};
  const auto w_cur = invariant_basis(*sq.first, degree);
  const auto s_cur = shifted_ideal_part(sq, w_prev);
  const auto s_next = shifted_ideal_part(sq, w_cur);

  MonoIndex index;
  Echelon s_next_span;
  for (const auto& s : s_next) s_next_span.insert(index.vec(s));
  // columns: for each w, the reductions of [xi, w] modulo S_{D+1}, stacked over xi
  std::vector<SparseVec> columns;
  for (const auto& w : w_cur) {
    SparseVec col;
    for (int k = 0; k < sq.num_k; ++k) {
      const PBWElem br = ideal_reduce(sq.alg->commutator(sq.alg->letter(sq.first_k + k), w), *sq.first);
      SparseVec r = s_next_span.reduce(index.vec(br));
      std::vector<SparseVec::Entry> e;
      for (const auto& [i, c] : r.entries()) e.emplace_back(i * sq.num_k + k, c);
      col = col + SparseVec(std::move(e));
    }
    columns.push_back(std::move(col));
  }
  const std::size_t t_dim = kernel(columns).size();
  std::vector<SparseVec> s_vecs;
  for (const auto& s : s_cur) s_vecs.push_back(index.vec(s));
  return static_cast<int>(t_dim) - static_cast<int>(rank(s_vecs));
}

PhiResult stage_phi_and_comoment(const StageQuantum& sq, const PBWElem& u, unsigned seed) {
  PhiResult res;
  const ReductionCtx& c1 = *sq.first;
  const ReductionCtx& c2 = *sq.oneshot;
  const PBWAlgebra& A = *sq.alg;
  const PBWElem r1 = ideal_reduce(u, c1);
  res.failing_letter = first_non_invariant(r1, c1);
  res.first_invariant = res.failing_letter < 0;

  res.k_invariant = res.first_invariant;
  if (res.first_invariant) {
    for (int d = 0; d <= r1.max_degree() && res.k_invariant; ++d) {
      const PBWElem part = r1.component(d);
      if (part.is_zero()) continue;
      const auto s_next = shifted_ideal_part(sq, invariant_basis(c1, d));
      MonoIndex index;
      Echelon span;
      for (const auto& s : s_next) span.insert(index.vec(s));
      for (int k = 0; k < sq.num_k; ++k) {
        const PBWElem br = ideal_reduce(A.commutator(A.letter(sq.first_k + k), part), c1);
        if (!span.contains(index.vec(br))) {
          res.k_invariant = false;
          res.failing_letter = sq.first_k + k;
          break;
        }
      }
    }
  }

  res.image = ideal_reduce(u, c2);
  res.image_invariant = first_non_invariant(res.image, c2) < 0;

  // perturb by elements of both left ideals
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2), letter(0, A.basis().size() - 1);
  PBWElem v = u;
  for (int t = 0; t < 3; ++t) {
    const PBWElem a = A.letter(letter(rng)) * coef(rng) + PBWElem::scalar(coef(rng));
    const int y = c1.first_m + (letter(rng) % c1.num_m());
    v = v + A.mul(a, A.letter(y) - PBWElem::scalar(c1.chi[y - c1.first_m], 1));
    if (sq.num_k > 0) {
      const int k = letter(rng) % sq.num_k;
      v = v + A.mul(A.mul(a, r1), comoment_K(sq, k));
    }
  }
  res.well_defined = ideal_reduce(v, c2) == res.image;
  return res;
}

}  // namespace slodowy
