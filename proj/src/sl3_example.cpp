#include "slodowy/sl3_example.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/expr.hpp"
#include "slodowy/fixtures.hpp"
#include "slodowy/invariants.hpp"
#include "slodowy/linalg.hpp"

#include <map>
#include <sstream>

namespace slodowy {

namespace {

struct Setup {
  StageQuantum sq;
  Mat e;
  std::vector<std::string> k_names, m1_names;
  Partition mu, lam;
};

Setup load_setup(const nlohmann::json& fx) {
  const int n = fx.at("n").get<int>();
  std::vector<Mat> elems;
  std::vector<std::string> names;
  for (const auto& b : fx.at("basis")) {
    names.push_back(b.at("name").get<std::string>());
    elems.push_back(mat_from_entries(n, b.at("entries")));
  }
  LieBasis basis(elems, names);
  Setup s;
  s.k_names = fx.at("k").get<std::vector<std::string>>();
  s.m1_names = fx.at("m1").get<std::vector<std::string>>();
  s.e = mat_from_entries(n, fx.at("e"));
  s.mu = Partition(fx.at("stage").at("mu").get<std::vector<int>>());
  s.lam = Partition(fx.at("stage").at("lambda").get<std::vector<int>>());
  const int first_k = basis.size() - static_cast<int>(s.k_names.size() + s.m1_names.size());
  std::vector<Rat> kappa, eta;
  int pos = first_k;
  for (const auto& nm : s.k_names) {
    if (basis.index(nm) != pos++) throw InputError("fixture: k letters must precede the m1 letters at the end");
    kappa.push_back((s.e * basis.elem(basis.index(nm))).trace());
  }
  for (const auto& nm : s.m1_names) {
    if (basis.index(nm) != pos++) throw InputError("fixture: m1 letters must close the basis order");
    eta.push_back((s.e * basis.elem(basis.index(nm))).trace());
  }
  s.sq = make_quantum(std::move(basis), first_k, kappa, eta);
  return s;
}

PBWElem eval_pbw(const PBWAlgebra& A, const std::string& text, const std::map<std::string, PBWElem>& named) {
  const Expr ex = parse_expr(text);
  return eval_expr<PBWElem>(
      ex,
      [&](const std::string& v) {
        if (v == "hbar") return A.hbar();
        if (auto it = named.find(v); it != named.end()) return it->second;
        return A.letter(v);
      },
      [](const Rat& c) { return PBWElem::scalar(c); },
      [&](const PBWElem& a, const PBWElem& b) { return A.mul(a, b); });
}

PBWElem hbar_free(const PBWElem& u) {
  PBWElem out;
  for (const auto& [m, c] : u.terms())
    if (m.h == 0) out.add(m, c);
  return out;
}

class Index {
 public:
  SparseVec vec(const PBWElem& u, int block, int blocks) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [m, c] : u.terms()) {
      auto [it, fresh] = idx_.try_emplace(m, static_cast<int>(idx_.size()));
      (void)fresh;
      e.emplace_back(it->second * blocks + block, c);
    }
    return SparseVec(std::move(e));
  }

 private:
  std::map<Mono, int> idx_;
};

// Invariant u of the one-shot reduction with u = z mod hbar and u + extra
// m1-invariant in the first reduction. Returns nullopt when none exists; sets
// free_dim to the dimension of the solution set.
std::optional<PBWElem> nearest_invariant(const StageQuantum& sq, const PBWElem& z, const PBWElem& extra,
                                         std::size_t& free_dim) {
  const PBWAlgebra& A = *sq.alg;
  const ReductionCtx& c1 = *sq.first;
  const auto W = invariant_basis(*sq.oneshot, z.max_degree());
  const int blocks = 1 + c1.num_m();
  Index index;
  auto conditions = [&](const PBWElem& u, bool top) {
    SparseVec v = index.vec(top ? hbar_free(u) : PBWElem{}, 0, blocks);
    for (int y = 0; y < c1.num_m(); ++y) {
      const PBWElem br = ideal_reduce(A.commutator(A.letter(c1.first_m + y), u), c1);
      v = v + index.vec(br, y + 1, blocks);
    }
    return v;
  };
  std::vector<SparseVec> cols;
  for (const auto& w : W) cols.push_back(conditions(w, true));
  const SparseVec rhs = index.vec(hbar_free(z), 0, blocks) - conditions(extra, false);
  free_dim = kernel(cols).size();
  auto sol = solve(cols, rhs);
  if (!sol) return std::nullopt;
  PBWElem u;
  for (const auto& [i, c] : sol->entries()) u.axpy(c, W[i]);
  return u;
}

std::string letter_name(const PBWAlgebra& A, int k) { return k < 0 ? "-" : A.basis().name(k); }

}  // namespace

Report verify_sl3(const std::string& dir, int max_degree) {
  const auto fx = load_fixture("sl3.json", dir);
  Setup s = load_setup(fx);
  const StageQuantum& sq = s.sq;
  const PBWAlgebra& A = *sq.alg;
  if (max_degree < 0) max_degree = fx.value("max_degree", 8);
  Report rep;
  rep.subject = "sl3";

  {
    const StageData sd = build_stage(s.mu, s.lam);
    std::vector<Mat> kk, mm1;
    for (const auto& nm : s.k_names) kk.push_back(A.basis().elem(A.basis().index(nm)));
    for (const auto& nm : s.m1_names) mm1.push_back(A.basis().elem(A.basis().index(nm)));
    const Subalg k(3, kk), m1(3, mm1);
    const bool ok = s.e == sd.e2 && k.same_span(sd.k) && m1.same_span(sd.m1) && m1.plus(k).same_span(sd.m2);
    rep.add("fixture_matches_stage", ok, s.mu.str() + " < " + s.lam.str());
  }

  std::map<std::string, PBWElem> z;
  std::vector<std::string> order;
  for (const auto& [name, text] : fx.at("invariants").items()) {
    z[name] = eval_pbw(A, text.get<std::string>(), {});
    order.push_back(name);
  }
  std::map<std::string, PBWElem> lift;
  for (const auto& name : order) lift[name] = eval_pbw(A, fx.at("lifts").at(name).get<std::string>(), z);

  for (const auto& name : order) {
    const PBWElem r = ideal_reduce(z[name], *sq.oneshot);
    const int bad = first_non_invariant(r, *sq.oneshot);
    std::string detail;
    if (bad >= 0)
      detail = "[" + letter_name(A, bad) + ", " + name + "] = " +
               A.str(ideal_reduce(A.commutator(A.letter(bad), r), *sq.oneshot)) + " mod the ideal";
    rep.add(name + "_invariant", bad < 0, detail);
  }
  if (order.size() >= 2) {
    const PBWElem& a = z[order[0]];
    const PBWElem& b = z[order[1]];
    const PBWElem c = ideal_reduce(A.commutator(a, b), *sq.oneshot);
    rep.add(order[0] + "_" + order[1] + "_commute", c.is_zero(), c.is_zero() ? "" : A.str(c));
  }
  for (const auto& name : order) {
    const PhiResult ph = stage_phi_and_comoment(sq, lift[name]);
    rep.add("lift_" + name + "_m1_invariant", ph.first_invariant,
            ph.first_invariant ? "" : "fails for " + letter_name(A, ph.failing_letter));
    rep.add("lift_" + name + "_k_invariant", ph.k_invariant,
            ph.k_invariant || !ph.first_invariant ? "" : "fails for " + letter_name(A, ph.failing_letter));
    const bool maps = ph.well_defined && ph.image == ideal_reduce(z[name], *sq.oneshot);
    rep.add("phi_lift_" + name, maps, "phi = " + A.str(ph.image));
  }

  std::ostringstream dims;
  bool agree = true;
  for (int D = 0; D <= max_degree; ++D) {
    const int one = static_cast<int>(invariant_basis(*sq.oneshot, D).size());
    const int two = two_stage_dim(sq, D);
    agree = agree && one == two;
    dims << (D ? " " : "") << D << ":" << one << "/" << two;
  }
  rep.add("dims_agree_D<=" + std::to_string(max_degree), agree, "degree:one-shot/two-stage " + dims.str());

  // Diagnostics for failing formulas.
  std::map<std::string, PBWElem> fixed;
  for (const auto& name : order) {
    std::size_t free_dim = 0;
    const PBWElem extra = lift[name] - z[name];
    auto u = nearest_invariant(sq, z[name], extra, free_dim);
    if (!u) {
      rep.note(name + "_nearest_invariant", "none with the given lift term");
      continue;
    }
    fixed[name] = *u;
    if (*u == ideal_reduce(z[name], *sq.oneshot)) continue;
    rep.note(name + "_nearest_invariant", A.str(*u));
    rep.note(name + "_correction", A.str(*u - z[name]));
    rep.note(name + "_solution_freedom", std::to_string(free_dim));
    const PhiResult ph = stage_phi_and_comoment(sq, *u + extra);
    rep.note(name + "_corrected_lift",
             std::string(ph.first_invariant ? "m1-invariant" : "not m1-invariant") +
                 (ph.k_invariant ? ", k-invariant" : ", not k-invariant") +
                 (ph.image == *u ? ", phi maps it to the corrected invariant" : ", phi image differs"));
  }
  if (fixed.size() >= 2) {
    const PBWElem c = ideal_reduce(A.commutator(fixed[order[0]], fixed[order[1]]), *sq.oneshot);
    rep.note("corrected_commute", c.is_zero() ? "yes" : A.str(c));
  }
  return rep;
}

}  // namespace slodowy
