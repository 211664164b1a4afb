#include "slodowy/sl4_example.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/fixtures.hpp"
#include "slodowy/linalg.hpp"
#include "slodowy/poisson.hpp"
#include "slodowy/stages.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace slodowy {

namespace {

using Table = std::map<std::pair<int, int>, Poly>;  // (i, j) with i < j

struct Side {
  std::unique_ptr<PoissonAlgebra> alg;
  std::unique_ptr<PoissonCtx> ctx;
  Vars coords;
  std::vector<std::vector<Poly>> X;
  Section section;
  Mat e;
  std::vector<Mat> m;
  std::vector<Poly> lifts;
  std::vector<int> lift_degree;
  Table computed, paper;
};

std::vector<std::vector<Poly>> matrix_of(const Vars& v, const nlohmann::json& rows) {
  std::vector<std::vector<Poly>> X;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const auto& c : r) row.push_back(parse_poly(v, c.get<std::string>()));
    X.push_back(std::move(row));
  }
  return X;
}

Table table_of(const Vars& v, const nlohmann::json& t) {
  Table out;
  Poly probe(v);
  for (const auto& [key, val] : t.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("bracket key must be 'p,q': " + key);
    int i = probe.index(key.substr(0, comma)), j = probe.index(key.substr(comma + 1));
    if (i < 0 || j < 0 || i == j) throw InputError("bad bracket key " + key);
    Poly p = parse_poly(v, val.get<std::string>());
    if (i > j) {
      std::swap(i, j);
      p = p * Rat(-1);
    }
    out[{i, j}] = p;
  }
  return out;
}

Side load_side(const nlohmann::json& fx, int n, int max_degree) {
  Side s;
  s.e = mat_from_entries(n, fx.at("e"));
  for (const auto& y : fx.at("m")) s.m.push_back(mat_from_entries(n, y));
  const Subalg msub(n, s.m);
  if (msub.dim() != static_cast<int>(s.m.size())) throw InputError("fixture m generators are dependent");
  // complement of m in sl_n from h_i, then upper, then lower elementary matrices
  std::vector<Mat> cands;
  for (int i = 1; i < n; ++i) cands.push_back(Mat::unit(n, i, i) - Mat::unit(n, i + 1, i + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) cands.push_back(Mat::unit(n, i, j));
  Echelon span;
  for (const auto& y : s.m) span.insert(SparseVec(y.vec()));
  std::vector<Mat> elems;
  std::vector<std::string> names;
  for (const auto& x : cands)
    if (span.insert(SparseVec(x.vec()))) {
      elems.push_back(x);
      names.push_back(default_name(x, static_cast<int>(elems.size())));
    }
  const int first_m = static_cast<int>(elems.size());
  std::vector<Rat> chi;
  for (std::size_t k = 0; k < s.m.size(); ++k) {
    elems.push_back(s.m[k]);
    names.push_back("m" + std::to_string(k + 1));
    chi.push_back((s.e * s.m[k]).trace());
  }
  s.alg = std::make_unique<PoissonAlgebra>(LieBasis(elems, names));
  s.ctx = std::make_unique<PoissonCtx>(*s.alg, first_m, chi);
  s.coords = make_vars(fx.at("coords").get<std::vector<std::string>>());
  s.X = matrix_of(s.coords, fx.at("matrix"));
  s.section = section_from_matrix(*s.ctx, s.coords, s.X);
  s.paper = table_of(s.coords, fx.at("brackets"));

  for (int k = 0; k < static_cast<int>(s.coords->size()); ++k) {
    const Poly target = Poly::var(s.coords, k);
    std::optional<Poly> lift;
    int deg = 1;
    for (; deg <= max_degree && !lift; ++deg) {
      try {
        lift = invariant_lift(target, s.section, *s.ctx, deg);
      } catch (const BoundedSearchFailure&) {
      }
    }
    if (!lift) throw BoundedSearchFailure("no lift of " + (*s.coords)[k] + " up to degree " + std::to_string(max_degree));
    s.lifts.push_back(*lift);
    s.lift_degree.push_back(deg - 1);
  }
  const int nc = static_cast<int>(s.coords->size());
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j)
      s.computed[{i, j}] = restrict_to_section(reduced_bracket(s.lifts[i], s.lifts[j], *s.ctx), *s.ctx, s.section);
  return s;
}

Poly table_bracket(const Table& t, const Vars& v, const Poly& f, const Poly& g) {
  Poly r(v);
  for (const auto& [ij, p] : t) {
    if (p.is_zero()) continue;
    const auto [i, j] = ij;
    r = r + (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i)) * p;
  }
  return r;
}

Poly entry(const Table& t, int i, int j, const Vars& v) {
  auto it = t.find({i, j});
  return it == t.end() ? Poly(v) : it->second;
}

// Leading-term ratio paper / computed for the first entry where both are nonzero.
std::optional<Rat> find_scalar(const Side& s) {
  for (const auto& [ij, c] : s.computed) {
    const Poly p = entry(s.paper, ij.first, ij.second, s.coords);
    if (c.is_zero() || p.is_zero()) continue;
    const auto& [ex, cc] = *c.terms().begin();
    auto it = p.terms().find(ex);
    if (it == p.terms().end()) continue;
    return it->second / cc;
  }
  return std::nullopt;
}


std::vector<std::vector<Poly>> matmul(const std::vector<std::vector<Poly>>& A, const std::vector<std::vector<Poly>>& B,
                                      const Vars& v) {
  const std::size_t n = A.size();
  std::vector<std::vector<Poly>> C(n, std::vector<Poly>(n, Poly(v)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) C[i][j] = C[i][j] + A[i][k] * B[k][j];
  return C;
}

std::vector<Poly> power_traces(const std::vector<std::vector<Poly>>& X, const Vars& v) {
  std::vector<Poly> out;
  auto P = X;
  for (std::size_t k = 1; k <= X.size(); ++k) {
    Poly tr(v);
    for (std::size_t i = 0; i < X.size(); ++i) tr = tr + P[i][i];
    out.push_back(tr);
    if (k < X.size()) P = matmul(P, X, v);
  }
  return out;
}

// psi with phi(psi(w)) = w for every target coordinate w, from polynomials of
// degree <= bound in the source coordinates.
std::optional<std::vector<Poly>> invert(const std::vector<Poly>& phi, const Vars& src, const Vars& dst, int bound) {
  const auto monos = monomials_upto(static_cast<int>(src->size()), bound);
  std::vector<Poly> images;
  for (const auto& e : monos) images.push_back(Poly::monomial(src, e).substitute(phi));
  std::map<Poly::Exps, int> rows;
  auto vec = [&](const Poly& p) {
    std::vector<SparseVec::Entry> en;
    for (const auto& [ex, c] : p.terms()) {
      auto [it, fresh] = rows.try_emplace(ex, static_cast<int>(rows.size()));
      (void)fresh;
      en.emplace_back(it->second, c);
    }
    return SparseVec(std::move(en));
  };
  std::vector<SparseVec> cols;
  for (const auto& im : images) cols.push_back(vec(im));
  std::vector<Poly> psi;
  for (int w = 0; w < static_cast<int>(dst->size()); ++w) {
    auto sol = solve(cols, vec(Poly::var(dst, w)));
    if (!sol) return std::nullopt;
    Poly p(src);
    for (const auto& [i, c] : sol->entries()) p.add(monos[i], c);
    psi.push_back(std::move(p));
  }
  return psi;
}

std::string pair_name(const Vars& v, int i, int j) { return "{" + (*v)[i] + "," + (*v)[j] + "}"; }

}  // namespace

Report verify_sl4(const std::string& dir) {
  const auto fx = load_fixture("sl4.json", dir);
  const int n = fx.at("n").get<int>();
  const int max_deg = fx.value("max_lift_degree", 4);
  Report rep;
  rep.subject = "sl4";

  Side S = load_side(fx.at("slice"), n, max_deg);
  Side R = load_side(fx.at("reduced"), n, max_deg);

  if (fx.at("reduced").contains("stage")) {
    const auto& st = fx.at("reduced").at("stage");
    const StageData sd = build_stage(Partition(st.at("mu").get<std::vector<int>>()),
                                     Partition(st.at("lambda").get<std::vector<int>>()));
    const bool ok = R.e == sd.e2 && Subalg(n, R.m).same_span(sd.m2);
    rep.add("fixture_matches_stage", ok, sd.mu.str() + " < " + sd.lam.str());
  }

  for (Side* s : {&S, &R}) {
    bool level = true;
    for (std::size_t k = 0; k < s->m.size(); ++k) {
      Poly v(s->coords);
      for (const auto& [ij, c] : s->m[k].entries()) v = v + s->X[ij.second - 1][ij.first - 1] * c;
      level = level && v == Poly::constant(s->coords, s->ctx->chi[k]);
    }
    rep.add(std::string(s == &S ? "slice" : "reduced") + "_section_in_level_set", level);
  }
  for (Side* s : {&S, &R}) {
    std::ostringstream d;
    for (std::size_t k = 0; k < s->lifts.size(); ++k)
      d << (k ? " " : "") << (*s->coords)[k] << ":" << s->lift_degree[k];
    rep.note(std::string(s == &S ? "slice" : "reduced") + "_lift_degrees", d.str());
  }

  // one global scalar for both tables
  std::optional<Rat> scalar = find_scalar(S);
  if (!scalar) scalar = find_scalar(R);
  std::vector<std::string> mismatches;
  if (scalar) {
    for (Side* s : {&S, &R}) {
      const int nc = static_cast<int>(s->coords->size());
      for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) {
          const Poly c = entry(s->computed, i, j, s->coords) * *scalar;
          const Poly p = entry(s->paper, i, j, s->coords);
          if (!(c == p))
            mismatches.push_back(pair_name(s->coords, i, j) + ": computed " + c.str() + ", fixture " + p.str());
        }
    }
  }
  const bool tables_ok = scalar && mismatches.empty();
  std::string scal = scalar ? to_string(*scalar) : "none";
  rep.note("global_scalar", scal + (scalar && *scalar < 0 ? " (sign flipped)" : ""));
  std::string mm;
  for (const auto& m : mismatches) mm += (mm.empty() ? "" : "; ") + m;
  rep.add("bracket_tables_up_to_scalar", tables_ok, "fixture = " + scal + " * computed" + (mm.empty() ? "" : "; " + mm));
  for (Side* s : {&S, &R}) {
    const int nc = static_cast<int>(s->coords->size());
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j)
        rep.note((s == &S ? "slice " : "reduced ") + pair_name(s->coords, i, j), entry(s->computed, i, j, s->coords).str());
  }

  // phi
  std::vector<Poly> phi;
  for (const auto& name : *S.coords) phi.push_back(parse_poly(R.coords, fx.at("phi").at(name).get<std::string>()));
  auto psi = invert(phi, S.coords, R.coords, 3);
  bool iso = psi.has_value();
  if (iso)
    for (int k = 0; k < static_cast<int>(S.coords->size()); ++k)
      iso = iso && Poly::var(S.coords, k).substitute(phi).substitute(*psi) == Poly::var(S.coords, k);
  std::string psi_text;
  if (psi)
    for (std::size_t w = 0; w < psi->size(); ++w)
      psi_text += (w ? ", " : "") + (*R.coords)[w] + " = " + (*psi)[w].str();
  rep.add("phi_ring_isomorphism", iso, psi ? "inverse: " + psi_text : "no inverse of degree <= 3");

  auto compatible = [&](const Table& ts, const Table& tr, std::string& detail) {
    bool ok = true;
    const int nc = static_cast<int>(S.coords->size());
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j) {
        const Poly lhs = entry(ts, i, j, S.coords).substitute(phi);
        const Poly rhs = table_bracket(tr, R.coords, phi[i], phi[j]);
        if (!(lhs == rhs)) {
          ok = false;
          detail += (detail.empty() ? "" : "; ") + pair_name(S.coords, i, j) + ": phi of bracket " + lhs.str() +
                    ", bracket of phis " + rhs.str();
        }
      }
    return ok;
  };
  std::string d1, d2;
  rep.add("phi_preserves_computed_brackets", compatible(S.computed, R.computed, d1), d1);
  const bool paper_ok = compatible(S.paper, R.paper, d2);
  rep.note("phi_preserves_fixture_brackets", paper_ok ? "yes" : d2);

  const auto ts = power_traces(S.X, S.coords), tr = power_traces(R.X, R.coords);
  bool cp = true;
  for (std::size_t k = 0; k < ts.size(); ++k) cp = cp && ts[k].substitute(phi) == tr[k];
  rep.add("phi_preserves_characteristic_polynomial", cp);
  return rep;
}

}  // namespace slodowy
