#include "slodowy/stages.hpp"

#include "slodowy/errors.hpp"

namespace slodowy {

Mat construct_e2(const Filling& d, const CoverRows& r) {
  const int rows = d.pyramid().rows();
  if (r.receiver < 1 || r.donor > rows || r.receiver >= r.donor) throw InputError("cover rows out of range");
  Mat e2 = nilpotent_of(d);
  const int len_j = d.pyramid().shape().part(r.donor);
  for (int t = 0; t < len_j; ++t) {
    const int l = d.label_at(r.donor, t);
    if (auto k = d.label_at_col(r.receiver, d.col(l))) e2.set(*k, l, Rat(1));
  }
  return e2;
}

KM2 construct_k_m2(const Filling& d, const CoverRows& r, const Subalg& m1) {
  const int n = d.size();
  KM2 out;
  for (int m = 1; m <= r.donor - r.receiver; ++m) {
    Mat Em(n);
    for (int lo = r.receiver; lo + m <= r.donor; ++lo)
      for (int t = 0; t < d.pyramid().shape().part(lo); ++t) {
        const int k = d.label_at(lo, t);
        if (auto l = d.label_at_col(lo + m, d.col(k))) Em.set(*l, k, Rat(1));
      }
    out.E.push_back(Em);
  }
  out.k = Subalg(n, out.E);
  out.m2 = m1.plus(out.k);
  return out;
}

namespace {

// Diagonal of h2' split as fixed + K * count.
struct H2Parts {
  std::vector<Rat> fixed;
  std::vector<int> count;
};

H2Parts h2prime_parts(const Filling& d, const CoverRows& r, const Partition& lam) {
  const int n = d.size();
  const int i = r.receiver, j = r.donor;
  const auto& mu = d.pyramid().shape();
  std::vector<Rat> fixed(n + 1, Rat(0));
  std::vector<int> k_count(n + 1, 0);  // multiplicity of K on each diagonal slot
  for (int s = 1; s <= mu.length(); ++s) {
    if (s == i || s == j) continue;
    for (int t = 0; t < lam.part(s); ++t) fixed[d.label_at(s, t)] = lam.part(s) - 1 - 2 * t;
  }
  const int first_i = d.pyramid().first_col(i);
  for (int t = 0; t <= lam.part(i); ++t) {
    const int c = first_i + 2 * t;
    const Rat coeff = lam.part(i) - 2 * t;
    if (t < mu.part(i)) {
      const int l = d.label_at(i, t);
      fixed[l] = coeff;
      k_count[l] = 1;
    }
    if (auto m = d.label_at_col(j, c - 2)) {
      fixed[*m] = coeff;
      k_count[*m] = 1;
    }
  }
  return {fixed, k_count};
}

Mat h2_with(const H2Parts& p, const Rat& K) {
  std::vector<Rat> diag;
  for (std::size_t l = 1; l < p.fixed.size(); ++l) diag.push_back(p.fixed[l] + K * p.count[l]);
  return Mat::diagonal(diag);
}

}  // namespace

std::pair<Mat, Rat> construct_h2prime(const Filling& d, const CoverRows& r, const Partition& lam) {
  const H2Parts p = h2prime_parts(d, r, lam);
  Rat total = 0;
  int ks = 0;
  for (std::size_t l = 1; l < p.fixed.size(); ++l) {
    total += p.fixed[l];
    ks += p.count[l];
  }
  if (ks == 0) throw InternalError("h2': trace-fixing constant does not occur");
  const Rat K = -total / ks;
  return {h2_with(p, K), K};
}

std::vector<Rat> good_h2_constants(const StageData& sd, int bound) {
  const H2Parts p = h2prime_parts(sd.filling, sd.rows, sd.lam);
  std::vector<Rat> out;
  for (int K = -bound; K <= bound; ++K)
    if (check_good(grade_from_semisimple(h2_with(p, Rat(K))), sd.e2).all()) out.emplace_back(K);
  return out;
}

std::vector<EKElement> ek_basis(const Partition& shape) {
  const Filling f = standard_filling(right_aligned(shape));
  const int n = shape.size();
  std::vector<EKElement> out;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.length(); ++j) {
      const int mi = shape.part(i), mj = shape.part(j);
      const int r0 = i <= j ? 0 : mj - mi;
      for (int r = r0; r < mj; ++r) {
        Mat m(n);
        for (int t = 1; t <= mi; ++t)
          if (t + r >= 1 && t + r <= mj) m.set(f.label_from_right(j, t + r), f.label_from_right(i, t), Rat(1));
        out.push_back({i, j, r, m});
      }
    }
  return out;
}

std::vector<std::vector<std::vector<Rat>>> jordan_strings_e2(const Filling& d, const CoverRows& r) {
  const int n = d.size();
  const auto& mu = d.pyramid().shape();
  const int i = r.receiver, j = r.donor;
  const int mi = mu.part(i), mj = mu.part(j);
  auto b = [&](int row, int t) {
    std::vector<Rat> v(n, Rat(0));
    if (t >= 1 && t <= mu.part(row)) v[d.label_from_right(row, t) - 1] = 1;
    return v;
  };
  auto comb = [&](const Rat& a, std::vector<Rat> x, const Rat& c, const std::vector<Rat>& y) {
    for (int k = 0; k < n; ++k) x[k] = a * x[k] + c * y[k];
    return x;
  };
  std::vector<std::vector<std::vector<Rat>>> out;
  // chain of length lam_i: k b_{i,k} + b_{j,k+1} for k < mu_j, then mu_j b_{i,k}
  std::vector<std::vector<Rat>> a;
  for (int k = 0; k < mj; ++k) a.push_back(comb(Rat(k), b(i, k), Rat(1), b(j, k + 1)));
  for (int k = mj; k <= mi; ++k) a.push_back(comb(Rat(mj), b(i, k), Rat(0), b(i, k)));
  out.push_back(a);
  // chain of length lam_j: (mu_j - k) b_{i,k} - b_{j,k+1}, k = 1 .. mu_j - 1
  std::vector<std::vector<Rat>> c;
  for (int k = 1; k < mj; ++k) c.push_back(comb(Rat(mj - k), b(i, k), Rat(-1), b(j, k + 1)));
  if (!c.empty()) out.push_back(c);
  for (int s = 1; s <= mu.length(); ++s) {
    if (s == i || s == j) continue;
    std::vector<std::vector<Rat>> row;
    for (int t = 1; t <= mu.part(s); ++t) row.push_back(b(s, t));
    out.push_back(row);
  }
  return out;
}

StageData build_stage(const Partition& mu, const Partition& lam) {
  StageData sd;
  sd.mu = mu;
  sd.lam = lam;
  sd.rows = cover_rows(mu, lam);
  sd.pyramid = right_aligned(mu);
  sd.filling = standard_filling(sd.pyramid);
  const int n = mu.size();
  sd.e1 = nilpotent_of(sd.filling);
  sd.e2 = construct_e2(sd.filling, sd.rows);
  auto [h, K] = construct_h2prime(sd.filling, sd.rows, lam);
  sd.h2prime = h;
  sd.K = K;
  const Grading g1 = grade_from_semisimple(pyramid_semisimple(sd.filling));
  sd.m1 = premet_subalgebra(g1, sd.e1, Subalg(n, {}));
  auto km = construct_k_m2(sd.filling, sd.rows, sd.m1);
  sd.E = km.E;
  sd.k = km.k;
  sd.m2 = km.m2;
  sd.chi1 = chi_of(sd.e1, sd.m1);
  sd.chi2 = chi_of(sd.e2, sd.m2);
  sd.kappa = sd.chi2.restrict_to(sd.k);
  return sd;
}

bool StageReport::all() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string StageReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name;
  return {};
}

StageReport verify_stage(const Partition& mu, const Partition& lam) {
  const StageData sd = build_stage(mu, lam);
  StageReport rep{mu, lam, {}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const Partition jt = jordan_type(sd.e2);
  add("jordan_type", jt == lam, "jordan_type(e2) = " + jt.str());

  auto sub = subalgebra_checks(sd.m1, sd.k, std::nullopt);
  add("SR1", sub.m1_closed && sub.m2_closed && sub.m1_ideal && sub.k_abelian &&
                 sd.m1.dim() + sd.k.dim() == sd.m2.dim());

  bool restricts = true;
  for (std::size_t a = 0; a < sd.m1.basis().size(); ++a)
    if (sd.chi2(sd.m1.basis()[a]) != sd.chi1.values[a]) restricts = false;
  add("SR2", is_character(sd.chi2) && restricts);

  bool annihilates = true;
  for (const auto& xi : sd.k.basis())
    for (const auto& y : sd.m1.basis())
      if (sd.chi1(bracket(xi, y)) != 0) annihilates = false;
  add("SR3", annihilates);

  auto pr = premet_report(sd.m2, sd.e2);
  add("chi1", pr.chi1);
  add("chi2", pr.chi2, "dim m2 = " + std::to_string(pr.dim_m) + ", half orbit dim = " +
                            std::to_string(pr.half_orbit_dim));
  add("chi3", pr.chi3);
  add("chi4", pr.chi4);
  add("m2_derived_in_m1", sd.m1.contains(bracket_span(sd.m2, sd.m2)));

  add("h2_trace_zero", sd.h2prime.trace() == 0);
  add("h2_bracket", bracket(sd.h2prime, sd.e2) == sd.e2 * Rat(2));
  auto good = check_good(grade_from_semisimple(sd.h2prime), sd.e2);
  std::string detail = "K = " + to_string(sd.K);
  if (!good.all()) {
    detail += "; " + good.witness + "integer K giving a good grading:";
    for (const auto& K : good_h2_constants(sd, 2 * mu.size())) detail += " " + to_string(K);
  }
  add("h2_good", good.all(), detail);
  bool preserves = true;
  for (const auto& y : sd.m1.basis())
    if (!sd.m1.contains(bracket(sd.h2prime, y))) preserves = false;
  add("h2_preserves_m1", preserves);
  return rep;
}

}  // namespace slodowy
