#include "slodowy/lie.hpp"

#include "slodowy/errors.hpp"

#include <algorithm>

namespace slodowy {

Subalg::Subalg(int n, const std::vector<Mat>& generators) : n_(n) {
  for (const auto& g : generators) {
    if (g.dim() != n) throw InputError("subalgebra generator has the wrong size");
    if (ech_.insert(g.vec())) basis_.push_back(g);
  }
  // Rebuild so that tracked combinations refer to basis_ positions only.
  Echelon fresh(true);
  for (const auto& b : basis_) fresh.insert(b.vec());
  ech_ = std::move(fresh);
}

bool Subalg::contains(const Mat& x) const { return ech_.contains(x.vec()); }

bool Subalg::contains(const Subalg& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Subalg::same_span(const Subalg& other) const {
  return n_ == other.n_ && dim() == other.dim() && contains(other);
}

std::optional<std::vector<Rat>> Subalg::coords(const Mat& x) const {
  auto c = ech_.express(x.vec());
  if (!c) return std::nullopt;
  std::vector<Rat> out(basis_.size(), Rat(0));
  for (const auto& [i, v] : c->entries()) out[i] = v;
  return out;
}

Subalg Subalg::plus(const Subalg& other) const {
  std::vector<Mat> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Subalg(n_ ? n_ : other.n_, gens);
}

Subalg bracket_span(const Subalg& x, const Subalg& y) {
  std::vector<Mat> gens;
  for (const auto& a : x.basis())
    for (const auto& b : y.basis()) gens.push_back(bracket(a, b));
  return Subalg(x.ambient(), gens);
}

bool is_closed(const Subalg& m) {
  const auto& b = m.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!m.contains(bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const Subalg& inner, const Subalg& outer) {
  for (const auto& a : outer.basis())
    for (const auto& b : inner.basis())
      if (!inner.contains(bracket(a, b))) return false;
  return true;
}

bool is_abelian(const Subalg& m) {
  const auto& b = m.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!bracket(b[i], b[j]).is_zero()) return false;
  return true;
}

Rat Char::operator()(const Mat& y) const {
  auto c = domain.coords(y);
  if (!c) throw InputError("character evaluated outside its domain");
  Rat s = 0;
  for (std::size_t k = 0; k < c->size(); ++k) s += (*c)[k] * values[k];
  return s;
}

Char Char::restrict_to(const Subalg& sub) const {
  Char out{sub, {}};
  for (const auto& b : sub.basis()) out.values.push_back((*this)(b));
  return out;
}

Char chi_of(const Mat& e, const Subalg& m) {
  Char out{m, {}};
  for (const auto& b : m.basis()) out.values.push_back(e.dim() ? trace_pair(e, b) : Rat(0));
  return out;
}

bool is_character(const Char& chi) {
  const auto& b = chi.domain.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Mat c = bracket(b[i], b[j]);
      auto co = chi.domain.coords(c);
      if (!co) return false;  // not closed, so not a Lie algebra character
      Rat s = 0;
      for (std::size_t k = 0; k < co->size(); ++k) s += (*co)[k] * chi.values[k];
      if (s != 0) return false;
    }
  return true;
}

std::vector<Mat> gl_basis(int n) {
  std::vector<Mat> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(Mat::unit(n, i, j));
  return out;
}

Subalg centralizer(const Mat& e, Ambient ambient) {
  const int n = e.dim();
  std::vector<SparseVec> cols;
  auto basis = gl_basis(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      SparseVec c = bracket(e, Mat::unit(n, i, j)).vec();
      if (ambient == Ambient::sl && i == j) c.axpy(Rat(1), SparseVec::unit(n * n));
      cols.push_back(std::move(c));
    }
  std::vector<Mat> gens;
  for (const auto& k : kernel(cols)) gens.push_back(Mat::from_vec(n, k));
  return Subalg(n, gens);
}

void require_nilpotent(const Mat& x) {
  if (!x.pow(x.dim()).is_zero()) throw DomainError("matrix is not nilpotent");
}

Partition jordan_type(const Mat& x) {
  require_nilpotent(x);
  const int n = x.dim();
  // ranks[k] = rank x^k; blocks of size >= k number ranks[k-1] - ranks[k].
  std::vector<int> ranks{n};
  Mat p = Mat::identity(n);
  while (ranks.back() > 0) {
    p = p * x;
    ranks.push_back(static_cast<int>(matrix_rank(p)));
  }
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<int> parts;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) parts.push_back(static_cast<int>(k) + 1);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

namespace {

SparseVec apply_sparse(const Mat& x, const SparseVec& v) {
  std::vector<SparseVec::Entry> out;
  for (const auto& [idx, c] : x.entries())
    if (Rat a = v.at(idx.second - 1); a != 0) out.emplace_back(idx.first - 1, c * a);
  return SparseVec(std::move(out));
}

std::vector<SparseVec> kernel_of_power(const Mat& x, int k) {
  const int n = x.dim();
  Mat p = x.pow(k);
  std::vector<SparseVec> cols(n);
  for (const auto& [idx, c] : p.entries()) cols[idx.second - 1].axpy(c, SparseVec::unit(idx.first - 1));
  return kernel(cols);
}

}  // namespace

std::vector<std::vector<std::vector<Rat>>> jordan_chains(const Mat& x) {
  require_nilpotent(x);
  const int n = x.dim();
  const int smax = jordan_type(x).part(1);
  struct Chain {
    SparseVec top;
    int len;
  };
  std::vector<Chain> chains;
  for (int s = smax; s >= 1; --s) {
    Echelon taken;
    for (const auto& v : kernel_of_power(x, s - 1)) taken.insert(v);
    for (const auto& ch : chains) {
      SparseVec w = ch.top;
      for (int t = 0; t < ch.len - s; ++t) w = apply_sparse(x, w);
      taken.insert(w);
    }
    for (const auto& w : kernel_of_power(x, s))
      if (taken.insert(w)) chains.push_back({w, s});
  }
  std::vector<std::vector<std::vector<Rat>>> out;
  for (const auto& ch : chains) {
    std::vector<std::vector<Rat>> seq;
    SparseVec w = ch.top;
    for (int t = 0; t < ch.len; ++t) {
      std::vector<Rat> dense(n, Rat(0));
      for (const auto& [i, c] : w.entries()) dense[i] = c;
      seq.push_back(std::move(dense));
      w = apply_sparse(x, w);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

Sl2Triple sl2_complete(const Mat& e) {
  if (e.is_zero()) throw DomainError("cannot complete the zero matrix to an sl2-triple");
  const int n = e.dim();
  auto chains = jordan_chains(e);
  // Basis b_1 = x^{s-1}v, ..., b_s = v per chain, so e b_{k+1} = b_k.
  std::vector<std::vector<Rat>> pcols;
  Mat ep(n), hp(n), fp(n);
  int base = 0;
  for (const auto& ch : chains) {
    const int s = static_cast<int>(ch.size());
    for (int k = s; k >= 1; --k) pcols.push_back(ch[k - 1]);
    for (int k = 1; k <= s; ++k) {
      hp.set(base + k, base + k, Rat(s + 1 - 2 * k));
      if (k < s) {
        ep.set(base + k, base + k + 1, Rat(1));
        fp.set(base + k + 1, base + k, Rat(k * (s - k)));
      }
    }
    base += s;
  }
  std::vector<std::vector<Rat>> prow(n, std::vector<Rat>(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) prow[r][c] = pcols[c][r];
  auto pinv = inverse(prow);
  Mat P(n), Pi(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      P.set(r + 1, c + 1, prow[r][c]);
      Pi.set(r + 1, c + 1, pinv[r][c]);
    }
  Sl2Triple t{P * ep * Pi, P * hp * Pi, P * fp * Pi};
  if (!(t.e == e)) throw InternalError("Jordan basis does not reproduce e");
  return t;
}

SubalgebraReport subalgebra_checks(const Subalg& m1, const std::optional<Subalg>& k,
                                   const std::optional<Char>& chi) {
  SubalgebraReport r;
  r.m1_closed = is_closed(m1);
  if (k) {
    Subalg m2 = m1.plus(*k);
    r.m2_closed = is_closed(m2);
    r.m1_ideal = is_ideal(m1, m2);
    r.k_abelian = is_abelian(*k);
  } else {
    r.m2_closed = r.m1_ideal = r.k_abelian = true;
  }
  r.chi_character = chi ? is_character(*chi) : true;
  return r;
}

}  // namespace slodowy
