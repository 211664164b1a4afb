#include "slodowy/pbw.hpp"

#include "slodowy/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <sstream>

namespace slodowy {

PBWElem PBWElem::scalar(const Rat& c, int hpow) { return monomial(Mono{{}, hpow}, c); }

PBWElem PBWElem::monomial(Mono m, const Rat& c) {
  PBWElem u;
  if (c != 0) u.terms_.emplace(std::move(m), c);
  return u;
}

void PBWElem::add(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PBWElem::axpy(const Rat& c, const PBWElem& o) {
  if (c == 0) return;
  for (const auto& [m, v] : o.terms_) add(m, c * v);
}

PBWElem PBWElem::operator+(const PBWElem& o) const {
  PBWElem r = *this;
  r.axpy(1, o);
  return r;
}

PBWElem PBWElem::operator-(const PBWElem& o) const {
  PBWElem r = *this;
  r.axpy(-1, o);
  return r;
}

PBWElem PBWElem::operator*(const Rat& c) const {
  PBWElem r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

PBWElem PBWElem::times_hbar(int k) const {
  PBWElem r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(Mono{m.w, m.h + k}, v);
  return r;
}

int PBWElem::max_degree() const {
  int d = -1;
  for (const auto& [m, v] : terms_) d = std::max(d, m.degree());
  return d;
}

PBWElem PBWElem::component(int d) const {
  PBWElem r;
  for (const auto& [m, v] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, v);
  return r;
}

LieBasis::LieBasis(std::vector<Mat> elements, std::vector<std::string> names)
    : elems_(std::move(elements)), names_(std::move(names)) {
  if (elems_.empty()) throw InputError("empty Lie basis");
  if (names_.size() != elems_.size()) throw InputError("one name per basis element required");
  n_ = elems_[0].dim();
  span_ = Subalg(n_, elems_);
  if (span_.dim() != size()) throw InputError("Lie basis elements are linearly dependent");
  struct_.resize(static_cast<std::size_t>(size()) * size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      auto c = span_.coords(slodowy::bracket(elems_[i], elems_[j]));
      if (!c) throw InputError("Lie basis span is not closed under brackets");
      for (int k = 0; k < size(); ++k)
        if ((*c)[k] != 0) struct_[i * size() + j].emplace_back(k, (*c)[k]);
    }
}

int LieBasis::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown basis element: " + name);
}

std::vector<std::pair<int, Rat>> LieBasis::coords(const Mat& x) const {
  auto c = span_.coords(x);
  if (!c) throw InputError("matrix lies outside the Lie algebra");
  std::vector<std::pair<int, Rat>> out;
  for (int k = 0; k < size(); ++k)
    if ((*c)[k] != 0) out.emplace_back(k, (*c)[k]);
  return out;
}

std::string default_name(const Mat& x, int fallback) {
  const auto& e = x.entries();
  if (e.size() == 1 && e.begin()->second == 1) {
    auto [i, j] = e.begin()->first;
    return "E" + std::to_string(i) + std::to_string(j);
  }
  if (e.size() == 2) {
    auto a = e.begin();
    auto b = std::next(a);
    if (a->first.first == a->first.second && b->first.first == b->first.second &&
        b->first.first == a->first.first + 1 && a->second == 1 && b->second == -1)
      return "h" + std::to_string(a->first.first);
  }
  return "x" + std::to_string(fallback);
}

namespace {

struct WordKey {
  std::vector<int> w;
  int x;
  bool operator==(const WordKey&) const = default;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const {
    std::size_t h = std::hash<int>()(k.x);
    for (int v : k.w) h = h * 1000003u ^ std::hash<int>()(v);
    return h;
  }
};

}  // namespace

struct PBWAlgebra::Cache {
  std::unordered_map<WordKey, PBWElem, WordKeyHash> map;
};

PBWAlgebra::PBWAlgebra(LieBasis basis) : basis_(std::move(basis)) {
  const int threads = std::max(1, omp_get_max_threads());
  for (int t = 0; t < threads; ++t) caches_.push_back(std::make_unique<Cache>());
}

PBWAlgebra::~PBWAlgebra() = default;

PBWElem PBWAlgebra::letter(int i) const {
  if (i < 0 || i >= basis_.size()) throw InputError("basis index out of range");
  return PBWElem::monomial(Mono{{i}, 0});
}

PBWElem PBWAlgebra::from_mat(const Mat& x) const {
  PBWElem u;
  for (const auto& [k, c] : basis_.coords(x)) u.add(Mono{{k}, 0}, c);
  return u;
}

const PBWElem& PBWAlgebra::word_times_letter(const std::vector<int>& w, int x) const {
  const int t = omp_get_thread_num();
  if (static_cast<std::size_t>(t) >= caches_.size())
    throw InternalError("more OpenMP threads than PBW caches; cap teams with thread_slots()");
  Cache& cache = *caches_[t];
  WordKey key{w, x};
  if (auto it = cache.map.find(key); it != cache.map.end()) return it->second;

  PBWElem out;
  if (w.empty() || w.back() <= x) {
    std::vector<int> v = w;
    v.push_back(x);
    out = PBWElem::monomial(Mono{std::move(v), 0});
  } else {
    // w' y x = (w' x) y + hbar w' [y, x]
    const int y = w.back();
    std::vector<int> wp(w.begin(), w.end() - 1);
    const PBWElem left = word_times_letter(wp, x);
    for (const auto& [m, c] : left.terms()) {
      const PBWElem& tail = word_times_letter(m.w, y);
      for (const auto& [m2, c2] : tail.terms()) out.add(Mono{m2.w, m2.h + m.h}, c * c2);
    }
    for (const auto& [z, cz] : basis_.bracket(y, x)) {
      const PBWElem& part = word_times_letter(wp, z);
      for (const auto& [m2, c2] : part.terms()) out.add(Mono{m2.w, m2.h + 1}, cz * c2);
    }
  }
  return cache.map.emplace(std::move(key), std::move(out)).first->second;
}

PBWElem PBWAlgebra::mul(const PBWElem& a, const PBWElem& b) const {
  PBWElem out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      // multiply the sorted word ma.w by the letters of mb.w one at a time
      PBWElem cur = PBWElem::monomial(Mono{ma.w, ma.h + mb.h}, ca * cb);
      for (int x : mb.w) {
        PBWElem next;
        for (const auto& [m, c] : cur.terms()) {
          const PBWElem& p = word_times_letter(m.w, x);
          for (const auto& [m2, c2] : p.terms()) next.add(Mono{m2.w, m2.h + m.h}, c * c2);
        }
        cur = std::move(next);
      }
      out.axpy(1, cur);
    }
  return out;
}

PBWElem PBWAlgebra::commutator(const PBWElem& a, const PBWElem& b) const { return mul(a, b) - mul(b, a); }

PBWElem PBWAlgebra::word(const std::vector<std::string>& names, const Rat& c, int h) const {
  PBWElem u = PBWElem::scalar(c, h);
  for (const auto& nm : names) u = mul(u, letter(nm));
  return u;
}

std::string PBWAlgebra::str(const PBWElem& u) const {
  if (u.is_zero()) return "0";
  // highest degree first; output parses back with parse_expr
  std::vector<std::pair<const Mono*, const Rat*>> terms;
  for (const auto& [m, c] : u.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first->degree() > b.first->degree(); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat a = *c;
    if (a < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < m->w.size();) {
      std::size_t e = k;
      while (e < m->w.size() && m->w[e] == m->w[k]) ++e;
      factors.push_back(basis_.name(m->w[k]) + (e - k > 1 ? "^" + std::to_string(e - k) : ""));
      k = e;
    }
    if (m->h == 1) factors.push_back("hbar");
    if (m->h > 1) factors.push_back("hbar^" + std::to_string(m->h));
    const bool unit = a == 1 && !factors.empty();
    if (!unit) os << to_string(a);
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k || !unit ? "*" : "") << factors[k];
    first = false;
  }
  return os.str();
}

PBWElem pbw_mul_reference(const LieBasis& basis, const PBWElem& a, const PBWElem& b) {
  PBWElem out;
  std::function<void(std::vector<int>, int, Rat)> straighten = [&](std::vector<int> w, int h, Rat c) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p] > w[p + 1]) {
        const int x = w[p], y = w[p + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        straighten(swapped, h, c);
        for (const auto& [z, cz] : basis.bracket(x, y)) {
          std::vector<int> v(w.begin(), w.begin() + p);
          v.push_back(z);
          v.insert(v.end(), w.begin() + p + 2, w.end());
          straighten(v, h + 1, c * cz);
        }
        return;
      }
    out.add(Mono{w, h}, c);
  };
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> w = ma.w;
      w.insert(w.end(), mb.w.begin(), mb.w.end());
      straighten(w, ma.h + mb.h, ca * cb);
    }
  return out;
}

}  // namespace slodowy
