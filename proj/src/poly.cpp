#include "slodowy/poly.hpp"

#include "slodowy/errors.hpp"
#include "slodowy/expr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace slodowy {

Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Poly Poly::constant(Vars vars, const Rat& c) {
  Poly p(vars);
  p.add(Exps(p.nvars(), 0), c);
  return p;
}

Poly Poly::var(Vars vars, int i) {
  Poly p(vars);
  Exps e(p.nvars(), 0);
  e.at(i) = 1;
  p.add(e, 1);
  return p;
}

Poly Poly::var(Vars vars, const std::string& name) {
  Poly p(vars);
  const int i = p.index(name);
  if (i < 0) throw InputError("unknown variable " + name);
  return var(vars, i);
}

Poly Poly::monomial(Vars vars, Exps e, const Rat& c) {
  Poly p(vars);
  if (static_cast<int>(e.size()) != p.nvars()) throw InputError("exponent vector has the wrong length");
  p.add(e, c);
  return p;
}

int Poly::index(const std::string& name) const {
  if (!vars_) return -1;
  auto it = std::find(vars_->begin(), vars_->end(), name);
  return it == vars_->end() ? -1 : static_cast<int>(it - vars_->begin());
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add(const Exps& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (vars_ == o.vars_ || (vars_ && o.vars_ && *vars_ == *o.vars_)) return;
  if (!vars_ && o.is_zero()) return;
  throw InputError("polynomials over different variables");
}

Poly Poly::operator+(const Poly& o) const {
  if (!vars_) return o;
  check_same(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rat(-1); }

Poly Poly::operator*(const Rat& c) const {
  Poly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(vars_ ? vars_ : o.vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = constant(vars_, 1);
  for (int t = 0; t < k; ++t) r = r * *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  const bool same = vars_ == o.vars_ || (vars_ && o.vars_ && *vars_ == *o.vars_);
  return same && terms_ == o.terms_;
}

Poly Poly::derivative(int i) const {
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps d = e;
    --d[i];
    r.add(d, c * e[i]);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars()) throw InputError("substitution needs one image per variable");
  Vars target = images.empty() ? vars_ : images[0].vars();
  for (const auto& im : images)
    if (im.vars()) target = im.vars();
  Poly r(target);
  // cache powers per variable
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t k, int p) -> const Poly& {
    auto& pw = powers[k];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (static_cast<int>(pw.size()) <= p) pw.push_back(pw.back() * images[k].rebase(target));
    return pw[p];
  };
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) t = t * power(k, e[k]);
    r = r + t;
  }
  return r;
}

Poly Poly::rebase(const Vars& target) const {
  if (vars_ == target) return *this;
  Poly r(target);
  std::vector<int> map(nvars());
  for (int k = 0; k < nvars(); ++k) map[k] = r.index((*vars_)[k]);
  for (const auto& [e, c] : terms_) {
    Exps f(r.nvars(), 0);
    for (int k = 0; k < nvars(); ++k) {
      if (e[k] == 0) continue;
      if (map[k] < 0) throw InputError("variable " + (*vars_)[k] + " missing from the target list");
      f[map[k]] += e[k];
    }
    r.add(f, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Exps*, const Rat*>> ts;
  for (const auto& [e, c] : terms_) ts.emplace_back(&e, &c);
  auto deg = [](const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    const int da = deg(*a.first), db = deg(*b.first);
    return da != db ? da > db : *a.first > *b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rat a = *c;
    if (a < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    std::vector<std::string> f;
    for (int k = 0; k < nvars(); ++k)
      if ((*e)[k]) f.push_back((*vars_)[k] + ((*e)[k] > 1 ? "^" + std::to_string((*e)[k]) : ""));
    const bool unit = a == 1 && !f.empty();
    if (!unit) os << to_string(a);
    for (std::size_t k = 0; k < f.size(); ++k) os << (k || !unit ? "*" : "") << f[k];
    first = false;
  }
  return os.str();
}

Poly parse_poly(const Vars& vars, const std::string& text) {
  return eval_expr<Poly>(
      parse_expr(text), [&](const std::string& v) { return Poly::var(vars, v); },
      [&](const Rat& c) { return Poly::constant(vars, c); }, [](const Poly& a, const Poly& b) { return a * b; });
}

std::vector<Poly::Exps> monomials_upto(int nvars, int d) {
  std::vector<Poly::Exps> out;
  Poly::Exps cur(nvars, 0);
  for (int deg = 0; deg <= d; ++deg) {
    // exponent vectors of total degree deg, lexicographically decreasing
    std::vector<Poly::Exps> level;
    auto rec = [&](auto&& self, int k, int left) -> void {
      if (k == nvars - 1) {
        cur[k] = left;
        level.push_back(cur);
        return;
      }
      for (int t = left; t >= 0; --t) {
        cur[k] = t;
        self(self, k + 1, left - t);
      }
    };
    if (nvars == 0) {
      if (deg == 0) out.emplace_back();
      continue;
    }
    rec(rec, 0, deg);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace slodowy
