#pragma once

// Commutative polynomials over Q in a named, fixed list of variables.

#include "slodowy/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace slodowy {

using Vars = std::shared_ptr<const std::vector<std::string>>;
Vars make_vars(std::vector<std::string> names);

class Poly {
 public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, Rat>;

  Poly() = default;
  explicit Poly(Vars vars) : vars_(std::move(vars)) {}
  static Poly constant(Vars vars, const Rat& c);
  static Poly var(Vars vars, int i);
  static Poly var(Vars vars, const std::string& name);
  static Poly monomial(Vars vars, Exps e, const Rat& c = 1);

  const Vars& vars() const { return vars_; }
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  /// Index of a variable name; -1 when absent.
  int index(const std::string& name) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;

  void add(const Exps& e, const Rat& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly pow(int k) const;
  /// Equal variable lists and equal terms.
  bool operator==(const Poly& o) const;

  Poly derivative(int i) const;
  /// Replaces variable k by images[k]; all images share one variable list.
  Poly substitute(const std::vector<Poly>& images) const;
  /// Same polynomial over a larger list containing every variable used here.
  Poly rebase(const Vars& target) const;

  /// Parseable text, highest degree first.
  std::string str() const;

 private:
  void check_same(const Poly& o) const;
  Vars vars_;
  Terms terms_;
};

/// Parses an expression over the given variables; unknown identifiers throw InputError.
Poly parse_poly(const Vars& vars, const std::string& text);

/// Monomials of total degree <= d in the given number of variables, in
/// increasing degree.
std::vector<Poly::Exps> monomials_upto(int nvars, int d);

}  // namespace slodowy
