#include "slodowy/expr.hpp"

#include "slodowy/errors.hpp"

#include <cctype>
#include <set>

namespace slodowy {

namespace {

Expr node(Expr::Kind k) {
  Expr e;
  e.kind = k;
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr sum = node(Expr::Kind::add);
    sum.kids.push_back(term());
    for (;;) {
      if (eat('+')) {
        sum.kids.push_back(term());
      } else if (eat('-')) {
        Expr n = node(Expr::Kind::neg);
        n.kids.push_back(term());
        sum.kids.push_back(std::move(n));
      } else {
        break;
      }
    }
    return sum.kids.size() == 1 ? std::move(sum.kids[0]) : sum;
  }

  Expr term() {
    Expr prod = node(Expr::Kind::mul);
    prod.kids.push_back(unary());
    for (;;) {
      if (eat('*')) {
        prod.kids.push_back(unary());
      } else if (eat('/')) {
        Expr d = unary();
        if (d.kind != Expr::Kind::num || d.num == 0) fail("division by a nonzero constant expected");
        Expr inv = node(Expr::Kind::num);
        inv.num = 1 / d.num;
        prod.kids.push_back(std::move(inv));
      } else {
        break;
      }
    }
    return prod.kids.size() == 1 ? std::move(prod.kids[0]) : prod;
  }

  Expr unary() {
    if (eat('-')) {
      Expr inner = unary();
      if (inner.kind == Expr::Kind::num) {
        inner.num = -inner.num;
        return inner;
      }
      Expr n = node(Expr::Kind::neg);
      n.kids.push_back(std::move(inner));
      return n;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer exponent expected");
    Expr p = node(Expr::Kind::pow);
    p.exponent = std::stoi(s_.substr(start, pos_ - start));
    p.kids.push_back(std::move(base));
    return p;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (eat('(')) {
      Expr e = expr();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr n = node(Expr::Kind::num);
      n.num = Rat(s_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      Expr v = node(Expr::Kind::var);
      v.name = s_.substr(start, pos_ - start);
      return v;
    }
    fail("unexpected character");
  }
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::var) out.insert(e.name);
  for (const auto& k : e.kids) collect(k, out);
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::vector<std::string> expr_variables(const Expr& e) {
  std::set<std::string> s;
  collect(e, s);
  return {s.begin(), s.end()};
}

}  // namespace slodowy
