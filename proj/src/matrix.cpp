#include "slodowy/matrix.hpp"

#include "slodowy/errors.hpp"

#include <sstream>

namespace slodowy {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 1; i <= n; ++i) m.entries_[{i, i}] = 1;
  return m;
}

Mat Mat::unit(int n, int i, int j) {
  Mat m(n);
  m.set(i, j, Rat(1));
  return m;
}

Mat Mat::diagonal(const std::vector<Rat>& d) {
  Mat m(static_cast<int>(d.size()));
  for (std::size_t k = 0; k < d.size(); ++k) m.set(static_cast<int>(k) + 1, static_cast<int>(k) + 1, d[k]);
  return m;
}

Mat Mat::from_vec(int n, const SparseVec& v) {
  Mat m(n);
  for (const auto& [idx, c] : v.entries()) m.set(idx / n + 1, idx % n + 1, c);
  return m;
}

Rat Mat::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rat(0) : it->second;
}

void Mat::set(int i, int j, const Rat& v) {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw InputError("matrix index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

void Mat::add_to(int i, int j, const Rat& v) { set(i, j, at(i, j) + v); }

bool Mat::is_diagonal() const {
  for (const auto& [ij, v] : entries_)
    if (ij.first != ij.second) return false;
  return true;
}

void Mat::check_same(const Mat& o) const {
  if (n_ != o.n_) throw InputError("matrix dimension mismatch");
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  check_same(o);
  for (const auto& [ij, v] : o.entries_) {
    auto [it, fresh] = entries_.try_emplace(ij, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }
  return *this;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& [ij, v] : r.entries_) v = -v;
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator*(const Mat& o) const {
  check_same(o);
  // Row-indexed view of o.
  std::vector<std::vector<std::pair<int, const Rat*>>> rows(n_ + 1);
  for (const auto& [ij, v] : o.entries_) rows[ij.first].emplace_back(ij.second, &v);
  Mat r(n_);
  for (const auto& [ij, v] : entries_)
    for (const auto& [col, w] : rows[ij.second]) {
      auto [it, fresh] = r.entries_.try_emplace({ij.first, col}, v * *w);
      if (!fresh) it->second += v * *w;
    }
  std::erase_if(r.entries_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Mat Mat::operator*(const Rat& c) const {
  if (c == 0) return Mat(n_);
  Mat r = *this;
  for (auto& [ij, v] : r.entries_) v *= c;
  return r;
}

Rat Mat::trace() const {
  Rat t = 0;
  for (const auto& [ij, v] : entries_)
    if (ij.first == ij.second) t += v;
  return t;
}

Mat Mat::transpose() const {
  Mat r(n_);
  for (const auto& [ij, v] : entries_) r.entries_[{ij.second, ij.first}] = v;
  return r;
}

Mat Mat::pow(int k) const {
  Mat r = identity(n_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

SparseVec Mat::vec() const {
  std::vector<SparseVec::Entry> e;
  e.reserve(entries_.size());
  for (const auto& [ij, v] : entries_) e.emplace_back(flat(n_, ij.first, ij.second), v);
  return SparseVec(std::move(e));
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  std::vector<Rat> out(n_, Rat(0));
  for (const auto& [ij, c] : entries_) out[ij.first - 1] += c * v[ij.second - 1];
  return out;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) os << (j > 1 ? " " : "") << at(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

Rat trace_pair(const Mat& x, const Mat& y) {
  if (x.dim() != y.dim()) throw InputError("matrix dimension mismatch");
  Rat t = 0;
  for (const auto& [ij, v] : x.entries()) {
    Rat w = y.at(ij.second, ij.first);
    if (w != 0) t += v * w;
  }
  return t;
}

std::size_t matrix_rank(const Mat& m) {
  std::vector<SparseVec> rows(m.dim());
  std::vector<std::vector<SparseVec::Entry>> e(m.dim());
  for (const auto& [ij, v] : m.entries()) e[ij.first - 1].emplace_back(ij.second - 1, v);
  for (int i = 0; i < m.dim(); ++i) rows[i] = SparseVec(std::move(e[i]));
  return rank(rows);
}

}  // namespace slodowy
