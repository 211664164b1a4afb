#include "slodowy/linalg.hpp"

#include "slodowy/errors.hpp"

#include <algorithm>
#include <map>

namespace slodowy {

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [i, c] : entries) {
    if (!entries_.empty() && entries_.back().first == i) {
      entries_.back().second += c;
      if (entries_.back().second == 0) entries_.pop_back();
    } else if (c != 0) {
      entries_.emplace_back(i, std::move(c));
    }
  }
}

SparseVec SparseVec::unit(int index) {
  SparseVec v;
  v.entries_.emplace_back(index, Rat(1));
  return v;
}

Rat SparseVec::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rat(0);
}

void SparseVec::axpy(const Rat& c, const SparseVec& other) {
  if (c == 0 || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rat s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Rat& c) {
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Rat(1), o);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec r = *this;
  r.axpy(Rat(-1), o);
  return r;
}

SparseVec SparseVec::operator*(const Rat& c) const {
  SparseVec r = *this;
  r.scale(c);
  return r;
}

Rat SparseVec::dot(const SparseVec& o) const {
  Rat s = 0;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

int Echelon::find_row(int lead) const {
  auto it = std::lower_bound(by_lead_.begin(), by_lead_.end(), std::make_pair(lead, -1));
  if (it != by_lead_.end() && it->first == lead) return it->second;
  return -1;
}

std::pair<SparseVec, SparseVec> Echelon::reduce_tracked(SparseVec v, SparseVec combo) const {
  // Rows only touch indices >= their leading index, so a single left-to-right
  // scan suffices.
  std::size_t pos = 0;
  while (pos < v.entries().size()) {
    const int idx = v.entries()[pos].first;
    const int r = find_row(idx);
    if (r < 0) {
      ++pos;
      continue;
    }
    const Rat c = -v.entries()[pos].second;
    v.axpy(c, rows_[r].vec);
    if (track_) combo.axpy(c, rows_[r].combo);
  }
  return {std::move(v), std::move(combo)};
}

SparseVec Echelon::reduce(SparseVec v) const {
  return reduce_tracked(std::move(v), SparseVec{}).first;
}

std::optional<SparseVec> Echelon::express(const SparseVec& v) const {
  if (!track_) throw InternalError("Echelon::express needs tracked combinations");
  auto [rem, c] = reduce_tracked(v, SparseVec{});
  if (!rem.empty()) return std::nullopt;
  c.scale(Rat(-1));
  return c;
}

bool Echelon::insert(SparseVec v) {
  const int id = static_cast<int>(inserted_++);
  SparseVec combo = track_ ? SparseVec::unit(id) : SparseVec{};
  auto [rem, c] = reduce_tracked(std::move(v), std::move(combo));
  if (rem.empty()) {
    if (track_) relation_ = std::move(c);
    return false;
  }
  Rat inv = 1 / rem.leading_coeff();
  rem.scale(inv);
  if (track_) c.scale(inv);
  const int lead = rem.leading();
  rows_.push_back(Row{std::move(rem), std::move(c)});
  leading_.push_back(lead);
  auto it = std::lower_bound(by_lead_.begin(), by_lead_.end(), std::make_pair(lead, -1));
  by_lead_.insert(it, {lead, static_cast<int>(rows_.size() - 1)});
  return true;
}

std::vector<SparseVec> Echelon::rref() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (auto [lead, r] : by_lead_) out.push_back(rows_[r].vec);
  // Back-substitute from the bottom so every pivot column is clean.
  for (std::size_t k = out.size(); k-- > 0;) {
    const int lead = out[k].leading();
    for (std::size_t m = 0; m < k; ++m) {
      Rat c = out[m].at(lead);
      if (c != 0) out[m].axpy(-c, out[k]);
    }
  }
  return out;
}

std::vector<SparseVec> kernel_tracked(const std::vector<SparseVec>& columns) {
  Echelon ech(true);
  std::vector<SparseVec> out;
  for (const auto& col : columns)
    if (!ech.insert(col)) out.push_back(*ech.last_relation());
  return out;
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& columns) {
  // Row-reduce the transpose; free columns parametrize the kernel.
  std::map<int, std::vector<SparseVec::Entry>> rows;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c].entries()) rows[r].emplace_back(static_cast<int>(c), v);
  Echelon ech;
  for (auto& [r, e] : rows) ech.insert(SparseVec(std::move(e)));
  const auto red = ech.rref();
  std::vector<char> pivot(columns.size(), 0);
  for (const auto& row : red) pivot[row.leading()] = 1;
  std::vector<std::vector<SparseVec::Entry>> out_entries(columns.size());
  for (const auto& row : red)
    for (const auto& [c, v] : row.entries())
      if (c != row.leading()) out_entries[c].emplace_back(row.leading(), -v);
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < columns.size(); ++f) {
    if (pivot[f]) continue;
    auto e = std::move(out_entries[f]);
    e.emplace_back(static_cast<int>(f), Rat(1));
    out.emplace_back(std::move(e));
  }
  return out;
}

std::size_t rank(const std::vector<SparseVec>& vectors) {
  Echelon ech;
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& columns, const SparseVec& rhs) {
  // rhs as the last column: it is free exactly when the system is consistent,
  // and its kernel vector then carries -solution on the pivot columns.
  std::vector<SparseVec> aug = columns;
  aug.push_back(rhs);
  const int last = static_cast<int>(columns.size());
  for (const auto& k : kernel(aug)) {
    if (k.at(last) == 0) continue;
    std::vector<SparseVec::Entry> sol;
    for (const auto& [i, v] : k.entries())
      if (i != last) sol.emplace_back(i, -v);
    return SparseVec(std::move(sol));
  }
  return std::nullopt;
}

std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace slodowy
