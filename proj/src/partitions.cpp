#include "slodowy/partitions.hpp"

#include "slodowy/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace slodowy {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw InputError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw InputError("partition parts must be nonincreasing");
    n_ += parts_[k];
  }
}

int Partition::part(int row) const {
  if (row < 1) throw InputError("rows are 1-based");
  return row <= length() ? parts_[row - 1] : 0;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

std::vector<Partition> all_partitions(int n) {
  if (n < 1 || n > 20) throw InputError("all_partitions: n must lie in [1, 20]");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw InputError("dominance_leq: partitions of different n");
  const int len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (int l = 1; l <= len; ++l) {
    sa += a.part(l);
    sb += b.part(l);
    if (sa > sb) return false;
  }
  return true;
}

std::vector<Partition> covers_above(const Partition& mu) {
  // lambda covers mu iff lambda = mu + e_j - e_k (j < k) is a partition with
  // 0 <= lambda_k < lambda_j - 1 and either k = j + 1 or lambda_k = lambda_j - 2.
  std::vector<Partition> out;
  const int len = mu.length();
  for (int j = 1; j < len; ++j) {
    for (int k = j + 1; k <= len; ++k) {
      std::vector<int> lam(mu.parts());
      lam[j - 1] += 1;
      lam[k - 1] -= 1;
      const int lj = lam[j - 1], lk = lam[k - 1];
      if (!(0 <= lk && lk < lj - 1)) continue;
      if (!(k == j + 1 || lk == lj - 2)) continue;
      if (!std::is_sorted(lam.begin(), lam.end(), std::greater<>())) continue;
      while (!lam.empty() && lam.back() == 0) lam.pop_back();
      out.emplace_back(std::move(lam));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoverRows cover_rows(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw RelationError(lam.str() + " and " + mu.str() + " are partitions of different n");
  const auto covers = covers_above(mu);
  if (std::find(covers.begin(), covers.end(), lam) == covers.end())
    throw RelationError(lam.str() + " does not cover " + mu.str());
  CoverRows r;
  const int len = std::max(mu.length(), lam.length());
  for (int row = 1; row <= len; ++row) {
    const int d = lam.part(row) - mu.part(row);
    if (d == 1) r.receiver = row;
    if (d == -1) r.donor = row;
  }
  if (r.receiver == 0 || r.donor == 0 || r.receiver >= r.donor)
    throw InternalError("cover_rows: inconsistent cover " + mu.str() + " < " + lam.str());
  return r;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int c = 1; c <= p.part(1); ++c) {
    int h = 0;
    for (int part : p.parts())
      if (part >= c) ++h;
    cols.push_back(h);
  }
  return Partition(cols);
}

int orbit_dim(const Partition& p) {
  const Partition cols = conjugate(p);
  int s = 0;
  for (int c : cols.parts()) s += c * c;
  return p.size() * p.size() - s;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      parts.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      num.push_back(c);
    else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')')
      flush();
    else
      throw InputError("malformed partition: " + text);
  }
  flush();
  if (parts.empty()) throw InputError("empty partition: " + text);
  return Partition(parts);
}

}  // namespace slodowy
