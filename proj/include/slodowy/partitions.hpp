#pragma once

#include <compare>
#include <string>
#include <vector>

namespace slodowy {

/// Integer partition: positive parts in weakly decreasing order.
/// Rows are addressed 1-based, matching lambda_1 >= lambda_2 >= ...
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based; rows past the end are zero.
  int part(int row) const;

  /// Lexicographic on parts, so sorting descending gives the usual listing.
  auto operator<=>(const Partition&) const = default;

  /// "(3,2,1)"
  std::string str() const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// receiver i < donor j: lambda is mu with one box moved from row j to row i.
struct CoverRows {
  int receiver = 0;
  int donor = 0;
  bool operator==(const CoverRows&) const = default;
};

/// Every partition of n once, lexicographically descending. 1 <= n <= 20.
std::vector<Partition> all_partitions(int n);

/// Dominance order on zero-padded prefix sums. Throws InputError if sizes differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// Partitions covering mu in dominance order, from the box-move conditions.
std::vector<Partition> covers_above(const Partition& mu);

/// Throws RelationError unless lam covers mu.
CoverRows cover_rows(const Partition& mu, const Partition& lam);

Partition conjugate(const Partition& p);

/// Dimension of the nilpotent orbit of Jordan type p: n^2 - sum of squared column lengths.
int orbit_dim(const Partition& p);

/// Parses "3,2,1", "[3,2,1]" or "(3,2,1)".
Partition parse_partition(const std::string& text);

}  // namespace slodowy
