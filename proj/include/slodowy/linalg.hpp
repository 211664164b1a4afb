#pragma once

// Exact sparse linear algebra over Q: vectors, incremental echelon bases and
// kernels of linear maps given column by column.

#include "slodowy/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace slodowy {

/// Sparse vector over Q with strictly increasing indices and no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Rat>;

  SparseVec() = default;
  /// Entries may be unsorted and contain duplicates or zeros; they are normalized.
  explicit SparseVec(std::vector<Entry> entries);

  static SparseVec unit(int index);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  int leading() const { return entries_.front().first; }
  const Rat& leading_coeff() const { return entries_.front().second; }
  Rat at(int index) const;

  /// this += c * other
  void axpy(const Rat& c, const SparseVec& other);
  void scale(const Rat& c);

  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec operator*(const Rat& c) const;
  bool operator==(const SparseVec& o) const = default;

  Rat dot(const SparseVec& o) const;

 private:
  std::vector<Entry> entries_;
};

/// Row-echelon basis of a subspace of Q^N, grown one vector at a time.
/// Each stored row has a distinct leading index and leading coefficient 1.
/// Optionally tracks, for every row, the combination of inserted vectors
/// that produced it.
class Echelon {
 public:
  explicit Echelon(bool track_combinations = false) : track_(track_combinations) {}

  /// Reduces v against the stored rows; returns the remainder.
  SparseVec reduce(SparseVec v) const;

  /// Inserts v; returns true when v was independent of the existing rows.
  /// When combinations are tracked and v is dependent, the relation
  /// (a combination of inserted vectors summing to zero, with coefficient 1
  /// on v) is available from last_relation().
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Coefficients c with v = sum_k c_k (k-th inserted vector), or nullopt when
  /// v is outside the span. Requires tracking.
  std::optional<SparseVec> express(const SparseVec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Rows sorted by leading index, fully reduced, leading coefficient 1.
  std::vector<SparseVec> rref() const;

  const std::optional<SparseVec>& last_relation() const { return relation_; }

 private:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };
  std::pair<SparseVec, SparseVec> reduce_tracked(SparseVec v, SparseVec combo) const;

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<int> leading_;                  // leading index of rows_[k]
  std::vector<std::pair<int, int>> by_lead_;  // (leading index, row), sorted
  std::optional<SparseVec> relation_;
  int find_row(int lead) const;
};

/// Kernel of the linear map whose k-th column is columns[k]. Returned vectors
/// live in Q^{columns.size()} and form a basis of the kernel.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& columns);
/// Same kernel from tracked column insertion; each vector is the first
/// dependency found. Slower on wide systems.
std::vector<SparseVec> kernel_tracked(const std::vector<SparseVec>& columns);

/// Dimension of the span of the given vectors.
std::size_t rank(const std::vector<SparseVec>& vectors);

/// Solves sum_k x_k columns[k] = rhs. Returns one solution (free variables
/// set to zero) or nullopt when inconsistent.
std::optional<SparseVec> solve(const std::vector<SparseVec>& columns, const SparseVec& rhs);

/// Dense square matrix inverse over Q; throws DomainError when singular.
std::vector<std::vector<Rat>> inverse(std::vector<std::vector<Rat>> a);

}  // namespace slodowy
