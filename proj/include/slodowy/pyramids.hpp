#pragma once

#include "slodowy/matrix.hpp"
#include "slodowy/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slodowy {

/// A box of a pyramid. Rows are 1-based from the bottom (French convention);
/// col is the box centre in half-box units, so neighbours in a row differ by 2.
struct Box {
  int row = 0;
  int col = 0;
  bool operator==(const Box&) const = default;
};

/// Young diagram with integer row shifts. offsets[r-1] is the centre column of
/// the first box of row r; the bottom row is pinned at 0.
class Pyramid {
 public:
  Pyramid() = default;
  /// Throws InputError unless first-box columns weakly increase and last-box
  /// columns weakly decrease from bottom to top.
  Pyramid(Partition shape, std::vector<int> offsets);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& offsets() const { return offsets_; }
  int rows() const { return shape_.length(); }
  int first_col(int row) const { return offsets_[row - 1]; }
  int last_col(int row) const { return offsets_[row - 1] + 2 * (shape_.part(row) - 1); }
  /// t is 0-based from the left.
  int col(int row, int t) const { return offsets_[row - 1] + 2 * t; }
  std::vector<Box> boxes() const;

  bool operator==(const Pyramid&) const = default;

 private:
  Partition shape_;
  std::vector<int> offsets_;
};

/// Bijective labelling of the boxes by 1..n.
class Filling {
 public:
  Filling() = default;
  /// labels lists rows bottom to top, each left to right.
  Filling(Pyramid pyramid, const std::vector<int>& labels_row_major);

  const Pyramid& pyramid() const { return pyramid_; }
  int size() const { return static_cast<int>(box_of_.size()); }
  int row(int label) const { return box_of_.at(label - 1).row; }
  int col(int label) const { return box_of_.at(label - 1).col; }
  /// Label of the t-th box from the left (0-based) in the given row.
  int label_at(int row, int t) const { return labels_.at(row - 1).at(t); }
  /// Label of the t-th box from the right (1-based), the b_{row,t} indexing.
  int label_from_right(int row, int t) const;
  /// Label of the box in `row` whose centre column is `col`, if any.
  std::optional<int> label_at_col(int row, int col) const;
  bool right_adjacent(int k, int l) const { return row(k) == row(l) && col(k) + 2 == col(l); }
  std::vector<int> labels_row_major() const;

 private:
  Pyramid pyramid_;
  std::vector<std::vector<int>> labels_;  // [row-1][t]
  std::vector<Box> box_of_;               // [label-1]
};

/// All pyramids of the given shape, bottom row at offset 0.
std::vector<Pyramid> enumerate_pyramids(const Partition& shape);

/// The pyramid whose rows all end in the same column.
Pyramid right_aligned(const Partition& shape);

/// Labels increase up columns, then left to right.
Filling standard_filling(const Pyramid& p);

/// Sum of E_kl over right-adjacent pairs k -> l.
Mat nilpotent_of(const Filling& f);

/// Diagonal h with h_kk = c - col(k), c chosen so tr h = 0; ad h has
/// eigenvalue col(j) - col(i) on E_ij.
Mat pyramid_semisimple(const Filling& f);

enum class RenderFormat { ascii, tex, dot };
RenderFormat parse_render_format(const std::string& name);

std::string render(const Pyramid& p, const std::optional<Filling>& f, RenderFormat format);

/// Hasse diagram of the dominance order on partitions of n, one edge per
/// cover, larger partitions on top. 1 <= n <= 20.
std::string render_hasse(int n, RenderFormat format);

}  // namespace slodowy
