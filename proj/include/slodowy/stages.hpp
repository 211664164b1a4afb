#pragma once

#include "slodowy/gradings.hpp"
#include "slodowy/lie.hpp"
#include "slodowy/partitions.hpp"
#include "slodowy/pyramids.hpp"

#include <string>
#include <vector>

namespace slodowy {

/// Everything built for one dominance cover mu < lam, on the right-aligned
/// standard filling of mu.
struct StageData {
  Partition mu, lam;
  CoverRows rows;
  Pyramid pyramid;
  Filling filling;
  Mat e1, e2, h2prime;
  Rat K;                 // trace-fixing constant of h2prime
  Subalg m1, k, m2;      // m2 basis = m1 basis then k basis
  std::vector<Mat> E;    // E_1 .. E_{j-i}, the basis of k
  Char chi1, chi2, kappa;
};

Mat construct_e2(const Filling& d, const CoverRows& r);

struct KM2 {
  std::vector<Mat> E;  // E_m, m = 1 .. j - i
  Subalg k;
  Subalg m2;
};
/// m1 is the even Premet subalgebra of the filling's grading.
KM2 construct_k_m2(const Filling& d, const CoverRows& r, const Subalg& m1);

/// Diagonal h2' together with its constant K.
std::pair<Mat, Rat> construct_h2prime(const Filling& d, const CoverRows& r, const Partition& lam);

/// Integers K in [-bound, bound] for which the h2' formula with that K in
/// place of the trace-fixing constant gives a good grading for e2.
std::vector<Rat> good_h2_constants(const StageData& sd, int bound);

/// One element E_i^j[r] of the centralizer basis.
struct EKElement {
  int from_row = 0;  // i
  int to_row = 0;    // j
  int shift = 0;     // r
  Mat m;
};

/// Centralizer basis of the nilpotent of the right-aligned standard filling
/// of `shape`, with b_{i,t} the t-th box from the right of row i.
std::vector<EKElement> ek_basis(const Partition& shape);

/// Jordan chains of e2 as coordinate vectors: each chain starts at its
/// generator and ends at the vector killed by e2. Rows other than i, j give
/// their own row; rows i, j give the two mixed chains.
std::vector<std::vector<std::vector<Rat>>> jordan_strings_e2(const Filling& d, const CoverRows& r);

/// Throws RelationError unless lam covers mu.
StageData build_stage(const Partition& mu, const Partition& lam);

struct StageCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct StageReport {
  Partition mu, lam;
  std::vector<StageCheck> checks;
  bool all() const;
  /// First failing check name, or empty.
  std::string first_failure() const;
};

StageReport verify_stage(const Partition& mu, const Partition& lam);

}  // namespace slodowy
