#pragma once

// m-invariants of U_hbar(g) / U_hbar(g) m_chi, degree by degree, and the
// two-stage reduction for a cover. Every letter and hbar have degree 1; the
// relation and the shifted ideal are homogeneous for this grading, so each
// degree is computed independently and exactly.

#include "slodowy/pbw.hpp"
#include "slodowy/reduction.hpp"
#include "slodowy/stages.hpp"

#include <map>
#include <memory>
#include <vector>

namespace slodowy {

/// Quotient monomials: sorted words over letters 0 .. first_m-1, times hbar^h,
/// with word length + h = degree.
std::vector<Mono> quotient_monomials(int num_letters, int degree);

/// Basis of the invariants of exact degree D. Columns of the linear system are
/// assembled with OpenMP. Throws ResourceError when the system would exceed
/// max_columns.
std::vector<PBWElem> invariant_basis(const ReductionCtx& ctx, int degree, std::size_t max_columns = 60000);
/// Same result, single-threaded assembly.
std::vector<PBWElem> invariant_basis_serial(const ReductionCtx& ctx, int degree, std::size_t max_columns = 60000);
/// Union of the exact-degree bases for 0 .. D.
std::vector<PBWElem> invariant_basis_upto(const ReductionCtx& ctx, int max_degree);

/// The algebra and both reductions attached to a cover. Basis order:
/// complement of m2 in sl_n, then E_1 .. E_{j-i}, then the basis of m1.
struct StageQuantum {
  std::unique_ptr<PBWAlgebra> alg;
  std::unique_ptr<ReductionCtx> first;    // by m1 and eta = chi1
  std::unique_ptr<ReductionCtx> oneshot;  // by m2 and chi2
  int first_k = 0;                        // index of the first k letter
  int num_k = 0;
  std::vector<Rat> kappa;                 // on the k letters
};

StageQuantum make_stage_quantum(const StageData& sd);

/// Same layout from an explicit basis: letters first_k .. first_k+|kappa|-1
/// span k, the remaining |eta| letters span m1. chi2 is kappa on k and eta on m1.
StageQuantum make_quantum(LieBasis basis, int first_k, std::vector<Rat> kappa, std::vector<Rat> eta);

/// Phi_K(xi) = xi - kappa(xi) hbar for the k-th generator of k.
PBWElem comoment_K(const StageQuantum& sq, int k);

/// Dimension of the two-stage reduction in exact degree D: invariant classes of
/// the first reduction that are k-invariant modulo the left ideal generated by
/// Phi_K(k), modulo that ideal.
int two_stage_dim(const StageQuantum& sq, int degree);

struct PhiResult {
  bool first_invariant = false;  // u is m1-invariant mod the eta-ideal
  bool k_invariant = false;      // its class is k-invariant mod the Phi_K ideal
  bool well_defined = false;     // perturbed representatives give the same image
  bool image_invariant = false;  // image is m2-invariant in the one-shot reduction
  PBWElem image;                 // representative in the one-shot reduction
  int failing_letter = -1;
};

/// phi(class of u) as the one-shot representative, with the checks above.
/// The perturbation uses the given seed.
PhiResult stage_phi_and_comoment(const StageQuantum& sq, const PBWElem& u, unsigned seed = 1);

}  // namespace slodowy
