#pragma once

#include "torbar/presentation.hpp"

#include <memory>
#include <tuple>

namespace torbar {

/// Per-degree Betti numbers, deterministic representative cocycles, and
/// ring structure constants of a cohomology algebra.
struct CohomologyTable {
  std::map<int, int> betti;
  std::map<int, std::vector<GradedElement>> representatives;
  /// (deg_i, idx_i, deg_j, idx_j) -> coefficients over representatives of
  /// degree deg_i + deg_j. Pairs whose product degree exceeds the
  /// truncation are absent.
  std::map<std::tuple<int, int, int, int>, Vec> ring_constants;
};

/// A validated CDGA computation scope: presentation with differential,
/// truncation degree, d^2 = 0 checked on generators and relations.
class CdgaInstance {
 public:
  CdgaInstance(std::shared_ptr<const AlgebraContext> ctx, int max_degree);

  const AlgebraContext& algebra() const { return *ctx_; }
  std::shared_ptr<const AlgebraContext> algebra_ptr() const { return ctx_; }
  int max_degree() const { return max_degree_; }

  GradedElement differential(const GradedElement& a) const;

  /// Matrix of d from degree_basis(n) to degree_basis(n+1).
  RationalMatrix d_matrix(int n) const;
  Subspace cocycles(int n) const;
  Subspace coboundaries(int n) const;  // image of d_{n-1} in degree n

  /// Coefficients of the class of cocycle z over the representative
  /// cocycles of its degree (unique).
  Vec class_coordinates(const GradedElement& z, const CohomologyTable& table) const;

 private:
  std::shared_ptr<const AlgebraContext> ctx_;
  int max_degree_;
};

CohomologyTable cohomology(const CdgaInstance& inst, bool want_ring = false);

struct MasseyResult {
  bool defined = false;           // false: [a][b] or [b][c] nonzero
  GradedElement representative;   // one cocycle in the product coset
  int indeterminacy_dim = 0;      // dim([a]H + H[c]) in cohomology
  bool contains_zero = false;     // the full coset meets zero
};

/// Triple Massey product <[a],[b],[c]> with the convention
/// d y1 = a b, d y2 = b c, w = y1 c - (-1)^{deg a} a y2.
MasseyResult massey_triple(const GradedElement& a, const GradedElement& b,
                           const GradedElement& c, const CdgaInstance& inst);

/// Cohomology dimensions of ker(eps)/(ker eps)^2 with the induced
/// differential, per degree up to the truncation.
std::map<int, int> indecomposables_homotopy(const CdgaInstance& inst, AugTarget target);

}  // namespace torbar
