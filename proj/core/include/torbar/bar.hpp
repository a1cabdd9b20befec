#pragma once

#include "torbar/presentation.hpp"

#include <compare>
#include <memory>

namespace torbar {

enum class BarMode { OverK, OverR };

/// Index into the slot basis of one middle-algebra degree.
struct SlotRef {
  int degree = 0;
  int index = 0;
  auto operator<=>(const SlotRef&) const = default;
};

/// Basis tensor (left | slot_1 | ... | slot_k | right). Outer factors are
/// monomials of the r-subalgebra R (the unit monomial when R = k); slots
/// index the mode's slot basis. Bar degree is -k; complex degree is the
/// tensor degree minus k (one suspension per slot).
struct BarWord {
  Monomial left, right;
  std::vector<SlotRef> slots;
  auto operator<=>(const BarWord&) const = default;
};

/// Rational combination of words of a single complex degree.
struct BarChain {
  int degree = 0;
  std::map<BarWord, Rational> terms;
  bool zero() const { return terms.empty(); }
};

BarChain chain_add(const BarChain& a, const BarChain& b);
BarChain chain_scale(const BarChain& a, const Rational& s);

/// One normalized bar complex: middle algebra, outer factors R, mode, and
/// truncation. Per-degree bases, differentials and quotients are memoized;
/// the cache is internally synchronized.
class BarContext {
 public:
  BarContext(std::shared_ptr<const AlgebraContext> middle, BarMode mode, int max_degree);

  const AlgebraContext& middle() const { return *middle_; }
  BarMode mode() const { return mode_; }
  int max_degree() const { return max_degree_; }

  /// Slot basis of one middle degree (>= 2): quotient-basis monomials over
  /// k, the kernel of eps: B -> R over R.
  const std::vector<GradedElement>& slot_basis(int degree) const;

  /// All free words of one complex degree, in the canonical order used for
  /// quotient pivoting. Degrees up to max_degree + 1 are available.
  const std::vector<BarWord>& bar_basis(int complex_degree) const;
  int word_index(const BarWord& w) const;

  int word_complex_degree(const BarWord& w) const;
  int word_tensor_degree(const BarWord& w) const;

  /// Dimension of the working complex in one degree (free dimension over
  /// k; r-move quotient dimension over R).
  int complex_dim(int complex_degree) const;
  /// Quotient-class representative words (equal to bar_basis over k).
  std::vector<BarWord> complex_basis(int complex_degree) const;

  BarChain word_chain(const BarWord& w) const;

  /// Internal differential d (slotwise Leibniz with alternating signs).
  BarChain bar_d(const BarChain& ch) const;
  /// Merging differential delta (adjacent products, outer structure maps).
  BarChain bar_delta(const BarChain& ch) const;
  /// Total differential D = d + delta; D^2 = 0.
  BarChain bar_D(const BarChain& ch) const;

  /// Matrix of D between working-complex slices n -> n+1.
  RationalMatrix D_matrix(int complex_degree) const;
  /// Coordinates of a free chain in the working complex of its degree.
  Vec project(const BarChain& ch) const;

  /// Shuffle product of two chains, at the free-word level.
  BarChain shuffle_mul(const BarChain& p, const BarChain& q) const;

  /// R-move span at one complex degree together with the induced quotient
  /// basis (identity quotient over k, where the span is empty by fiat).
  struct MoveQuotient {
    EchelonSpan span;
    std::vector<int> basis_words;    // non-pivot word indices, ascending
    std::map<int, int> basis_pos;    // word index -> quotient coordinate
    MoveQuotient() : span(0) {}
  };
  /// The r-move quotient of the over-k slice at one degree: basis plus the
  /// span whose reduction is the projection. Only meaningful over k (it
  /// realizes the passage to the complex over R).
  const MoveQuotient& quotient_over_R(int complex_degree) const;

  /// Spanning data for the acyclic subcomplex V of r-move differences,
  /// with the insertion contracting homotopy s evaluated per generator.
  struct VData {
    std::vector<BarChain> generators;
    std::vector<BarChain> s_values;
    EchelonSpan span;
    VData() : span(0) {}
  };
  const VData& v_data(int complex_degree) const;

  /// Contracting homotopy, evaluated through one deterministic generator
  /// expression of v (the insertion values are attached to indexed move
  /// generators, not to the span). Throws InputError when v is not in the
  /// computed span of V.
  BarChain homotopy_s(const BarChain& v) const;

  /// Verifies D s + s D = id on every indexed move generator of one
  /// complex degree, with D of a generator decomposed structurally into
  /// indexed generators (a merge strictly left of the move shifts its
  /// index down, the merge at the move junction cancels in the pair).
  bool homotopy_identity(int complex_degree) const;

 private:
  struct Slice {
    std::vector<BarWord> words;
    std::map<BarWord, int> index;
  };

  const Slice& slice(int complex_degree) const;
  void enumerate_words(int complex_degree, Slice& out) const;
  const MoveQuotient& move_quotient(int complex_degree) const;
  MoveQuotient build_move_quotient(int complex_degree) const;
  std::vector<std::pair<BarChain, BarChain>> move_generators(int complex_degree,
                                                             bool with_s,
                                                             bool include_units) const;

  /// A_pos(base) - A_{pos+1}(base) with r the rg-th generator multiplied
  /// into the word position (0 = left, 1..k slots, k+1 = right).
  BarChain gen_chain(const BarWord& base, int rg, int pos) const;
  /// Insertion homotopy value of that generator (slot r inserted after
  /// position pos; the companion unit-slot word is erased).
  BarChain gen_s(const BarWord& base, int rg, int pos) const;
  BarChain mul_into_position(const BarWord& w, int pos, const Monomial& r,
                             int rdeg) const;

  GradedElement slot_element(const SlotRef& s) const;
  /// Expands a middle-algebra element in slot coordinates (must lie in the
  /// slot space; guaranteed for products of slot entries).
  std::vector<std::pair<SlotRef, Rational>> slot_expand(const GradedElement& e) const;

  std::shared_ptr<const AlgebraContext> middle_;
  BarMode mode_;
  int max_degree_;
  int ngen_;

  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Slice>> slice_memo_;
  mutable std::map<int, std::unique_ptr<MoveQuotient>> quo_memo_;
  mutable std::map<int, std::unique_ptr<VData>> v_memo_;
  mutable std::map<int, std::unique_ptr<std::vector<GradedElement>>> slot_memo_;
};

}  // namespace torbar
