#pragma once

#include "torbar/linalg.hpp"
#include "torbar/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace torbar {

/// Input-contract violation (bad presentation, malformed request).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A verified structural law failed (d^2 != 0, cross-check mismatch, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested degree exceeds the truncation bound.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string name;
  int degree = 0;
  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Generator&) const = default;
};

/// Exponent vector over the declared generators. Odd generators carry
/// exponent at most 1.
using Monomial = std::vector<int>;

/// Element of the free graded-commutative algebra; keys are exponent
/// vectors, values nonzero rationals.
using Polynomial = std::map<Monomial, Rational>;

/// Finitely presented graded-commutative Q-algebra with optional
/// differential, a distinguished free polynomial subalgebra R spanned by
/// r_generators, and an augmentation onto R.
struct AlgebraPresentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<Polynomial> relations;
  std::vector<int> r_generators;          // indices into generators, even degree
  std::map<int, Polynomial> augmentation; // generator -> polynomial in r-gens
  std::map<int, Polynomial> differential; // generator -> polynomial, absent = 0

  int degree_of(const Monomial& m) const;
  std::optional<int> generator_index(const std::string& name) const;
  bool is_r_generator(int gen) const;
  bool has_differential() const { return !differential.empty(); }
  bool operator==(const AlgebraPresentation&) const = default;
};

enum class AugTarget { OverK, OverR };

/// Homogeneous element in quotient normal form: all monomials are
/// canonical basis monomials of the stated degree.
struct GradedElement {
  int degree = 0;
  std::map<Monomial, Rational> terms;

  bool zero() const { return terms.empty(); }
  bool operator==(const GradedElement&) const = default;
};

/// Free product of monomials with the Koszul sign; nullopt when an odd
/// generator squares.
std::optional<std::pair<Monomial, int>> free_mul(const Monomial& a, const Monomial& b,
                                                 const std::vector<Generator>& gens);

Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const std::vector<Generator>& gens);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rational& s);

/// Descending degree-lex order used for all canonical monomial lists.
bool mono_greater(const Monomial& a, const Monomial& b);

/// Immutable presentation plus memoized per-degree normal-form data.
/// Basis computations are internally synchronized; all public methods are
/// safe to call concurrently.
class AlgebraContext {
 public:
  explicit AlgebraContext(AlgebraPresentation pres);

  const AlgebraPresentation& presentation() const { return pres_; }

  /// Free graded-commutative monomials of the given degree, descending
  /// degree-lex order.
  std::vector<Monomial> free_monomials(int degree) const;
  /// Monomials purely in the r-generators, same ordering.
  std::vector<Monomial> r_monomials(int degree) const;

  /// Canonical basis of the degree-n piece of the quotient algebra.
  const std::vector<Monomial>& degree_basis(int n) const;
  int basis_index(const Monomial& m, int degree) const;

  /// Reduces a homogeneous free polynomial to quotient normal form.
  GradedElement normal_form(const Polynomial& p, int degree) const;

  GradedElement element(const Polynomial& p) const;  // infers degree, checks homogeneity
  GradedElement multiply(const GradedElement& a, const GradedElement& b) const;
  GradedElement add(const GradedElement& a, const GradedElement& b) const;
  GradedElement scale(const GradedElement& a, const Rational& s) const;

  /// Applies the augmentation; the result is a free polynomial in the
  /// r-generators (R carries no relations).
  Polynomial augment(const GradedElement& a) const;
  /// Augmentation followed by R -> k (constant term).
  Rational augment_k(const GradedElement& a) const;

  /// Kernel of the degree-n augmentation matrix, in degree-basis
  /// coordinates.
  const Subspace& augmentation_ideal(int degree, AugTarget target) const;
  std::vector<GradedElement> augmentation_ideal_basis(int degree, AugTarget target) const;

  /// Leibniz extension of the generator differentials; degree +1.
  GradedElement differential(const GradedElement& a) const;

  Vec coordinates(const GradedElement& a) const;  // over degree_basis(a.degree)
  GradedElement from_coordinates(const Vec& v, int degree) const;

  /// Degreewise injectivity of R -> quotient; throws InvariantError when
  /// R fails to embed freely.
  void check_r_embedding(int max_degree) const;

 private:
  struct DegreeData {
    std::vector<Monomial> free_monos;       // descending order
    std::map<Monomial, int> free_index;
    EchelonSpan ideal;                      // ideal slice, free coordinates
    std::vector<Monomial> basis;            // non-pivot monomials
    std::map<Monomial, int> basis_idx;
    DegreeData() : ideal(0) {}
  };

  const DegreeData& degree_data(int n) const;
  void validate() const;

  AlgebraPresentation pres_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> degree_memo_;
  mutable std::map<std::pair<int, AugTarget>, std::unique_ptr<Subspace>> aug_memo_;
};

}  // namespace torbar
