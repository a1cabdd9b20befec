#pragma once

#include "torbar/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace torbar {

using Vec = std::vector<Rational>;
using SparseRow = std::map<int, Rational>;

/// Sparse matrix over Q. Absent entries are zero; stored entries are
/// kept nonzero by set().
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational at(int r, int c) const;
  const SparseRow& row(int r) const { return data_[r]; }
  SparseRow& row(int r) { return data_[r]; }

  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<SparseRow> data_;
};

struct RrefResult {
  RationalMatrix mat;
  std::vector<int> pivots;  // pivot column per pivot row, ascending
};

/// Unique reduced row-echelon form with deterministic pivoting
/// (leftmost nonzero column, first available row).
RrefResult rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// A subspace of Q^n held as a reduced-echelon basis. Canonical for a
/// given span: rref rows of any spanning set.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);
  static Subspace from_vectors(int ambient_dim, const std::vector<Vec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& basis_rows() const { return rows_; }
  Vec basis_vector(int i) const;

  bool contains(const Vec& v) const;
  /// Reduces v against the echelon basis; returns the residue.
  Vec reduce(const Vec& v) const;
  /// Adds v to the span unless already contained. Returns true if the
  /// dimension grew.
  bool insert(const Vec& v);

 private:
  int ambient_;
  std::vector<SparseRow> rows_;     // reduced echelon, ascending pivots
  std::map<int, int> pivot_row_;    // pivot column -> row index
};

/// Coefficients of v in span's original generating set are not kept, so
/// this variant expresses v over the canonical echelon basis instead.
/// Returns std::nullopt when v is not in the span.
std::optional<Vec> solve_modulo(const Vec& v, const Subspace& span);

/// Solves m * x = rhs exactly; any one solution (deterministic choice:
/// free variables set to zero). std::nullopt when inconsistent.
std::optional<Vec> preimage(const RationalMatrix& m, const Vec& rhs);

/// Canonical basis of the right kernel {v : m v = 0}.
Subspace kernel_basis(const RationalMatrix& m);

/// Incremental echelon span for streaming row insertion; rows are fully
/// reduced so membership tests are canonical.
class EchelonSpan {
 public:
  explicit EchelonSpan(int ambient_dim) : ambient_(ambient_dim) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool insert(SparseRow row);            // true if dimension grew
  SparseRow reduce(SparseRow row) const; // residue modulo the span
  bool contains(const SparseRow& row) const;
  const std::map<int, SparseRow>& rows() const { return rows_; }
  bool has_pivot(int col) const { return rows_.count(col) != 0; }

 private:
  int ambient_;
  std::map<int, SparseRow> rows_;  // pivot column -> normalized reduced row
};

Vec dense(const SparseRow& row, int n);
SparseRow sparse(const Vec& v);

}  // namespace torbar
