#include "torbar/linalg.hpp"

#include <stdexcept>

namespace torbar {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows) {}

void RationalMatrix::set(int r, int c, const Rational& v) {
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void RationalMatrix::add(int r, int c, const Rational& v) {
  auto it = data_[r].find(c);
  if (it == data_[r].end()) {
    if (v != 0) data_[r][c] = v;
    return;
  }
  it->second += v;
  if (it->second == 0) data_[r].erase(it);
}

Rational RationalMatrix::at(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

Vec RationalMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("dimension mismatch in matrix apply");
  Vec out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, x] : data_[r]) out[r] += x * v[c];
  return out;
}

namespace {

SparseRow scaled(const SparseRow& row, const Rational& s) {
  SparseRow out;
  if (s == 0) return out;
  for (const auto& [c, x] : row) out[c] = x * s;
  return out;
}

// row += s * other
void axpy(SparseRow& row, const Rational& s, const SparseRow& other) {
  if (s == 0) return;
  for (const auto& [c, x] : other) {
    auto it = row.find(c);
    if (it == row.end()) {
      row[c] = s * x;
    } else {
      it->second += s * x;
      if (it->second == 0) row.erase(it);
    }
  }
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<int> pivots;
  int next_row = 0;
  for (int col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    int sel = -1;
    for (int r = next_row; r < m.rows(); ++r) {
      auto it = rows[r].begin();
      if (it != rows[r].end() && it->first == col) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[next_row]);
    SparseRow& p = rows[next_row];
    Rational inv = Rational(1) / p.at(col);
    if (inv != 1) p = scaled(p, inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      auto it = rows[r].find(col);
      if (it != rows[r].end()) axpy(rows[r], -it->second, p);
    }
    pivots.push_back(col);
    ++next_row;
  }

  RationalMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) out.row(r) = rows[r];
  return {std::move(out), std::move(pivots)};
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::from_vectors(int ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::basis_vector(int i) const { return dense(rows_[i], ambient_); }

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("dimension mismatch in subspace reduce");
  SparseRow r = sparse(v);
  for (const auto& [pc, ri] : pivot_row_) {
    auto it = r.find(pc);
    if (it != r.end()) axpy(r, -it->second, rows_[ri]);
  }
  return dense(r, ambient_);
}

bool Subspace::contains(const Vec& v) const {
  for (const auto& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool Subspace::insert(const Vec& v) {
  SparseRow r = sparse(reduce(v));
  if (r.empty()) return false;
  int pc = r.begin()->first;
  Rational inv = Rational(1) / r.begin()->second;
  if (inv != 1) r = scaled(r, inv);
  // Back-substitute into existing rows to stay fully reduced.
  for (auto& row : rows_) {
    auto it = row.find(pc);
    if (it != row.end()) axpy(row, -it->second, r);
  }
  pivot_row_[pc] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  // Keep rows ordered by pivot column for canonical bases.
  std::vector<SparseRow> ordered;
  ordered.reserve(rows_.size());
  std::map<int, int> remap;
  for (auto& [col, idx] : pivot_row_) {
    remap[col] = static_cast<int>(ordered.size());
    ordered.push_back(std::move(rows_[idx]));
  }
  rows_ = std::move(ordered);
  pivot_row_ = std::move(remap);
  return true;
}

std::optional<Vec> solve_modulo(const Vec& v, const Subspace& span) {
  if (static_cast<int>(v.size()) != span.ambient_dim())
    throw std::invalid_argument("solve_modulo: dimension mismatch");
  Vec coeffs(span.dim(), Rational(0));
  SparseRow r = sparse(v);
  int i = 0;
  for (const auto& row : span.basis_rows()) {
    int pc = row.begin()->first;
    auto it = r.find(pc);
    if (it != r.end()) {
      coeffs[i] = it->second;
      axpy(r, -it->second, row);
    }
    ++i;
  }
  if (!r.empty()) return std::nullopt;
  return coeffs;
}

std::optional<Vec> preimage(const RationalMatrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("preimage: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    aug.row(r) = m.row(r);
    aug.set(r, m.cols(), rhs[r]);
  }
  RrefResult rr = rref(aug);
  Vec x(m.cols(), Rational(0));
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
    x[rr.pivots[i]] = rr.mat.at(static_cast<int>(i), m.cols());
  }
  return x;
}

Subspace kernel_basis(const RationalMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;

  Subspace ker(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = -rr.mat.at(static_cast<int>(i), c);
    ker.insert(v);
  }
  return ker;
}

bool EchelonSpan::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int pc = row.begin()->first;
  Rational inv = Rational(1) / row.begin()->second;
  if (inv != 1) row = scaled(row, inv);
  for (auto& [col, r] : rows_) {
    auto it = r.find(pc);
    if (it != r.end()) axpy(r, -it->second, row);
  }
  rows_[pc] = std::move(row);
  return true;
}

SparseRow EchelonSpan::reduce(SparseRow row) const {
  SparseRow out = std::move(row);
  auto it = out.begin();
  while (it != out.end()) {
    auto rit = rows_.find(it->first);
    if (rit == rows_.end()) {
      ++it;
      continue;
    }
    Rational c = it->second;
    axpy(out, -c, rit->second);
    it = out.lower_bound(rit->first);
  }
  return out;
}

bool EchelonSpan::contains(const SparseRow& row) const { return reduce(row).empty(); }

Vec dense(const SparseRow& row, int n) {
  Vec v(n, Rational(0));
  for (const auto& [c, x] : row) v[c] = x;
  return v;
}

SparseRow sparse(const Vec& v) {
  SparseRow r;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r[static_cast<int>(i)] = v[i];
  return r;
}

}  // namespace torbar
