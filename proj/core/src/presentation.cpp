#include "torbar/presentation.hpp"

#include <algorithm>
#include <functional>

namespace torbar {

int AlgebraPresentation::degree_of(const Monomial& m) const {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * generators[i].degree;
  return d;
}

std::optional<int> AlgebraPresentation::generator_index(const std::string& n) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == n) return static_cast<int>(i);
  return std::nullopt;
}

bool AlgebraPresentation::is_r_generator(int gen) const {
  return std::find(r_generators.begin(), r_generators.end(), gen) != r_generators.end();
}

bool mono_greater(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<std::pair<Monomial, int>> free_mul(const Monomial& a, const Monomial& b,
                                                 const std::vector<Generator>& gens) {
  Monomial out(a.size());
  int sign_exp = 0;
  int odd_tail = 0;  // number of odd letters of a with index > j, built backwards
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
    if (gens[j].odd()) {
      if (a[j] && b[j]) return std::nullopt;  // odd square
      if (b[j]) sign_exp += odd_tail;
    }
    out[j] = a[j] + b[j];
    if (gens[j].odd() && a[j]) ++odd_tail;
  }
  return std::make_pair(out, sign_exp % 2 == 0 ? 1 : -1);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b,
                    const std::vector<Generator>& gens) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto prod = free_mul(ma, mb, gens);
      if (!prod) continue;
      Rational c = ca * cb * prod->second;
      auto it = out.find(prod->first);
      if (it == out.end()) {
        if (c != 0) out[prod->first] = c;
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b) {
    auto it = out.find(m);
    if (it == out.end()) {
      out[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

Polynomial poly_scale(const Polynomial& a, const Rational& s) {
  Polynomial out;
  if (s == 0) return out;
  for (const auto& [m, c] : a) out[m] = c * s;
  return out;
}

AlgebraContext::AlgebraContext(AlgebraPresentation pres) : pres_(std::move(pres)) {
  validate();
}

void AlgebraContext::validate() const {
  for (const auto& g : pres_.generators) {
    if (g.degree < 1)
      throw InputError("generator '" + g.name + "' must have degree >= 1");
  }
  for (int r : pres_.r_generators) {
    if (pres_.generators[r].degree % 2 != 0)
      throw InputError("r-generator '" + pres_.generators[r].name + "' must have even degree");
    auto it = pres_.differential.find(r);
    if (it != pres_.differential.end() && !it->second.empty())
      throw InputError("r-generator '" + pres_.generators[r].name + "' must have zero differential");
  }
  for (const auto& rel : pres_.relations) {
    if (rel.empty()) continue;
    int d = pres_.degree_of(rel.begin()->first);
    if (d < 1) throw InputError("relation of degree 0 is not allowed");
    for (const auto& [m, c] : rel)
      if (pres_.degree_of(m) != d)
        throw InputError("non-homogeneous relation detected in algebra '" + pres_.name + "'");
  }
  for (const auto& [gen, poly] : pres_.augmentation) {
    int gd = pres_.generators[gen].degree;
    for (const auto& [m, c] : poly) {
      if (pres_.degree_of(m) != gd)
        throw InputError("augmentation of '" + pres_.generators[gen].name +
                         "' is not degree-preserving");
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && !pres_.is_r_generator(static_cast<int>(i)))
          throw InputError("augmentation of '" + pres_.generators[gen].name +
                           "' must land in the r-generators");
    }
    if (pres_.is_r_generator(gen)) {
      Monomial id(pres_.generators.size(), 0);
      id[gen] = 1;
      Polynomial expect{{id, Rational(1)}};
      if (poly != expect)
        throw InputError("augmentation must restrict to the identity on r-generator '" +
                         pres_.generators[gen].name + "'");
    }
  }
  for (const auto& [gen, poly] : pres_.differential) {
    int gd = pres_.generators[gen].degree;
    for (const auto& [m, c] : poly)
      if (pres_.degree_of(m) != gd + 1)
        throw InputError("differential of '" + pres_.generators[gen].name +
                         "' must raise degree by exactly 1");
  }
}

std::vector<Monomial> AlgebraContext::free_monomials(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(pres_.generators.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
    if (i == cur.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int d = pres_.generators[i].degree;
    int emax = pres_.generators[i].odd() ? std::min(1, rem / d) : rem / d;
    for (int e = emax; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, rem - e * d);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  return out;
}

std::vector<Monomial> AlgebraContext::r_monomials(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur(pres_.generators.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
    if (i == pres_.r_generators.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int g = pres_.r_generators[i];
    int d = pres_.generators[g].degree;
    for (int e = rem / d; e >= 0; --e) {
      cur[g] = e;
      rec(i + 1, rem - e * d);
    }
    cur[g] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), mono_greater);
  return out;
}

const AlgebraContext::DegreeData& AlgebraContext::degree_data(int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = degree_memo_.find(n);
  if (it != degree_memo_.end()) return *it->second;

  auto data = std::make_unique<DegreeData>();
  data->free_monos = free_monomials(n);
  for (size_t i = 0; i < data->free_monos.size(); ++i)
    data->free_index[data->free_monos[i]] = static_cast<int>(i);
  data->ideal = EchelonSpan(static_cast<int>(data->free_monos.size()));

  for (const auto& rel : pres_.relations) {
    if (rel.empty()) continue;
    int dr = pres_.degree_of(rel.begin()->first);
    if (dr > n) continue;
    for (const auto& m : free_monomials(n - dr)) {
      Polynomial shifted = poly_mul(Polynomial{{m, Rational(1)}}, rel, pres_.generators);
      SparseRow row;
      for (const auto& [mono, c] : shifted) row[data->free_index.at(mono)] = c;
      data->ideal.insert(std::move(row));
    }
  }
  for (size_t i = 0; i < data->free_monos.size(); ++i) {
    if (!data->ideal.has_pivot(static_cast<int>(i))) {
      data->basis_idx[data->free_monos[i]] = static_cast<int>(data->basis.size());
      data->basis.push_back(data->free_monos[i]);
    }
  }
  auto* ptr = data.get();
  degree_memo_[n] = std::move(data);
  return *ptr;
}

const std::vector<Monomial>& AlgebraContext::degree_basis(int n) const {
  return degree_data(n).basis;
}

int AlgebraContext::basis_index(const Monomial& m, int degree) const {
  const auto& dd = degree_data(degree);
  auto it = dd.basis_idx.find(m);
  if (it == dd.basis_idx.end()) throw InputError("element not in normal form");
  return it->second;
}

GradedElement AlgebraContext::normal_form(const Polynomial& p, int degree) const {
  const auto& dd = degree_data(degree);
  SparseRow row;
  for (const auto& [m, c] : p) {
    auto it = dd.free_index.find(m);
    if (it == dd.free_index.end())
      throw InputError("monomial of wrong degree in normal_form");
    row[it->second] = c;
  }
  row = dd.ideal.reduce(std::move(row));
  GradedElement out;
  out.degree = degree;
  for (const auto& [col, c] : row) out.terms[dd.free_monos[col]] = c;
  return out;
}

GradedElement AlgebraContext::element(const Polynomial& p) const {
  if (p.empty()) return GradedElement{0, {}};
  int d = pres_.degree_of(p.begin()->first);
  for (const auto& [m, c] : p)
    if (pres_.degree_of(m) != d) throw InputError("non-homogeneous element");
  return normal_form(p, d);
}

GradedElement AlgebraContext::multiply(const GradedElement& a, const GradedElement& b) const {
  Polynomial prod = poly_mul(a.terms, b.terms, pres_.generators);
  return normal_form(prod, a.degree + b.degree);
}

GradedElement AlgebraContext::add(const GradedElement& a, const GradedElement& b) const {
  if (a.zero()) return b.zero() ? a : b;
  if (b.zero()) return a;
  if (a.degree != b.degree) throw InputError("degree mismatch in add");
  GradedElement out;
  out.degree = a.degree;
  out.terms = poly_add(a.terms, b.terms);
  return out;
}

GradedElement AlgebraContext::scale(const GradedElement& a, const Rational& s) const {
  GradedElement out;
  out.degree = a.degree;
  out.terms = poly_scale(a.terms, s);
  return out;
}

Polynomial AlgebraContext::augment(const GradedElement& a) const {
  const size_t ngen = pres_.generators.size();
  Polynomial one{{Monomial(ngen, 0), Rational(1)}};
  Polynomial result;
  for (const auto& [m, c] : a.terms) {
    Polynomial term = one;
    for (size_t g = 0; g < ngen; ++g) {
      for (int e = 0; e < m[g]; ++e) {
        Polynomial eps;
        if (pres_.is_r_generator(static_cast<int>(g))) {
          Monomial self(ngen, 0);
          self[g] = 1;
          eps = Polynomial{{self, Rational(1)}};
        } else {
          auto it = pres_.augmentation.find(static_cast<int>(g));
          if (it != pres_.augmentation.end()) eps = it->second;
        }
        term = poly_mul(term, eps, pres_.generators);
        if (term.empty()) break;
      }
      if (term.empty()) break;
    }
    result = poly_add(result, poly_scale(term, c));
  }
  return result;
}

Rational AlgebraContext::augment_k(const GradedElement& a) const {
  Polynomial p = augment(a);
  Monomial unit(pres_.generators.size(), 0);
  auto it = p.find(unit);
  return it == p.end() ? Rational(0) : it->second;
}

const Subspace& AlgebraContext::augmentation_ideal(int degree, AugTarget target) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = aug_memo_.find({degree, target});
    if (it != aug_memo_.end()) return *it->second;
  }
  const auto& basis = degree_basis(degree);
  std::vector<Monomial> rmonos =
      target == AugTarget::OverR ? r_monomials(degree)
                                 : (degree == 0 ? r_monomials(0) : std::vector<Monomial>{});
  std::map<Monomial, int> rindex;
  for (size_t i = 0; i < rmonos.size(); ++i) rindex[rmonos[i]] = static_cast<int>(i);

  RationalMatrix m(static_cast<int>(rmonos.size()), static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    GradedElement e{degree, {{basis[j], Rational(1)}}};
    Polynomial img = augment(e);
    for (const auto& [mono, c] : img) {
      if (target == AugTarget::OverK && pres_.degree_of(mono) > 0) continue;
      m.set(rindex.at(mono), static_cast<int>(j), c);
    }
  }
  auto ker = std::make_unique<Subspace>(kernel_basis(m));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = aug_memo_.try_emplace({degree, target}, std::move(ker));
  return *it->second;
}

std::vector<GradedElement> AlgebraContext::augmentation_ideal_basis(int degree,
                                                                    AugTarget target) const {
  const Subspace& ker = augmentation_ideal(degree, target);
  std::vector<GradedElement> out;
  for (int i = 0; i < ker.dim(); ++i)
    out.push_back(from_coordinates(ker.basis_vector(i), degree));
  return out;
}

GradedElement AlgebraContext::differential(const GradedElement& a) const {
  const size_t ngen = pres_.generators.size();
  Polynomial result;
  for (const auto& [m, c] : a.terms) {
    int prefix_deg = 0;
    for (size_t g = 0; g < ngen; ++g) {
      if (m[g] > 0) {
        auto it = pres_.differential.find(static_cast<int>(g));
        if (it != pres_.differential.end() && !it->second.empty()) {
          Monomial before(ngen, 0), rest(ngen, 0);
          for (size_t j = 0; j < g; ++j) before[j] = m[j];
          rest[g] = m[g] - 1;
          for (size_t j = g + 1; j < ngen; ++j) rest[j] = m[j];
          Polynomial term = poly_mul(Polynomial{{before, Rational(1)}}, it->second,
                                     pres_.generators);
          term = poly_mul(term, Polynomial{{rest, Rational(1)}}, pres_.generators);
          Rational coeff = c * m[g];
          if (prefix_deg % 2 != 0) coeff = -coeff;
          result = poly_add(result, poly_scale(term, coeff));
        }
      }
      prefix_deg += m[g] * pres_.generators[g].degree;
    }
  }
  return normal_form(result, a.degree + 1);
}

Vec AlgebraContext::coordinates(const GradedElement& a) const {
  const auto& basis = degree_basis(a.degree);
  Vec v(basis.size(), Rational(0));
  for (const auto& [m, c] : a.terms) v[basis_index(m, a.degree)] = c;
  return v;
}

GradedElement AlgebraContext::from_coordinates(const Vec& v, int degree) const {
  const auto& basis = degree_basis(degree);
  if (v.size() != basis.size()) throw InputError("coordinate size mismatch");
  GradedElement out;
  out.degree = degree;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.terms[basis[i]] = v[i];
  return out;
}

void AlgebraContext::check_r_embedding(int max_degree) const {
  for (int n = 0; n <= max_degree; ++n) {
    EchelonSpan span(static_cast<int>(degree_basis(n).size()));
    for (const auto& rm : r_monomials(n)) {
      GradedElement nf = normal_form(Polynomial{{rm, Rational(1)}}, n);
      if (!span.insert(sparse(coordinates(nf))))
        throw InvariantError("R does not embed freely: dependent r-monomial in degree " +
                             std::to_string(n));
    }
  }
}

}  // namespace torbar
