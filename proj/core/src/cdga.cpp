#include "torbar/cdga.hpp"

namespace torbar {

CdgaInstance::CdgaInstance(std::shared_ptr<const AlgebraContext> ctx, int max_degree)
    : ctx_(std::move(ctx)), max_degree_(max_degree) {
  if (max_degree_ < 0) throw InputError("max_degree must be non-negative");
  const auto& pres = ctx_->presentation();
  // d^2 = 0 on generators extends to the whole algebra by Leibniz; the
  // differential must also preserve the relation ideal.
  for (const auto& [gen, dpoly] : pres.differential) {
    if (dpoly.empty()) continue;
    GradedElement dg{pres.generators[gen].degree + 1, dpoly};
    GradedElement ddg = ctx_->differential(dg);
    if (!ddg.zero())
      throw InvariantError("d^2 != 0 on generator '" + pres.generators[gen].name + "'");
  }
  for (const auto& rel : pres.relations) {
    if (rel.empty()) continue;
    GradedElement fake{pres.degree_of(rel.begin()->first), rel};
    GradedElement drel = ctx_->differential(fake);
    if (!drel.zero())
      throw InvariantError("differential does not preserve the relation ideal");
  }
  // eps d = 0: the augmentation is a chain map into R with zero differential.
  for (const auto& [gen, dpoly] : pres.differential) {
    if (dpoly.empty()) continue;
    GradedElement dg = ctx_->normal_form(dpoly, pres.generators[gen].degree + 1);
    if (!ctx_->augment(dg).empty())
      throw InvariantError("augmentation is not a chain map (eps(d " +
                           pres.generators[gen].name + ") != 0)");
  }
}

GradedElement CdgaInstance::differential(const GradedElement& a) const {
  if (a.degree >= max_degree_ + 2)
    throw TruncationError("differential request beyond truncation degree");
  return ctx_->differential(a);
}

RationalMatrix CdgaInstance::d_matrix(int n) const {
  const auto& src = ctx_->degree_basis(n);
  const auto& dst = ctx_->degree_basis(n + 1);
  RationalMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    GradedElement e{n, {{src[j], Rational(1)}}};
    GradedElement de = ctx_->differential(e);
    for (const auto& [mono, c] : de.terms)
      m.set(ctx_->basis_index(mono, n + 1), static_cast<int>(j), c);
  }
  return m;
}

Subspace CdgaInstance::cocycles(int n) const { return kernel_basis(d_matrix(n)); }

Subspace CdgaInstance::coboundaries(int n) const {
  Subspace img(static_cast<int>(ctx_->degree_basis(n).size()));
  if (n == 0) return img;
  RationalMatrix m = d_matrix(n - 1);
  for (int j = 0; j < m.cols(); ++j) {
    Vec col(m.rows(), Rational(0));
    for (int r = 0; r < m.rows(); ++r) col[r] = m.at(r, j);
    img.insert(col);
  }
  return img;
}

CohomologyTable cohomology(const CdgaInstance& inst, bool want_ring) {
  const AlgebraContext& A = inst.algebra();
  CohomologyTable table;
  for (int n = 0; n <= inst.max_degree(); ++n) {
    Subspace z = inst.cocycles(n);
    Subspace b = inst.coboundaries(n);
    table.betti[n] = z.dim() - b.dim();
    Subspace acc = b;
    std::vector<GradedElement>& reps = table.representatives[n];
    for (int i = 0; i < z.dim(); ++i) {
      Vec v = z.basis_vector(i);
      if (acc.insert(v)) reps.push_back(A.from_coordinates(v, n));
    }
  }
  if (want_ring) {
    for (const auto& [p, reps_p] : table.representatives) {
      for (const auto& [q, reps_q] : table.representatives) {
        if (p + q > inst.max_degree()) continue;
        for (size_t i = 0; i < reps_p.size(); ++i)
          for (size_t j = 0; j < reps_q.size(); ++j) {
            GradedElement prod = A.multiply(reps_p[i], reps_q[j]);
            table.ring_constants[{p, static_cast<int>(i), q, static_cast<int>(j)}] =
                inst.class_coordinates(prod, table);
          }
      }
    }
  }
  return table;
}

Vec CdgaInstance::class_coordinates(const GradedElement& z,
                                    const CohomologyTable& table) const {
  int n = z.degree;
  const auto& reps = table.representatives.at(n);
  Subspace b = coboundaries(n);
  int dim = static_cast<int>(ctx_->degree_basis(n).size());
  // Columns: coboundary basis then representatives; rep coefficients are
  // unique because reps are independent modulo coboundaries.
  RationalMatrix m(dim, b.dim() + static_cast<int>(reps.size()));
  for (int j = 0; j < b.dim(); ++j) {
    Vec col = b.basis_vector(j);
    for (int r = 0; r < dim; ++r) m.set(r, j, col[r]);
  }
  for (size_t j = 0; j < reps.size(); ++j) {
    Vec col = ctx_->coordinates(reps[j]);
    for (int r = 0; r < dim; ++r) m.set(r, b.dim() + static_cast<int>(j), col[r]);
  }
  auto sol = preimage(m, ctx_->coordinates(z));
  if (!sol) throw InvariantError("class_coordinates: input is not a cocycle class member");
  Vec out(reps.size(), Rational(0));
  for (size_t j = 0; j < reps.size(); ++j) out[j] = (*sol)[b.dim() + static_cast<int>(j)];
  return out;
}

MasseyResult massey_triple(const GradedElement& a, const GradedElement& b,
                           const GradedElement& c, const CdgaInstance& inst) {
  const AlgebraContext& A = inst.algebra();
  const int N = inst.max_degree();
  const int w_deg = a.degree + b.degree + c.degree - 1;
  if (w_deg > N || a.degree + b.degree > N + 1 || b.degree + c.degree > N + 1)
    throw TruncationError("massey_triple: degrees exceed truncation");
  for (const GradedElement* x : {&a, &b, &c})
    if (!A.differential(*x).zero()) throw InputError("massey_triple: input is not a cocycle");

  MasseyResult res;
  GradedElement ab = A.multiply(a, b);
  GradedElement bc = A.multiply(b, c);
  auto y1_coords = preimage(inst.d_matrix(a.degree + b.degree - 1), A.coordinates(ab));
  auto y2_coords = preimage(inst.d_matrix(b.degree + c.degree - 1), A.coordinates(bc));
  if (!y1_coords || !y2_coords) return res;  // a product class is nonzero: undefined
  res.defined = true;

  GradedElement y1 = A.from_coordinates(*y1_coords, a.degree + b.degree - 1);
  GradedElement y2 = A.from_coordinates(*y2_coords, b.degree + c.degree - 1);
  GradedElement w = A.add(A.multiply(y1, c),
                          A.scale(A.multiply(a, y2), a.degree % 2 == 0 ? Rational(-1) : Rational(1)));
  res.representative = w;

  // Indeterminacy [a] H^{deg b + deg c - 1} + H^{deg a + deg b - 1} [c],
  // spanned inside the cocycle space together with the coboundaries.
  const Subspace cob = inst.coboundaries(w_deg);
  Subspace span = cob;
  Subspace indet(static_cast<int>(A.degree_basis(w_deg).size()));
  auto absorb = [&](const GradedElement& left, const Subspace& z, bool left_factor,
                    int zdeg) {
    for (int i = 0; i < z.dim(); ++i) {
      GradedElement zi = A.from_coordinates(z.basis_vector(i), zdeg);
      GradedElement prod = left_factor ? A.multiply(left, zi) : A.multiply(zi, left);
      Vec coords = A.coordinates(prod);
      span.insert(coords);
      indet.insert(cob.reduce(coords));
    }
  };
  absorb(a, inst.cocycles(b.degree + c.degree - 1), true, b.degree + c.degree - 1);
  absorb(c, inst.cocycles(a.degree + b.degree - 1), false, a.degree + b.degree - 1);
  res.indeterminacy_dim = indet.dim();
  res.contains_zero = span.contains(A.coordinates(w));
  return res;
}

namespace {

struct QuotientSlice {
  Subspace ideal;          // ker eps in degree coordinates
  EchelonSpan square;      // (ker eps)^2 slice
  std::vector<Vec> reps;   // quotient representatives
  QuotientSlice() : ideal(0), square(0) {}
};

}  // namespace

std::map<int, int> indecomposables_homotopy(const CdgaInstance& inst, AugTarget target) {
  const AlgebraContext& A = inst.algebra();
  const int N = inst.max_degree();

  std::map<int, QuotientSlice> slices;
  for (int n = 1; n <= N + 1; ++n) {
    QuotientSlice s;
    s.ideal = A.augmentation_ideal(n, target);
    int dim = static_cast<int>(A.degree_basis(n).size());
    s.square = EchelonSpan(dim);
    for (int p = 1; p < n; ++p) {
      const Subspace& ip = A.augmentation_ideal(p, target);
      const Subspace& iq = A.augmentation_ideal(n - p, target);
      for (int i = 0; i < ip.dim(); ++i)
        for (int j = 0; j < iq.dim(); ++j) {
          GradedElement prod = A.multiply(A.from_coordinates(ip.basis_vector(i), p),
                                          A.from_coordinates(iq.basis_vector(j), n - p));
          s.square.insert(sparse(A.coordinates(prod)));
        }
    }
    EchelonSpan acc = s.square;
    for (int i = 0; i < s.ideal.dim(); ++i) {
      Vec v = s.ideal.basis_vector(i);
      if (acc.insert(sparse(v))) s.reps.push_back(v);
    }
    slices[n] = std::move(s);
  }

  // Induced differential between quotient slices, then its cohomology.
  auto dbar = [&](int n) {
    const auto& src = slices.at(n);
    const auto& dst = slices.at(n + 1);
    RationalMatrix m(static_cast<int>(dst.reps.size()),
                     static_cast<int>(src.reps.size()));
    int dim = static_cast<int>(A.degree_basis(n + 1).size());
    RationalMatrix basis_mat(dim, static_cast<int>(dst.square.rows().size()) +
                                      static_cast<int>(dst.reps.size()));
    int col = 0;
    for (const auto& [piv, row] : dst.square.rows()) {
      for (const auto& [r, x] : row) basis_mat.set(r, col, x);
      ++col;
    }
    int rep_base = col;
    for (const auto& rep : dst.reps) {
      for (int r = 0; r < dim; ++r) basis_mat.set(r, col, rep[r]);
      ++col;
    }
    for (size_t j = 0; j < src.reps.size(); ++j) {
      GradedElement de = A.differential(A.from_coordinates(src.reps[j], n));
      auto sol = preimage(basis_mat, A.coordinates(de));
      if (!sol)
        throw InvariantError("augmentation is not a chain map: d does not preserve ker eps");
      for (size_t i = 0; i < dst.reps.size(); ++i)
        m.set(static_cast<int>(i), static_cast<int>(j), (*sol)[rep_base + static_cast<int>(i)]);
    }
    return m;
  };

  std::map<int, RationalMatrix> mats;
  for (int n = 1; n <= N; ++n) mats.emplace(n, dbar(n));

  std::map<int, int> pi;
  for (int n = 1; n <= N; ++n) {
    int z = kernel_basis(mats.at(n)).dim();
    int b = n >= 2 ? rank(mats.at(n - 1)) : 0;
    pi[n] = z - b;
  }
  return pi;
}

}  // namespace torbar
