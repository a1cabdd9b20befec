#include "torbar/tor.hpp"

#include <sstream>

namespace torbar {

namespace {

std::vector<Vec> matrix_columns(const RationalMatrix& m) {
  std::vector<Vec> cols(m.cols(), Vec(m.rows(), Rational(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) cols[c][r] = v;
  return cols;
}

struct DegreeHomology {
  Subspace boundaries{0};
  std::vector<Vec> rep_coords;
};

DegreeHomology degree_homology(const BarContext& ctx, int n, int& betti_out) {
  DegreeHomology dh;
  const int dim = ctx.complex_dim(n);
  dh.boundaries = Subspace(dim);
  if (n > 0) {
    for (auto& col : matrix_columns(ctx.D_matrix(n - 1))) dh.boundaries.insert(col);
  }
  Subspace cycles = kernel_basis(ctx.D_matrix(n));
  betti_out = cycles.dim() - dh.boundaries.dim();

  Subspace span = dh.boundaries;
  for (int i = 0; i < cycles.dim(); ++i) {
    Vec v = cycles.basis_vector(i);
    if (!span.insert(v)) continue;
    Vec r = dh.boundaries.reduce(v);
    Rational lead(0);
    for (const auto& x : r)
      if (x != 0) {
        lead = x;
        break;
      }
    for (auto& x : r) x /= lead;
    dh.rep_coords.push_back(std::move(r));
  }
  return dh;
}

BarChain chain_from_coords(const BarContext& ctx, int n, const Vec& coords) {
  BarChain ch;
  ch.degree = n;
  auto basis = ctx.complex_basis(n);
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) ch.terms[basis[i]] = coords[i];
  return ch;
}

// class of a projected cocycle over [boundary basis | generator reps]
std::optional<Vec> class_coords(const DegreeHomology& dh, const Vec& v) {
  const int dim = static_cast<int>(v.size());
  const int nb = dh.boundaries.dim();
  const int ng = static_cast<int>(dh.rep_coords.size());
  RationalMatrix m(dim, nb + ng);
  for (int j = 0; j < nb; ++j) {
    Vec b = dh.boundaries.basis_vector(j);
    for (int r = 0; r < dim; ++r)
      if (b[r] != 0) m.set(r, j, b[r]);
  }
  for (int j = 0; j < ng; ++j)
    for (int r = 0; r < dim; ++r)
      if (dh.rep_coords[j][r] != 0) m.set(r, nb + j, dh.rep_coords[j][r]);
  auto x = preimage(m, v);
  if (!x) return std::nullopt;
  return Vec(x->begin() + nb, x->end());
}

}  // namespace

TorResult tor_compute(const TorRequest& req) {
  const AlgebraContext& A = *req.algebra;
  if (A.presentation().has_differential())
    throw InputError("tor input must carry the zero differential (a cohomology ring)");
  if (!A.degree_basis(1).empty())
    throw InputError("tor input is not simply connected (degree-1 content)");
  const int N = req.max_degree;

  BarMode primary = req.mode == TorMode::OverK ? BarMode::OverK : BarMode::OverR;
  BarContext ctx(req.algebra, primary, N);

  TorResult res;
  res.betti.assign(N + 1, 0);
  res.generators.assign(N + 1, {});
  std::vector<DegreeHomology> hom(N + 1);

  for (int n = 0; n <= N; ++n) {
    hom[n] = degree_homology(ctx, n, res.betti[n]);
    for (size_t i = 0; i < hom[n].rep_coords.size(); ++i) {
      TorGenerator g;
      g.degree = n;
      g.index = static_cast<int>(i);
      g.coords = hom[n].rep_coords[i];
      g.rep = chain_from_coords(ctx, n, g.coords);
      if (auto img = ctx.project(ctx.bar_D(g.rep)); img != Vec(img.size(), Rational(0)))
        throw InvariantError("extracted generator is not a cocycle");
      g.display = chain_str(g.rep, ctx);
      res.generators[n].push_back(std::move(g));
    }
  }

  if (req.mode == TorMode::Both) {
    BarContext other(req.algebra, BarMode::OverK, N);
    for (int n = 0; n <= N; ++n) {
      int b = 0;
      degree_homology(other, n, b);
      if (b != res.betti[n])
        throw InvariantError("over-k and over-R Betti numbers diverge at degree " +
                             std::to_string(n));
    }
    res.modes_agree = true;
  }

  if (req.want_ring) {
    auto product_entry = [&](const BarChain& a, const BarChain& b) {
      RingEntry e;
      int p = a.degree + b.degree;
      if (p > N) {
        e.outside_truncation = true;
        return e;
      }
      Vec v = ctx.project(ctx.shuffle_mul(a, b));
      auto cc = class_coords(hom[p], v);
      if (!cc) throw InvariantError("generator product is not a cocycle class");
      e.coeffs = std::move(*cc);
      return e;
    };

    for (int n1 = 0; n1 <= N; ++n1)
      for (const auto& g1 : res.generators[n1])
        for (int n2 = n1; n2 <= N; ++n2)
          for (const auto& g2 : res.generators[n2])
            res.ring_constants[{n1, g1.index, n2, g2.index}] =
                product_entry(g1.rep, g2.rep);

    const auto& pres = A.presentation();
    for (int rg : pres.r_generators) {
      BarWord w;
      w.left = Monomial(pres.generators.size(), 0);
      w.right = w.left;
      w.left[rg] = 1;
      BarChain rc = ctx.word_chain(w);
      for (int n = 0; n <= N; ++n)
        for (const auto& g : res.generators[n])
          res.r_action[{rg, {n, g.index}}] = product_entry(rc, g.rep);
    }
  }

  if (!req.want_representatives)
    for (auto& gs : res.generators)
      for (auto& g : gs) g.rep = BarChain{};

  return res;
}

static CrosscheckReport betti_agreement(const TorResult& tor,
                                        const CohomologyTable& oracle, int max_degree) {
  CrosscheckReport rep;
  for (int n = 0; n <= max_degree && n < static_cast<int>(tor.betti.size()); ++n) {
    auto it = oracle.betti.find(n);
    int ob = it == oracle.betti.end() ? 0 : it->second;
    if (ob != tor.betti[n]) {
      rep.ok = false;
      rep.first_divergent_degree = n;
      rep.detail = "betti mismatch at degree " + std::to_string(n) + ": tor " +
                   std::to_string(tor.betti[n]) + ", oracle " + std::to_string(ob);
      return rep;
    }
  }
  return rep;
}

CrosscheckReport crosscheck_oracle(const TorResult& tor, const CohomologyTable& oracle,
                                   int max_degree) {
  CrosscheckReport rep = betti_agreement(tor, oracle, max_degree);
  if (!rep.ok) return rep;
  if (tor.ring_constants.empty() || oracle.ring_constants.empty()) return rep;

  auto betti_at = [&](int n) {
    auto it = oracle.betti.find(n);
    return it == oracle.betti.end() ? 0 : it->second;
  };

  // Bases differ between the two rings, so compare the one basis-free
  // number per bidegree: the rank of the multiplication pairing.
  for (int p = 1; p <= max_degree; ++p) {
    for (int q = p; p + q <= max_degree; ++q) {
      int bp = betti_at(p), bq = betti_at(q), bpq = betti_at(p + q);
      if (bp == 0 || bq == 0) continue;
      RationalMatrix mt(bpq, bp * bq), mo(bpq, bp * bq);
      bool complete = true;
      for (int i = 0; i < bp && complete; ++i) {
        for (int j = 0; j < bq && complete; ++j) {
          auto t = tor.ring_constants.find({p, i, q, j});
          auto o = oracle.ring_constants.find({p, i, q, j});
          if (t == tor.ring_constants.end() || o == oracle.ring_constants.end() ||
              t->second.outside_truncation) {
            complete = false;
            break;
          }
          for (int r = 0; r < bpq; ++r) {
            if (t->second.coeffs[r] != 0) mt.set(r, i * bq + j, t->second.coeffs[r]);
            if (o->second[r] != 0) mo.set(r, i * bq + j, o->second[r]);
          }
        }
      }
      if (!complete) continue;
      if (rank(mt) != rank(mo)) {
        rep.ok = false;
        rep.first_divergent_degree = p + q;
        rep.detail = "multiplication rank mismatch for degrees (" + std::to_string(p) +
                     ", " + std::to_string(q) + ")";
        return rep;
      }
    }
  }
  return rep;
}

std::string mono_str(const Monomial& m, const AlgebraPresentation& pres) {
  std::string out;
  for (size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += pres.generators[g].name;
    if (m[g] > 1) out += "^" + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string element_str(const GradedElement& e, const AlgebraPresentation& pres) {
  if (e.zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    std::string cs = rational_str(c < 0 ? -c : c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (cs != "1")
      out += cs + "*" + mono_str(m, pres);
    else
      out += mono_str(m, pres);
  }
  return out;
}

std::string word_str(const BarWord& w, const BarContext& ctx) {
  const auto& pres = ctx.middle().presentation();
  std::string out = "(" + mono_str(w.left, pres);
  for (const auto& s : w.slots) {
    GradedElement e = ctx.slot_basis(s.degree).at(s.index);
    std::string es = element_str(e, pres);
    if (e.terms.size() > 1) es = "(" + es + ")";
    out += " | " + es;
  }
  out += " | " + mono_str(w.right, pres) + ")";
  return out;
}

std::string chain_str(const BarChain& ch, const BarContext& ctx) {
  if (ch.zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : ch.terms) {
    std::string cs = rational_str(c < 0 ? -c : c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (cs != "1") out += cs + "*";
    out += word_str(w, ctx);
  }
  return out;
}

}  // namespace torbar
