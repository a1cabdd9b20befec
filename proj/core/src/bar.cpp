#include "torbar/bar.hpp"

#include <algorithm>
#include <functional>

namespace torbar {

namespace {

void chain_accumulate(BarChain& acc, const BarWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = acc.terms.find(w);
  if (it == acc.terms.end()) {
    acc.terms[w] = c;
  } else {
    it->second += c;
    if (it->second == 0) acc.terms.erase(it);
  }
}

Monomial mono_mul_even(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

BarChain chain_add(const BarChain& a, const BarChain& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.degree != b.degree) throw InputError("bar chain degree mismatch in add");
  BarChain out = a;
  for (const auto& [w, c] : b.terms) chain_accumulate(out, w, c);
  return out;
}

BarChain chain_scale(const BarChain& a, const Rational& s) {
  BarChain out;
  out.degree = a.degree;
  if (s == 0) return out;
  for (const auto& [w, c] : a.terms) out.terms[w] = c * s;
  return out;
}

BarContext::BarContext(std::shared_ptr<const AlgebraContext> middle, BarMode mode,
                       int max_degree)
    : middle_(std::move(middle)), mode_(mode), max_degree_(max_degree) {
  if (max_degree_ < 0) throw InputError("max_degree must be non-negative");
  ngen_ = static_cast<int>(middle_->presentation().generators.size());
  if (middle_->presentation().has_differential()) {
    // The middle may carry a differential; validate d^2 = 0 on generators.
    for (const auto& [gen, dpoly] : middle_->presentation().differential) {
      if (dpoly.empty()) continue;
      GradedElement dg{middle_->presentation().generators[gen].degree + 1, dpoly};
      if (!middle_->differential(dg).zero())
        throw InvariantError("bar middle algebra: d^2 != 0");
    }
  }
  middle_->check_r_embedding(2 * max_degree_ + 2);
}

const std::vector<GradedElement>& BarContext::slot_basis(int degree) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = slot_memo_.find(degree);
    if (it != slot_memo_.end()) return *it->second;
  }
  auto out = std::make_unique<std::vector<GradedElement>>();
  if (degree >= 1) {
    if (mode_ == BarMode::OverK) {
      for (const auto& m : middle_->degree_basis(degree))
        out->push_back(GradedElement{degree, {{m, Rational(1)}}});
    } else {
      *out = middle_->augmentation_ideal_basis(degree, AugTarget::OverR);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = slot_memo_.try_emplace(degree, std::move(out));
  return *it->second;
}

GradedElement BarContext::slot_element(const SlotRef& s) const {
  return slot_basis(s.degree).at(s.index);
}

std::vector<std::pair<SlotRef, Rational>> BarContext::slot_expand(
    const GradedElement& e) const {
  std::vector<std::pair<SlotRef, Rational>> out;
  if (e.zero()) return out;
  if (mode_ == BarMode::OverK) {
    for (const auto& [m, c] : e.terms)
      out.push_back({SlotRef{e.degree, middle_->basis_index(m, e.degree)}, c});
  } else {
    auto coeffs = solve_modulo(middle_->coordinates(e),
                               middle_->augmentation_ideal(e.degree, AugTarget::OverR));
    if (!coeffs)
      throw InvariantError("element does not lie in the slot space (ker eps)");
    for (size_t i = 0; i < coeffs->size(); ++i)
      if ((*coeffs)[i] != 0)
        out.push_back({SlotRef{e.degree, static_cast<int>(i)}, (*coeffs)[i]});
  }
  return out;
}

int BarContext::word_tensor_degree(const BarWord& w) const {
  int d = middle_->presentation().degree_of(w.left) +
          middle_->presentation().degree_of(w.right);
  for (const auto& s : w.slots) d += s.degree;
  return d;
}

int BarContext::word_complex_degree(const BarWord& w) const {
  return word_tensor_degree(w) - static_cast<int>(w.slots.size());
}

void BarContext::enumerate_words(int complex_degree, Slice& out) const {
  if (!middle_->degree_basis(1).empty())
    throw InputError("middle algebra is not simply connected (degree-1 content)");

  const auto& pres = middle_->presentation();
  std::vector<std::pair<int, std::vector<Monomial>>> outer;  // degree -> monomials
  for (int d = 0; d <= complex_degree; ++d) {
    auto ms = middle_->r_monomials(d);
    if (!ms.empty()) outer.push_back({d, std::move(ms)});
  }

  BarWord cur;
  cur.left = Monomial(ngen_, 0);
  cur.right = Monomial(ngen_, 0);

  std::function<void(int)> fill_slots = [&](int rem) {
    if (rem == 0) {
      // no more slots; right factor already fixed by caller
      out.words.push_back(cur);
      return;
    }
    for (int d = 2; d - 1 <= rem; ++d) {
      const auto& sb = slot_basis(d);
      if (sb.empty()) continue;
      for (int i = 0; i < static_cast<int>(sb.size()); ++i) {
        cur.slots.push_back(SlotRef{d, i});
        fill_slots(rem - (d - 1));
        cur.slots.pop_back();
      }
    }
  };

  for (const auto& [ld, lms] : outer) {
    for (const auto& [rd, rms] : outer) {
      int rem_total = complex_degree - ld - rd;
      if (rem_total < 0) continue;
      for (const auto& lm : lms) {
        for (const auto& rm : rms) {
          cur.left = lm;
          cur.right = rm;
          // words with zero slots only when rem_total == 0
          if (rem_total == 0) {
            out.words.push_back(cur);
          } else {
            fill_slots(rem_total);
          }
        }
      }
    }
  }
  (void)pres;

  // Canonical die-first order: words with outer content pivot early so the
  // r-move quotient keeps slot-heavy representatives; see quotient_over_R.
  auto key_less = [&](const BarWord& a, const BarWord& b) {
    int rda = pres.degree_of(a.right), rdb = pres.degree_of(b.right);
    if (rda != rdb) return rda > rdb;
    int lda = pres.degree_of(a.left), ldb = pres.degree_of(b.left);
    if (lda != ldb) return lda > ldb;
    if (a.slots.size() != b.slots.size()) return a.slots.size() < b.slots.size();
    if (a.slots != b.slots) return a.slots < b.slots;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  };
  std::sort(out.words.begin(), out.words.end(), key_less);
  for (size_t i = 0; i < out.words.size(); ++i)
    out.index[out.words[i]] = static_cast<int>(i);
}

const BarContext::Slice& BarContext::slice(int complex_degree) const {
  if (complex_degree > max_degree_ + 1)
    throw TruncationError("bar slice request beyond truncation degree");
  if (complex_degree < 0) {
    static const Slice empty;
    return empty;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = slice_memo_.find(complex_degree);
    if (it != slice_memo_.end()) return *it->second;
  }
  auto s = std::make_unique<Slice>();
  enumerate_words(complex_degree, *s);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = slice_memo_.try_emplace(complex_degree, std::move(s));
  return *it->second;
}

const std::vector<BarWord>& BarContext::bar_basis(int complex_degree) const {
  return slice(complex_degree).words;
}

int BarContext::word_index(const BarWord& w) const {
  const Slice& s = slice(word_complex_degree(w));
  auto it = s.index.find(w);
  if (it == s.index.end()) throw InputError("word not in bar basis");
  return it->second;
}

BarChain BarContext::word_chain(const BarWord& w) const {
  BarChain ch;
  ch.degree = word_complex_degree(w);
  ch.terms[w] = 1;
  return ch;
}

BarChain BarContext::bar_d(const BarChain& ch) const {
  BarChain out;
  out.degree = ch.degree + 1;
  if (ch.degree > max_degree_) throw TruncationError("bar_d: degree overflow past N");
  const auto& pres = middle_->presentation();
  if (!pres.has_differential()) return out;
  for (const auto& [w, coeff] : ch.terms) {
    int prefix = pres.degree_of(w.left);
    for (size_t p = 0; p < w.slots.size(); ++p) {
      // epsilon_{p} for the prefix through slot p (exclusive), minus p
      int eps = prefix - static_cast<int>(p);
      GradedElement dslot = middle_->differential(slot_element(w.slots[p]));
      if (!dslot.zero()) {
        Rational sign = (eps % 2 + 2) % 2 == 0 ? Rational(-1) : Rational(1);  // (-1)^{eps+1}
        for (const auto& [ref, c] : slot_expand(dslot)) {
          BarWord nw = w;
          nw.slots[p] = ref;
          chain_accumulate(out, nw, coeff * c * sign);
        }
      }
      prefix += w.slots[p].degree;
    }
    // outer factors live in R, which carries the zero differential
  }
  return out;
}

BarChain BarContext::bar_delta(const BarChain& ch) const {
  BarChain out;
  out.degree = ch.degree + 1;
  if (ch.degree > max_degree_) throw TruncationError("bar_delta: degree overflow past N");
  const auto& pres = middle_->presentation();
  for (const auto& [w, coeff] : ch.terms) {
    const int k = static_cast<int>(w.slots.size());
    if (k == 0) continue;

    // Sign table, frozen: with eps_i the degree of the prefix through slot
    // i minus i, delta carries an overall minus against the merge terms
    //   (-1)^{eps_0} (left merge),
    //   (-1)^{eps_i} (slot i with slot i+1),
    //   (-1)^{eps_{k-1}+1} (right merge),
    // which makes d delta + delta d = 0 and D^2 = 0 (verified exhaustively).
    std::vector<int> eps(k + 1);
    int acc = pres.degree_of(w.left);
    eps[0] = acc;
    for (int i = 1; i <= k; ++i) {
      acc += w.slots[i - 1].degree;
      eps[i] = acc - i;
    }

    auto sign_of = [](int e) { return (e % 2 + 2) % 2 == 0 ? Rational(1) : Rational(-1); };

    // left merge: slot 1 lands in the left outer factor through eps
    {
      Rational s = -sign_of(eps[0]);
      Polynomial img = middle_->augment(slot_element(w.slots[0]));
      for (const auto& [rm, c] : img) {
        BarWord nw = w;
        nw.left = mono_mul_even(w.left, rm);
        nw.slots.erase(nw.slots.begin());
        chain_accumulate(out, nw, coeff * c * s);
      }
    }
    // middle merges
    for (int i = 1; i <= k - 1; ++i) {
      Rational s = -sign_of(eps[i]);
      GradedElement prod =
          middle_->multiply(slot_element(w.slots[i - 1]), slot_element(w.slots[i]));
      for (const auto& [ref, c] : slot_expand(prod)) {
        BarWord nw = w;
        nw.slots[i - 1] = ref;
        nw.slots.erase(nw.slots.begin() + i);
        chain_accumulate(out, nw, coeff * c * s);
      }
    }
    // right merge: slot k lands in the right outer factor
    {
      Rational s = -sign_of(eps[k - 1] + 1);
      Polynomial img = middle_->augment(slot_element(w.slots[k - 1]));
      for (const auto& [rm, c] : img) {
        BarWord nw = w;
        nw.right = mono_mul_even(w.right, rm);
        nw.slots.pop_back();
        chain_accumulate(out, nw, coeff * c * s);
      }
    }
  }
  return out;
}

BarChain BarContext::bar_D(const BarChain& ch) const {
  return chain_add(bar_d(ch), bar_delta(ch));
}

BarChain BarContext::mul_into_position(const BarWord& w, int pos, const Monomial& r,
                                       int rdeg) const {
  BarChain chn;
  chn.degree = word_complex_degree(w) + rdeg;
  const int k = static_cast<int>(w.slots.size());
  if (pos == 0) {
    BarWord nw = w;
    nw.left = mono_mul_even(w.left, r);
    chn.terms[nw] = 1;
  } else if (pos == k + 1) {
    BarWord nw = w;
    nw.right = mono_mul_even(w.right, r);
    chn.terms[nw] = 1;
  } else {
    GradedElement relem = middle_->normal_form(Polynomial{{r, Rational(1)}}, rdeg);
    GradedElement prod = middle_->multiply(relem, slot_element(w.slots[pos - 1]));
    for (const auto& [ref, c] : slot_expand(prod)) {
      BarWord nw = w;
      nw.slots[pos - 1] = ref;
      chain_accumulate(chn, nw, c);
    }
  }
  return chn;
}

BarChain BarContext::gen_chain(const BarWord& base, int rg, int pos) const {
  const int rdeg = middle_->presentation().generators[rg].degree;
  Monomial r(ngen_, 0);
  r[rg] = 1;
  return chain_add(mul_into_position(base, pos, r, rdeg),
                   chain_scale(mul_into_position(base, pos + 1, r, rdeg), -1));
}

BarChain BarContext::gen_s(const BarWord& base, int rg, int pos) const {
  const auto& pres = middle_->presentation();
  const int rdeg = pres.generators[rg].degree;
  Monomial r(ngen_, 0);
  r[rg] = 1;
  BarChain sval;
  sval.degree = word_complex_degree(base) + rdeg - 1;
  // s inserts r as a new slot after the position; the companion word with
  // a unit slot is erased by normalization
  int eps = pres.degree_of(base.left) + rdeg - pos;
  for (int j = 0; j < pos; ++j) eps += base.slots[j].degree;
  Rational sign = (eps % 2 + 2) % 2 == 0 ? Rational(-1) : Rational(1);
  GradedElement relem = middle_->normal_form(Polynomial{{r, Rational(1)}}, rdeg);
  for (const auto& [ref, c] : slot_expand(relem)) {
    BarWord nw = base;
    nw.slots.insert(nw.slots.begin() + pos, ref);
    chain_accumulate(sval, nw, c * sign);
  }
  return sval;
}

bool BarContext::homotopy_identity(int complex_degree) const {
  const auto& pres = middle_->presentation();
  auto sign_of = [](int e) { return (e % 2 + 2) % 2 == 0 ? Rational(1) : Rational(-1); };

  for (int rg : pres.r_generators) {
    const int rdeg = pres.generators[rg].degree;
    if (rdeg > complex_degree) continue;
    const Slice& base = slice(complex_degree - rdeg);
    for (const auto& w : base.words) {
      const int k = static_cast<int>(w.slots.size());

      // D-terms of the base word, each labelled by the merge junction it
      // closes (-1 for differential terms, which never shift a move index)
      struct Term {
        BarWord nw;
        Rational c;
        int junction;
      };
      std::vector<Term> terms;
      if (pres.has_differential()) {
        int prefix = pres.degree_of(w.left);
        for (int p = 0; p < k; ++p) {
          int eps = prefix - p;
          GradedElement dslot = middle_->differential(slot_element(w.slots[p]));
          if (!dslot.zero()) {
            Rational s = -sign_of(eps);  // (-1)^{eps+1}
            for (const auto& [ref, c] : slot_expand(dslot)) {
              BarWord nw = w;
              nw.slots[p] = ref;
              terms.push_back({std::move(nw), c * s, -1});
            }
          }
          prefix += w.slots[p].degree;
        }
      }
      if (k > 0) {
        std::vector<int> eps(k + 1);
        int acc = pres.degree_of(w.left);
        eps[0] = acc;
        for (int i = 1; i <= k; ++i) {
          acc += w.slots[i - 1].degree;
          eps[i] = acc - i;
        }
        {
          Rational s = -sign_of(eps[0]);
          Polynomial img = middle_->augment(slot_element(w.slots[0]));
          for (const auto& [rm, c] : img) {
            BarWord nw = w;
            nw.left = mono_mul_even(w.left, rm);
            nw.slots.erase(nw.slots.begin());
            terms.push_back({std::move(nw), c * s, 0});
          }
        }
        for (int i = 1; i <= k - 1; ++i) {
          Rational s = -sign_of(eps[i]);
          GradedElement prod =
              middle_->multiply(slot_element(w.slots[i - 1]), slot_element(w.slots[i]));
          for (const auto& [ref, c] : slot_expand(prod)) {
            BarWord nw = w;
            nw.slots[i - 1] = ref;
            nw.slots.erase(nw.slots.begin() + i);
            terms.push_back({std::move(nw), c * s, i});
          }
        }
        {
          Rational s = -sign_of(eps[k - 1] + 1);
          Polynomial img = middle_->augment(slot_element(w.slots[k - 1]));
          for (const auto& [rm, c] : img) {
            BarWord nw = w;
            nw.right = mono_mul_even(w.right, rm);
            nw.slots.pop_back();
            terms.push_back({std::move(nw), c * s, k});
          }
        }
      }

      // D s + s D = id on each indexed generator.  D of the generator is
      // decomposed structurally: the merge at the move junction cancels in
      // the pair, a merge strictly left of it shifts the index down, every
      // other term keeps the index.  The r-generator is even, so the terms
      // inherit the base-word signs unchanged.
      for (int pos = 0; pos <= k; ++pos) {
        BarChain gen = gen_chain(w, rg, pos);
        if (gen.zero()) continue;
        BarChain lhs = bar_D(gen_s(w, rg, pos));
        for (const auto& t : terms) {
          if (t.junction == pos) continue;
          int np = (t.junction >= 0 && t.junction < pos) ? pos - 1 : pos;
          lhs = chain_add(lhs, chain_scale(gen_s(t.nw, rg, np), t.c));
        }
        if (!chain_add(lhs, chain_scale(gen, -1)).zero()) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<BarChain, BarChain>> BarContext::move_generators(
    int complex_degree, bool with_s, bool include_units) const {
  std::vector<std::pair<BarChain, BarChain>> out;
  const auto& pres = middle_->presentation();

  // Moves are generated by single r-generator steps; a u^m move telescopes
  // into m single steps, and the insertion homotopy is attached to these
  // indexed generators.
  for (int rg : pres.r_generators) {
    const int rdeg = pres.generators[rg].degree;
    if (rdeg > complex_degree) continue;
    const Slice& base = slice(complex_degree - rdeg);
    for (const auto& w : base.words) {
      const int k = static_cast<int>(w.slots.size());
      for (int i = 0; i <= k; ++i) {
        BarChain gen = gen_chain(w, rg, i);
        if (gen.zero()) continue;
        BarChain sval;
        sval.degree = complex_degree - 1;
        if (with_s) sval = gen_s(w, rg, i);
        out.push_back({std::move(gen), std::move(sval)});
      }
    }
  }

  if (include_units && mode_ == BarMode::OverK && !pres.r_generators.empty()) {
    // Words with a slot equal to one r-generator: images of unit-slot
    // insertions, with the unit companion erased by normalization. They
    // complete the span to the full kernel of the over-R projection, but
    // no consistent insertion homotopy exists for them in the normalized
    // complex, so the homotopy spanning set excludes them.
    const Slice& sl = slice(complex_degree);
    for (const auto& w : sl.words) {
      bool has_r_slot = false;
      for (const auto& ref : w.slots) {
        const GradedElement& e = slot_element(ref);
        if (e.terms.size() != 1) continue;
        const auto& [m, c] = *e.terms.begin();
        int total = 0;
        bool all_r = true;
        for (size_t g = 0; g < m.size(); ++g) {
          total += m[g];
          if (m[g] > 0 && !pres.is_r_generator(static_cast<int>(g))) all_r = false;
        }
        if (all_r && total == 1 && c == 1) {
          has_r_slot = true;
          break;
        }
      }
      if (has_r_slot) {
        BarChain gen = word_chain(w);
        BarChain sval;
        sval.degree = complex_degree - 1;
        out.push_back({std::move(gen), std::move(sval)});
      }
    }
  }
  return out;
}

BarContext::MoveQuotient BarContext::build_move_quotient(int complex_degree) const {
  const Slice& sl = slice(complex_degree);
  MoveQuotient q;
  q.span = EchelonSpan(static_cast<int>(sl.words.size()));
  for (const auto& [gen, s] : move_generators(complex_degree, false, true)) {
    SparseRow row;
    for (const auto& [w, c] : gen.terms) row[sl.index.at(w)] = c;
    q.span.insert(std::move(row));
  }
  for (int i = 0; i < static_cast<int>(sl.words.size()); ++i) {
    if (!q.span.has_pivot(i)) {
      q.basis_pos[i] = static_cast<int>(q.basis_words.size());
      q.basis_words.push_back(i);
    }
  }
  return q;
}

const BarContext::MoveQuotient& BarContext::move_quotient(int complex_degree) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = quo_memo_.find(complex_degree);
    if (it != quo_memo_.end()) return *it->second;
  }
  auto q = std::make_unique<MoveQuotient>(build_move_quotient(complex_degree));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = quo_memo_.try_emplace(complex_degree, std::move(q));
  return *it->second;
}

const BarContext::MoveQuotient& BarContext::quotient_over_R(int complex_degree) const {
  if (mode_ != BarMode::OverK)
    throw InputError("quotient_over_R acts on the over-k complex");
  return move_quotient(complex_degree);
}

int BarContext::complex_dim(int complex_degree) const {
  if (complex_degree < 0) return 0;
  if (mode_ == BarMode::OverK) return static_cast<int>(slice(complex_degree).words.size());
  return static_cast<int>(move_quotient(complex_degree).basis_words.size());
}

std::vector<BarWord> BarContext::complex_basis(int complex_degree) const {
  const Slice& sl = slice(complex_degree);
  if (mode_ == BarMode::OverK) return sl.words;
  std::vector<BarWord> out;
  for (int i : move_quotient(complex_degree).basis_words) out.push_back(sl.words[i]);
  return out;
}

Vec BarContext::project(const BarChain& ch) const {
  const Slice& sl = slice(ch.degree);
  SparseRow row;
  for (const auto& [w, c] : ch.terms) row[sl.index.at(w)] = c;
  if (mode_ == BarMode::OverK) return dense(row, static_cast<int>(sl.words.size()));
  const MoveQuotient& q = move_quotient(ch.degree);
  row = q.span.reduce(std::move(row));
  Vec out(q.basis_words.size(), Rational(0));
  for (const auto& [col, c] : row) out[q.basis_pos.at(col)] = c;
  return out;
}

RationalMatrix BarContext::D_matrix(int complex_degree) const {
  std::vector<BarWord> src = complex_basis(complex_degree);
  int rows = complex_dim(complex_degree + 1);
  RationalMatrix m(rows, static_cast<int>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    Vec col = project(bar_D(word_chain(src[j])));
    for (int r = 0; r < rows; ++r)
      if (col[r] != 0) m.set(r, static_cast<int>(j), col[r]);
  }
  return m;
}

BarChain BarContext::shuffle_mul(const BarChain& p, const BarChain& q) const {
  BarChain out;
  out.degree = p.degree + q.degree;
  for (const auto& [w1, c1] : p.terms) {
    for (const auto& [w2, c2] : q.terms) {
      // Outer factors are even R-monomials, so all Koszul signs come from
      // interleaving the suspended slots.
      std::vector<int> u, v;
      for (const auto& s : w1.slots) u.push_back(s.degree - 1);
      for (const auto& s : w2.slots) v.push_back(s.degree - 1);

      Monomial nl = mono_mul_even(w1.left, w2.left);
      Monomial nr = mono_mul_even(w1.right, w2.right);

      std::vector<SlotRef> merged;
      std::function<void(size_t, size_t, int)> shuffle = [&](size_t i, size_t j,
                                                             int sign_exp) {
        if (i == u.size() && j == v.size()) {
          BarWord nw;
          nw.left = nl;
          nw.right = nr;
          nw.slots = merged;
          Rational s = sign_exp % 2 == 0 ? Rational(1) : Rational(-1);
          chain_accumulate(out, nw, c1 * c2 * s);
          return;
        }
        if (i < u.size()) {
          merged.push_back(w1.slots[i]);
          shuffle(i + 1, j, sign_exp);
          merged.pop_back();
        }
        if (j < v.size()) {
          int rem = 0;  // suspended degree of the s-slots still unplaced
          for (size_t t = i; t < u.size(); ++t) rem += u[t];
          merged.push_back(w2.slots[j]);
          shuffle(i, j + 1, sign_exp + v[j] * rem);
          merged.pop_back();
        }
      };
      shuffle(0, 0, 0);
    }
  }
  return out;
}

const BarContext::VData& BarContext::v_data(int complex_degree) const {
  if (mode_ != BarMode::OverK)
    throw InputError("homotopy data lives on the over-k complex");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = v_memo_.find(complex_degree);
    if (it != v_memo_.end()) return *it->second;
  }
  auto vd = std::make_unique<VData>();
  const Slice& sl = slice(complex_degree);
  vd->span = EchelonSpan(static_cast<int>(sl.words.size()));
  for (auto& [gen, sval] : move_generators(complex_degree, true, false)) {
    SparseRow row;
    for (const auto& [w, c] : gen.terms) row[sl.index.at(w)] = c;
    vd->span.insert(std::move(row));
    vd->generators.push_back(std::move(gen));
    vd->s_values.push_back(std::move(sval));
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, _] = v_memo_.try_emplace(complex_degree, std::move(vd));
  return *it->second;
}

BarChain BarContext::homotopy_s(const BarChain& v) const {
  const VData& vd = v_data(v.degree);
  const Slice& sl = slice(v.degree);
  BarChain out;
  out.degree = v.degree - 1;
  if (v.zero()) return out;

  RationalMatrix gens(static_cast<int>(sl.words.size()),
                      static_cast<int>(vd.generators.size()));
  for (size_t j = 0; j < vd.generators.size(); ++j)
    for (const auto& [w, c] : vd.generators[j].terms)
      gens.set(sl.index.at(w), static_cast<int>(j), c);
  Vec rhs(sl.words.size(), Rational(0));
  for (const auto& [w, c] : v.terms) rhs[sl.index.at(w)] = c;
  auto x = preimage(gens, rhs);
  if (!x) throw InputError("homotopy_s: element is not in the computed span of V");
  for (size_t j = 0; j < vd.generators.size(); ++j)
    if ((*x)[j] != 0) out = chain_add(out, chain_scale(vd.s_values[j], (*x)[j]));
  return out;
}

}  // namespace torbar
