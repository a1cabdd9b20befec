#include "torbar/checks.hpp"

namespace torbar {

namespace {

bool chains_equal(const BarChain& a, const BarChain& b) {
  return chain_add(a, chain_scale(b, -1)).zero();
}

Rational koszul(int n1, int n2) { return (n1 * n2) % 2 == 0 ? Rational(1) : Rational(-1); }

bool in_move_span(const BarContext& ctx, const BarChain& ch) {
  if (ch.zero()) return true;
  const auto& basis = ctx.bar_basis(ch.degree);
  std::map<BarWord, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  SparseRow row;
  for (const auto& [w, c] : ch.terms) row[idx.at(w)] = c;
  return ctx.quotient_over_R(ch.degree).span.contains(row);
}

}  // namespace

std::vector<std::pair<std::string, bool>> structural_checks(
    std::shared_ptr<const AlgebraContext> algebra, BarMode mode, int max_degree) {
  BarContext ctx(algebra, mode, max_degree);
  std::vector<std::pair<std::string, bool>> out;

  bool d2 = true, anti = true;
  for (int n = 0; n <= max_degree - 1 && (d2 || anti); ++n) {
    for (const auto& w : ctx.bar_basis(n)) {
      BarChain wc = ctx.word_chain(w);
      if (!ctx.bar_D(ctx.bar_D(wc)).zero()) d2 = false;
      if (!chain_add(ctx.bar_d(ctx.bar_delta(wc)), ctx.bar_delta(ctx.bar_d(wc))).zero())
        anti = false;
      if (!d2 && !anti) break;
    }
  }
  out.push_back({"D_squared_zero", d2});
  out.push_back({"d_delta_anticommute", anti});

  const int pair_cap = std::min(max_degree, 8);
  bool comm = true;
  for (int n1 = 0; n1 <= pair_cap && comm; ++n1) {
    for (int n2 = n1; n1 + n2 <= pair_cap && comm; ++n2) {
      for (const auto& w1 : ctx.bar_basis(n1)) {
        for (const auto& w2 : ctx.bar_basis(n2)) {
          BarChain p = ctx.shuffle_mul(ctx.word_chain(w1), ctx.word_chain(w2));
          BarChain q = ctx.shuffle_mul(ctx.word_chain(w2), ctx.word_chain(w1));
          if (!chains_equal(p, chain_scale(q, koszul(n1, n2)))) {
            comm = false;
            break;
          }
        }
        if (!comm) break;
      }
    }
  }
  out.push_back({"shuffle_graded_commutative", comm});

  const int triple_cap = std::min(max_degree, 6);
  bool assoc = true;
  for (int n1 = 0; n1 <= triple_cap && assoc; ++n1)
    for (int n2 = 0; n1 + n2 <= triple_cap && assoc; ++n2)
      for (int n3 = 0; n1 + n2 + n3 <= triple_cap && assoc; ++n3)
        for (const auto& w1 : ctx.bar_basis(n1)) {
          for (const auto& w2 : ctx.bar_basis(n2)) {
            for (const auto& w3 : ctx.bar_basis(n3)) {
              BarChain a = ctx.shuffle_mul(
                  ctx.shuffle_mul(ctx.word_chain(w1), ctx.word_chain(w2)),
                  ctx.word_chain(w3));
              BarChain b = ctx.shuffle_mul(
                  ctx.word_chain(w1),
                  ctx.shuffle_mul(ctx.word_chain(w2), ctx.word_chain(w3)));
              if (!chains_equal(a, b)) {
                assoc = false;
                break;
              }
            }
            if (!assoc) break;
          }
          if (!assoc) break;
        }
  out.push_back({"shuffle_associative", assoc});

  bool deriv = true;
  for (int n1 = 0; n1 <= max_degree - 1 && deriv; ++n1) {
    for (int n2 = 0; n1 + n2 <= std::min(max_degree - 1, pair_cap) && deriv; ++n2) {
      for (const auto& w1 : ctx.bar_basis(n1)) {
        for (const auto& w2 : ctx.bar_basis(n2)) {
          BarChain c1 = ctx.word_chain(w1), c2 = ctx.word_chain(w2);
          BarChain lhs = ctx.bar_D(ctx.shuffle_mul(c1, c2));
          BarChain rhs = chain_add(
              ctx.shuffle_mul(ctx.bar_D(c1), c2),
              chain_scale(ctx.shuffle_mul(c1, ctx.bar_D(c2)),
                          n1 % 2 == 0 ? Rational(1) : Rational(-1)));
          if (!chains_equal(lhs, rhs)) {
            deriv = false;
            break;
          }
        }
        if (!deriv) break;
      }
    }
  }
  out.push_back({"D_derivation_over_shuffle", deriv});

  const bool has_moves =
      mode == BarMode::OverK && !algebra->presentation().r_generators.empty();

  bool ideal = true;
  if (has_moves) {
    const int ideal_cap = std::min(max_degree, 6);
    for (int n = 0; n <= ideal_cap && ideal; ++n) {
      const auto& vd = ctx.v_data(n);
      for (const auto& g : vd.generators) {
        if (n + 1 <= max_degree + 1 && n <= max_degree && !in_move_span(ctx, ctx.bar_D(g))) {
          ideal = false;
          break;
        }
        for (int m = 0; n + m <= ideal_cap && ideal; ++m)
          for (const auto& w : ctx.bar_basis(m))
            if (!in_move_span(ctx, ctx.shuffle_mul(g, ctx.word_chain(w)))) {
              ideal = false;
              break;
            }
        if (!ideal) break;
      }
    }
  }
  out.push_back({"move_span_ideal_closed", ideal});

  bool hid = true;
  if (has_moves) {
    for (int n = 1; n <= max_degree && hid; ++n) hid = ctx.homotopy_identity(n);
  }
  out.push_back({"homotopy_identity", hid});

  return out;
}

}  // namespace torbar
