#pragma once

#include "torbar/bar.hpp"
#include "torbar/cdga.hpp"

#include <array>
#include <string>

namespace torbar {

enum class TorMode { OverR, OverK, Both };

struct TorRequest {
  std::shared_ptr<const AlgebraContext> algebra;
  int max_degree = 0;
  TorMode mode = TorMode::OverR;
  bool want_ring = false;
  bool want_representatives = true;
};

/// One cohomology generator of the bar complex: raw cocycle, reduced
/// against the coboundary span so survivor words carry the class.
struct TorGenerator {
  int degree = 0;
  int index = 0;
  BarChain rep;
  Vec coords;           // over the working-complex basis of the degree
  std::string display;  // rendered word form of rep
};

struct RingEntry {
  Vec coeffs;  // over the generators of the product degree
  bool outside_truncation = false;
};

struct TorResult {
  std::vector<int> betti;  // indices 0..max_degree
  std::vector<std::vector<TorGenerator>> generators;
  /// (deg_i, idx_i, deg_j, idx_j) -> class of generator_i * generator_j.
  std::map<std::array<int, 4>, RingEntry> ring_constants;
  /// r-generator index -> same keying against the pure outer-word class.
  std::map<std::pair<int, std::array<int, 2>>, RingEntry> r_action;
  bool modes_agree = false;  // set when mode = Both and the check ran
};

TorResult tor_compute(const TorRequest& req);

struct CrosscheckReport {
  bool ok = true;
  int first_divergent_degree = -1;
  std::string detail;
};

/// Betti agreement with an oracle cohomology table, and (when both carry
/// ring data) agreement of the rank of each graded multiplication map.
CrosscheckReport crosscheck_oracle(const TorResult& tor, const CohomologyTable& oracle,
                                   int max_degree);

std::string mono_str(const Monomial& m, const AlgebraPresentation& pres);
std::string element_str(const GradedElement& e, const AlgebraPresentation& pres);
std::string word_str(const BarWord& w, const BarContext& ctx);
std::string chain_str(const BarChain& ch, const BarContext& ctx);

}  // namespace torbar
