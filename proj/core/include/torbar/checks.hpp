#pragma once

#include "torbar/bar.hpp"

namespace torbar {

/// Exhaustive structural laws of the bar complex on every computed degree
/// up to max_degree: D^2 = 0, the d/delta anticommutation, shuffle
/// graded-commutativity, associativity, the derivation law for D over the
/// shuffle, closure of the r-move span under D and shuffle, and the
/// contracting-homotopy identity D s + s D = id on the span generators.
/// Returns one named verdict per law; move-span laws report true when the
/// r-subalgebra is trivial (nothing to check).
std::vector<std::pair<std::string, bool>> structural_checks(
    std::shared_ptr<const AlgebraContext> algebra, BarMode mode, int max_degree);

}  // namespace torbar
