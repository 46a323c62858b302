#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "minorforge/rational.hpp"

namespace minorforge {

// A (c1, c2) pair whose derived coefficients violate the structural
// constraints, or an optimization whose cap empties the feasible region.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constant schedule shared by the four dense-subgraph outcomes. Outcome i
// promises at most a[i]*k vertices with minimum degree at least b[i]*k;
// alpha and beta turn that promise into an average-degree recursion, and are
// only usable when every gap 2*b[i] - a[i] lies in (0, 3] and b[i] < a[i].
struct MaderConstants {
  Rational c1;
  Rational c2;
  std::array<Rational, 4> a;
  std::array<Rational, 4> b;
  Rational alpha;
  Rational beta;
};

// Exact coefficients for (c1, c2) together with the smallest usable alpha and
// beta: alpha = max(4, max_i 4/(2b[i]-a[i])), beta = max_i of
// 4(a[i]-b[i]) / (a[i](2b[i]-a[i])). Throws Infeasible when a structural
// constraint fails, naming the offending inequality.
MaderConstants derive(const Rational& c1, const Rational& c2);

// Same coefficients, but keeps caller-chosen alpha and beta after verifying
// they dominate the minimal pair.
MaderConstants with_bounds(const Rational& c1, const Rational& c2,
                           const Rational& alpha, const Rational& beta);

// Worst ratio b[i]/a[i] and worst gap 2*b[i] - a[i] across the four outcomes.
std::pair<Rational, Rational> min_ratio_and_gap(const Rational& c1,
                                                const Rational& c2);

enum class Objective { MinBeta, MinAlpha, MaxMinRatio, MaxMinGap };

// Deterministic search over c1 in (2, 6], c2 in (1, 3]: a coarse grid at step
// 1e-2, then window refinement down to step 1e-5, re-centering at each scale
// until the best point is interior. Grid coordinates are exact rationals; the
// objective is compared in double with ties broken toward smaller c1, then
// smaller c2, so results do not depend on evaluation order or thread count.
//
// cap constrains the companion quantity: an upper bound on alpha for MinBeta
// and on beta for MinAlpha, a lower bound on the min gap for MaxMinRatio and
// on the min ratio for MaxMinGap. Throws Infeasible when no grid point
// satisfies it.
MaderConstants optimize(Objective objective,
                        std::optional<double> cap = std::nullopt);

}  // namespace minorforge
