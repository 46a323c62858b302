#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/minor_model.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

// Derived quantities of the randomized embedder for dense hosts. lambda is
// the minimum-degree floor as a fraction of the host order, epsilon the
// slack, d the pattern average degree the derivation targets. Everything
// else follows from those three:
//
//   b     = 1 / (1 - lambda + epsilon)
//   ell   = ceil(sqrt(log_b d))          seed-set size
//   nu    = ((1-lambda)/(1-lambda+epsilon))^ell
//   mu    = 1.5692^ell * (1-lambda)^(5*ell/6)
//   theta = 5(nu+mu)(ell+ell^2) + 5*nu*ell^2 + 8
//
// The slack is large enough for the connector-counting argument only when
// epsilon*(1-epsilon)*(2*lambda-1)*ell >= 2*theta; that flag plus two host
// size floors (below which the concentration bounds have no force) make up
// the assumption set that heart_embed can optionally enforce.
struct HeartParams {
  Rational lambda;
  Rational epsilon;
  double d = 0;
  double b = 0;
  uint32_t ell = 0;
  double nu = 0;
  double mu = 0;
  double theta = 0;
  bool slack_covers_theta = false;
  double min_n_pair_concentration = 0;    // least n with exp(eps^2 (2l-1)^2 n / 8) >= 10 C(n,2)
  double min_n_degree_concentration = 0;  // least n with exp(eps^4 n / (2(1+eps)^2)) >= 10 n

  bool assumptions_hold(uint64_t n) const {
    return slack_covers_theta && static_cast<double>(n) >= min_n_pair_concentration &&
           static_cast<double>(n) >= min_n_degree_concentration;
  }
};

// Requires 1/2 < lambda < 1, 0 < epsilon < lambda, d > 1; throws
// std::invalid_argument naming the offending parameter.
HeartParams make_heart_params(const Rational& lambda, const Rational& epsilon, double d);

// A snapshot of the embedder's families with every label recomputed from
// scratch. S holds the seed sets (size ell each), T the booster sets (size
// ell^2 for bad seeds, empty otherwise), U the connectors added in the
// deterministic stage.
//
// Labels: a vertex outside S_i with no neighbor in S_i is a non-neighbor of
// S_i; S_i is bad when it has at least (n-ell)(1-lambda+epsilon)^ell
// non-neighbors. S_i is disjointed when some component of the subgraph
// induced on S_i has at most ell/6 vertices. A pattern edge ij is
// problematic when S_i or S_j is good but no host edge joins S_i to S_j, and
// nasty when both are bad and no host edge joins S_i+T_i to S_j+T_j.
struct StageState {
  std::vector<std::vector<uint32_t>> S, T, U;
  std::vector<bool> bad;
  std::vector<bool> disjointed;
  std::vector<std::pair<uint32_t, uint32_t>> problematic;
  std::vector<std::pair<uint32_t, uint32_t>> nasty;

  // p1: #bad <= 5*nu*t           p2: #disjointed <= 5*mu*t
  // p3: #problematic <= 5t/2     q1: #nasty <= t/2
  // p4: every vertex pair keeps a (1 - ell*t/n - eps/2) fraction of its
  //     common neighborhood outside the union of the S_i
  // p5: every vertex keeps a (1 - ell*t/n - eps^2/(lambda(1+eps))) fraction
  //     of its neighborhood outside the union of the S_i
  bool p1 = false, p2 = false, p3 = false, p4 = false, p5 = false, q1 = false;
  double p4_worst = 1, p4_floor = 0;
  double p5_worst = 1, p5_floor = 0;
};

// Recomputes labels and property flags for the given families. T and U may
// be vectors of empty sets (or empty, meaning all-empty) when only the
// stage-1 view exists yet. Sets must be sorted, in range, and disjoint.
StageState evaluate_state(const Graph& g, const Graph& h, const HeartParams& p,
                          const std::vector<std::vector<uint32_t>>& S,
                          const std::vector<std::vector<uint32_t>>& T = {},
                          const std::vector<std::vector<uint32_t>>& U = {});

struct HeartResult {
  std::optional<MinorModel> model;     // set exactly on success
  std::vector<std::string> violated;   // on failure: property names, e.g. "P1", "Q1"
  StageState state;                    // last evaluated families
  uint32_t stage1_attempts = 0;
  uint32_t stage2_attempts = 0;
  std::vector<std::string> log;
};

// Randomized three-stage search for an h-minor in a dense host: sample seed
// sets until the stage-1 properties hold, sample booster sets for the bad
// seeds until few pattern edges stay nasty, then deterministically connect
// each family and repair unrealized pattern edges through unused common
// neighbors. Requires min_degree(g) >= lambda * |V(g)| (std::invalid_argument
// otherwise). With enforce_assumptions the host must also satisfy
// params.assumptions_hold and |V(g)| >= (1+epsilon)*ell*|V(h)|, and the
// concentration properties P4/P5 join the stage-1 resampling gate; without
// it they are still computed and reported but do not block acceptance.
// Each sampling stage retries at most 50 times before giving up; a failure
// names every property the final state violates.
HeartResult heart_embed(const Graph& g, const Graph& h, const HeartParams& params, uint64_t seed,
                        bool enforce_assumptions = false);

}  // namespace minorforge
