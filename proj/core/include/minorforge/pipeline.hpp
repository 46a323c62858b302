#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorforge/constants.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/heart.hpp"
#include "minorforge/minor_model.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

enum class DriverOutcome : uint8_t { Model, HypothesisNotMet, RandomizedFailure };

// What one end-to-end driver run did and why. threshold is the average
// degree the driver demands of the host (exact; the heart driver reports its
// minimum-degree floor lambda*n instead), average_degree the host's actual
// value. A met hypothesis plus a randomized step that ran out of luck yields
// RandomizedFailure; everything else either produces a validated model or
// reports the unmet hypothesis.
struct DriverReport {
  std::string driver;
  Rational threshold;
  Rational average_degree;
  bool hypothesis_met = false;
  DriverOutcome outcome = DriverOutcome::HypothesisNotMet;
  std::string failure;             // set unless outcome == Model
  std::vector<std::string> steps;
  std::optional<MinorModel> model;

  // Line-oriented rendering: driver/threshold/average-degree/hypothesis/
  // outcome, then failure when present, one "step:" line per step, and the
  // branch sets under a final "model:" header on success.
  std::string to_text() const;

  // 0 model, 1 hypothesis-not-met, 2 randomized-failure.
  int exit_code() const;
};

// Host average degree 6.929*t forces any 2-degenerate pattern on t vertices.
// The pattern must be 2-degenerate (std::invalid_argument otherwise).
DriverReport find_minor_2degen(const Graph& g, const Graph& h);

// Any pattern with t vertices and q edges, via its 1-subdivision, at host
// average degree 6.929*(t+q).
DriverReport find_minor_basic(const Graph& g, const Graph& h);

// Any pattern with i isolated vertices and q edges at host average degree
// i + 6.929*q: isolated vertices and tree components peel off recursively,
// the cyclic remainder goes through a dense witness.
DriverReport find_minor_new(const Graph& g, const Graph& h);

// Host average degree alpha*t + beta*q, with the witness family and the
// randomized subdivision embedder both driven by `constants`. The constants
// are revalidated here; an infeasible or undersized set throws Infeasible.
DriverReport find_minor_linear(const Graph& g, const Graph& h, const MaderConstants& constants,
                               uint64_t seed);

// Host average degree t + 6.291*q. Isolated vertices and tree components
// peel off recursively; edge-heavy remainders delegate to find_minor_linear
// with the (3.484, 1.426) constants, the rest goes through a dense witness
// and a (<=1)-subdivision embedding.
DriverReport find_minor_pmain(const Graph& g, const Graph& h, uint64_t seed);

// Host average degree 3.895*sqrt(ln d)*t for pattern average degree d > 1
// (std::invalid_argument otherwise; the threshold itself is evaluated in
// floating point). Runs the ratio-optimized witness reduction, then the
// randomized dense embedder at lambda = 0.6518, epsilon = 1e-5. Hosts in the
// gap where the witness guarantees fall short of the embedder's needs are
// reported rather than forced.
DriverReport find_minor_general(const Graph& g, const Graph& h, uint64_t seed);

// heart_embed as a driver. Requires min_degree(g) >= lambda * n like the
// embedder itself (std::invalid_argument below the floor); the threshold
// field carries lambda * n.
DriverReport drive_heart(const Graph& g, const Graph& h, const HeartParams& params, uint64_t seed,
                         bool enforce_assumptions = false);

}  // namespace minorforge
