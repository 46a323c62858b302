#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/pipeline.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

// Driver-specific knobs shared by `find-minor` and the experiment harness.
// Unset finders fall back to the documented defaults: the linear driver
// derives its bounds from (3.484, 1.426), the heart driver runs at
// lambda = 0.6518, epsilon = 1e-5 with d taken from the pattern.
struct DriverParams {
  std::optional<Rational> c1, c2, alpha, beta;
  std::optional<Rational> lambda, epsilon;
  std::optional<double> d;
  bool enforce_assumptions = false;
};

// Dispatches on the driver name (2degen | basic | new | linear | pmain |
// general | heart); unknown names throw std::invalid_argument.
DriverReport run_driver(const std::string& driver, const Graph& host, const Graph& pattern,
                        uint64_t seed, const DriverParams& params);

// One batch: a fixed (pattern, host) pair crossed with a seed list.
struct ExperimentSpec {
  std::string driver;
  Graph pattern;
  Graph host;
  std::vector<uint64_t> seeds;
  std::string output;
  DriverParams params;
};

// Reads the JSON description: {"driver": ..., "pattern": {...}, "host":
// {...}, "seeds": [...], "output": ..., "params": {...}}. Graph sources are
// either {"file": path} or {"family": name, ...parameters}; rational
// parameters may be given as strings ("3.484") or plain numbers.
ExperimentSpec load_experiment_spec(const std::string& path);

// Runs every seed, up to MINORFORGE_THREADS rows in parallel, and renders
// the rows in seed-list order. Reruns are byte-identical except for the
// wall-ms column.
std::string run_experiment_csv(const ExperimentSpec& spec);

// Builds one of the named generator families. Parameters are positional per
// family: disjoint-triangles(k), cycle(t), complete(t), grid(rows, cols),
// random-d-regular(t, d, seed), gnp(n, p, seed), complete-bipartite(a, b).
Graph make_family_graph(const std::string& family, const std::vector<std::string>& params);

}  // namespace minorforge
