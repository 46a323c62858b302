#include "experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"
#include "minorforge/constants.hpp"
#include "minorforge/generators.hpp"
#include "minorforge/heart.hpp"
#include "minorforge/io.hpp"

namespace minorforge {

namespace {

using nlohmann::json;

uint64_t parse_u64(const std::string& s, const char* what) {
  size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": expected an unsigned integer, got \"" + s +
                                "\"");
  }
  if (pos != s.size() || s[0] == '-') {
    throw std::invalid_argument(std::string(what) + ": expected an unsigned integer, got \"" + s +
                                "\"");
  }
  return v;
}

double parse_prob(const std::string& s) {
  size_t pos = 0;
  double p = 0;
  try {
    p = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("gnp: expected a probability, got \"" + s + "\"");
  }
  if (pos != s.size() || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gnp: probability must lie in [0, 1], got \"" + s + "\"");
  }
  return p;
}

void want(const std::vector<std::string>& params, size_t count, const char* usage) {
  if (params.size() != count) {
    throw std::invalid_argument(std::string("family parameters: expected ") + usage);
  }
}

unsigned thread_count() {
  if (const char* env = std::getenv("MINORFORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

Rational json_rational(const json& node, const char* key) {
  if (node.is_string()) return Rational::parse(node.get<std::string>());
  if (node.is_number()) return Rational::parse(node.dump());
  throw std::invalid_argument(std::string("params.") + key + ": expected a number or string");
}

Graph resolve_graph(const json& node, const char* which) {
  if (!node.is_object()) {
    throw std::invalid_argument(std::string(which) + ": expected an object");
  }
  if (node.contains("file")) {
    return read_graph_file(node.at("file").get<std::string>());
  }
  if (!node.contains("family")) {
    throw std::invalid_argument(std::string(which) + ": needs \"file\" or \"family\"");
  }
  const std::string family = node.at("family").get<std::string>();

  const auto grab = [&](std::initializer_list<const char*> keys) {
    std::vector<std::string> out;
    for (const char* key : keys) {
      if (!node.contains(key)) {
        throw std::invalid_argument(std::string(which) + ": family \"" + family +
                                    "\" needs field \"" + key + "\"");
      }
      const json& v = node.at(key);
      out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
  };

  if (family == "disjoint-triangles") return make_family_graph(family, grab({"k"}));
  if (family == "cycle") return make_family_graph(family, grab({"t"}));
  if (family == "complete") {
    return make_family_graph(family, grab({node.contains("n") ? "n" : "t"}));
  }
  if (family == "grid") return make_family_graph(family, grab({"rows", "cols"}));
  if (family == "random-d-regular") return make_family_graph(family, grab({"t", "d", "seed"}));
  if (family == "gnp") return make_family_graph(family, grab({"n", "p", "seed"}));
  if (family == "complete-bipartite") return make_family_graph(family, grab({"a", "b"}));
  throw std::invalid_argument(std::string(which) + ": unknown family \"" + family + "\"");
}

const char* outcome_token(DriverOutcome outcome) {
  switch (outcome) {
    case DriverOutcome::Model:
      return "model";
    case DriverOutcome::HypothesisNotMet:
      return "hypothesis-not-met";
    case DriverOutcome::RandomizedFailure:
      return "randomized-failure";
  }
  return "?";
}

std::string run_row(const ExperimentSpec& spec, uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const DriverReport rep = run_driver(spec.driver, spec.host, spec.pattern, seed, spec.params);
  const auto wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count();
  std::ostringstream os;
  os << spec.driver << ',' << spec.pattern.vertex_count() << ',' << spec.pattern.edge_count()
     << ',' << rep.threshold << ',' << spec.host.vertex_count() << ',' << rep.average_degree
     << ',' << outcome_token(rep.outcome) << ',' << wall << ',' << seed << '\n';
  return os.str();
}

}  // namespace

Graph make_family_graph(const std::string& family, const std::vector<std::string>& params) {
  if (family == "disjoint-triangles") {
    want(params, 1, "k");
    return disjoint_triangles(static_cast<uint32_t>(parse_u64(params[0], "k")));
  }
  if (family == "cycle") {
    want(params, 1, "t");
    return cycle_graph(static_cast<uint32_t>(parse_u64(params[0], "t")));
  }
  if (family == "complete") {
    want(params, 1, "n");
    return complete_graph(static_cast<uint32_t>(parse_u64(params[0], "n")));
  }
  if (family == "grid") {
    want(params, 2, "rows cols");
    return grid_graph(static_cast<uint32_t>(parse_u64(params[0], "rows")),
                      static_cast<uint32_t>(parse_u64(params[1], "cols")));
  }
  if (family == "random-d-regular") {
    want(params, 3, "t d seed");
    return random_regular(static_cast<uint32_t>(parse_u64(params[0], "t")),
                          static_cast<uint32_t>(parse_u64(params[1], "d")),
                          parse_u64(params[2], "seed"));
  }
  if (family == "gnp") {
    want(params, 3, "n p seed");
    return gnp(static_cast<uint32_t>(parse_u64(params[0], "n")), parse_prob(params[1]),
               parse_u64(params[2], "seed"));
  }
  if (family == "complete-bipartite") {
    want(params, 2, "a b");
    return complete_bipartite(static_cast<uint32_t>(parse_u64(params[0], "a")),
                              static_cast<uint32_t>(parse_u64(params[1], "b")));
  }
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

DriverReport run_driver(const std::string& driver, const Graph& host, const Graph& pattern,
                        uint64_t seed, const DriverParams& params) {
  if (driver == "2degen") return find_minor_2degen(host, pattern);
  if (driver == "basic") return find_minor_basic(host, pattern);
  if (driver == "new") return find_minor_new(host, pattern);
  if (driver == "pmain") return find_minor_pmain(host, pattern, seed);
  if (driver == "general") return find_minor_general(host, pattern, seed);
  if (driver == "linear") {
    const Rational c1 = params.c1.value_or(Rational(3484, 1000));
    const Rational c2 = params.c2.value_or(Rational(1426, 1000));
    const MaderConstants cs = params.alpha && params.beta
                                  ? with_bounds(c1, c2, *params.alpha, *params.beta)
                                  : derive(c1, c2);
    return find_minor_linear(host, pattern, cs, seed);
  }
  if (driver == "heart") {
    const Rational lambda = params.lambda.value_or(Rational(6518, 10000));
    const Rational epsilon = params.epsilon.value_or(Rational(1, 100000));
    double d = 0;
    if (params.d) {
      d = *params.d;
    } else {
      if (pattern.vertex_count() == 0) {
        throw std::invalid_argument("heart: empty pattern has no average degree; pass d");
      }
      d = pattern.average_degree().to_double();
    }
    const HeartParams hp = make_heart_params(lambda, epsilon, d);
    return drive_heart(host, pattern, hp, seed, params.enforce_assumptions);
  }
  throw std::invalid_argument("unknown driver \"" + driver + "\"");
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }

  try {
    ExperimentSpec spec;
    spec.driver = j.at("driver").get<std::string>();
    spec.pattern = resolve_graph(j.at("pattern"), "pattern");
    spec.host = resolve_graph(j.at("host"), "host");
    spec.seeds = j.at("seeds").get<std::vector<uint64_t>>();
    spec.output = j.at("output").get<std::string>();
    if (j.contains("params")) {
      const json& p = j.at("params");
      if (p.contains("c1")) spec.params.c1 = json_rational(p.at("c1"), "c1");
      if (p.contains("c2")) spec.params.c2 = json_rational(p.at("c2"), "c2");
      if (p.contains("alpha")) spec.params.alpha = json_rational(p.at("alpha"), "alpha");
      if (p.contains("beta")) spec.params.beta = json_rational(p.at("beta"), "beta");
      if (p.contains("lambda")) spec.params.lambda = json_rational(p.at("lambda"), "lambda");
      if (p.contains("epsilon")) spec.params.epsilon = json_rational(p.at("epsilon"), "epsilon");
      if (p.contains("d")) spec.params.d = p.at("d").get<double>();
      if (p.contains("enforce-assumptions")) {
        spec.params.enforce_assumptions = p.at("enforce-assumptions").get<bool>();
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string run_experiment_csv(const ExperimentSpec& spec) {
  std::vector<std::string> rows(spec.seeds.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < rows.size();) {
      rows[i] = run_row(spec, spec.seeds[i]);
    }
  };

  const size_t want_threads =
      std::min<size_t>(thread_count(), std::max<size_t>(rows.size(), 1));
  if (want_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(want_threads);
    for (size_t i = 0; i < want_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::string csv = "driver,t,q,threshold,host-n,host-avg-deg,outcome,wall-ms,seed\n";
  for (const auto& row : rows) csv += row;
  return csv;
}

}  // namespace minorforge
