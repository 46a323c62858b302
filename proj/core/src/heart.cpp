#include "minorforge/heart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorforge/check.hpp"
#include "minorforge/rng.hpp"

namespace minorforge {

namespace {

// Least integer n >= 2 past the convexity turn of f(n) = coeff*n - rhs(n)
// with f(n) >= 0. Both assumption right-hand sides grow like log n while
// coeff < 1/8 here, so f starts negative and crosses zero exactly once after
// its minimum; the turn bound 2/coeff + 1 is where f' is provably positive.
template <typename Rhs>
double least_sufficient_n(double coeff, Rhs rhs) {
  auto holds = [&](double x) { return coeff * x >= rhs(x); };
  double turn = std::max(2.0, std::ceil(2.0 / coeff) + 1.0);
  double hi = turn;
  for (int guard = 0; !holds(hi); ++guard) {
    hi *= 2;
    if (guard > 4000 || !std::isfinite(hi)) return std::numeric_limits<double>::infinity();
  }
  double lo = turn;
  while (hi - lo > 1.0) {
    double mid = std::floor((lo + hi) / 2);
    // beyond 2^53 adjacent doubles are more than 1 apart; stop when the
    // midpoint cannot make progress
    if (mid <= lo || mid >= hi) break;
    (holds(mid) ? hi : lo) = mid;
  }
  return holds(lo) ? lo : hi;
}

using Mask = std::vector<uint64_t>;

void set_bit(Mask& m, uint32_t v) { m[v >> 6] |= uint64_t{1} << (v & 63); }

void or_row(Mask& m, const BitRows& rows, uint32_t v) {
  const uint64_t* r = rows.row(v);
  for (uint32_t w = 0; w < rows.words(); ++w) m[w] |= r[w];
}

bool intersects(const Mask& a, const Mask& b) {
  for (size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

uint32_t count_bits(const Mask& m) {
  uint32_t c = 0;
  for (uint64_t w : m) c += static_cast<uint32_t>(__builtin_popcountll(w));
  return c;
}

// Smallest vertex in (row(u) & row(v)) \ used, or n when none exists.
uint32_t first_free_common(const BitRows& rows, uint32_t u, uint32_t v, const Mask& used) {
  const uint64_t *a = rows.row(u), *b = rows.row(v);
  for (uint32_t w = 0; w < rows.words(); ++w) {
    uint64_t bits = a[w] & b[w] & ~used[w];
    if (bits) return (w << 6) + static_cast<uint32_t>(__builtin_ctzll(bits));
  }
  return rows.n();
}

uint32_t first_free_common(const Mask& a, const Mask& b, const Mask& used) {
  for (size_t w = 0; w < a.size(); ++w) {
    uint64_t bits = a[w] & b[w] & ~used[w];
    if (bits) return static_cast<uint32_t>((w << 6) + __builtin_ctzll(bits));
  }
  return static_cast<uint32_t>(a.size() * 64);
}

std::vector<std::vector<uint32_t>> normalized_or_empty(std::vector<std::vector<uint32_t>> v,
                                                       size_t t, const char* what) {
  if (v.empty()) v.resize(t);
  if (v.size() != t) throw std::invalid_argument(std::string(what) + " family needs one set per pattern vertex");
  return v;
}

}  // namespace

HeartParams make_heart_params(const Rational& lambda, const Rational& epsilon, double d) {
  if (!(Rational(1, 2) < lambda && lambda < Rational(1))) {
    throw std::invalid_argument("lambda must lie strictly between 1/2 and 1");
  }
  if (!(Rational(0) < epsilon && epsilon < lambda)) {
    throw std::invalid_argument("epsilon must lie strictly between 0 and lambda");
  }
  if (!(d > 1)) throw std::invalid_argument("pattern average degree d must exceed 1");

  HeartParams p;
  p.lambda = lambda;
  p.epsilon = epsilon;
  p.d = d;
  const double lam = lambda.to_double();
  const double eps = epsilon.to_double();
  p.b = 1.0 / (1.0 - lam + eps);
  ensure(p.b > 1, "heart base b exceeds 1");
  p.ell = static_cast<uint32_t>(std::ceil(std::sqrt(std::log(d) / std::log(p.b))));
  ensure(p.ell >= 1, "seed-set size is positive");
  const double ell = p.ell;
  p.nu = std::pow((1.0 - lam) / (1.0 - lam + eps), ell);
  p.mu = std::pow(1.5692, ell) * std::pow(1.0 - lam, 5.0 * ell / 6.0);
  ensure(p.nu > 0 && p.nu < 1, "nu lies in (0, 1)");
  ensure(p.mu > 0 && p.mu < 1, "mu lies in (0, 1)");
  p.theta = 5 * (p.nu + p.mu) * (ell + ell * ell) + 5 * p.nu * ell * ell + 8;
  p.slack_covers_theta = eps * (1 - eps) * (2 * lam - 1) * ell >= 2 * p.theta;
  const double c_pair = eps * eps * (2 * lam - 1) * (2 * lam - 1) / 8;
  p.min_n_pair_concentration =
      least_sufficient_n(c_pair, [](double x) { return std::log(5.0) + std::log(x) + std::log(x - 1); });
  const double c_deg = std::pow(eps, 4) / (2 * (1 + eps) * (1 + eps));
  p.min_n_degree_concentration =
      least_sufficient_n(c_deg, [](double x) { return std::log(10.0) + std::log(x); });
  return p;
}

StageState evaluate_state(const Graph& g, const Graph& h, const HeartParams& p,
                          const std::vector<std::vector<uint32_t>>& S_in,
                          const std::vector<std::vector<uint32_t>>& T_in,
                          const std::vector<std::vector<uint32_t>>& U_in) {
  const size_t t = h.vertex_count();
  if (S_in.size() != t) throw std::invalid_argument("seed family needs one set per pattern vertex");

  StageState st;
  st.S = S_in;
  st.T = normalized_or_empty(T_in, t, "booster");
  st.U = normalized_or_empty(U_in, t, "connector");
  st.bad.assign(t, false);
  st.disjointed.assign(t, false);

  const uint32_t n = g.vertex_count();
  const BitRows rows(g);
  const uint32_t words = std::max<uint32_t>(rows.words(), 1);
  const double lam = p.lambda.to_double();
  const double eps = p.epsilon.to_double();
  const double bad_floor =
      (n > p.ell ? static_cast<double>(n - p.ell) : 0.0) * std::pow(1.0 / p.b, p.ell);

  std::vector<Mask> mask_s(t, Mask(words, 0)), nbr_s(t, Mask(words, 0));
  std::vector<Mask> mask_st(t, Mask(words, 0)), nbr_st(t, Mask(words, 0));
  Mask union_s(words, 0);
  uint32_t bad_count = 0, disjointed_count = 0;
  for (size_t i = 0; i < t; ++i) {
    for (uint32_t v : st.S[i]) {
      set_bit(mask_s[i], v);
      or_row(nbr_s[i], rows, v);
      set_bit(union_s, v);
    }
    mask_st[i] = mask_s[i];
    nbr_st[i] = nbr_s[i];
    for (uint32_t v : st.T[i]) {
      set_bit(mask_st[i], v);
      or_row(nbr_st[i], rows, v);
    }

    Mask covered = mask_s[i];
    for (uint32_t w = 0; w < words; ++w) covered[w] |= nbr_s[i][w];
    const uint32_t non_neighbors = n - count_bits(covered);
    st.bad[i] = static_cast<double>(non_neighbors) >= bad_floor;
    bad_count += st.bad[i];

    if (!st.S[i].empty()) {
      for (const auto& comp : g.induced(st.S[i]).components()) {
        if (6 * comp.size() <= p.ell) {
          st.disjointed[i] = true;
          break;
        }
      }
    }
    disjointed_count += st.disjointed[i];
  }

  for (auto [i, j] : h.edges()) {
    const bool joined_s = intersects(nbr_s[i], mask_s[j]);
    if (!(st.bad[i] && st.bad[j])) {
      if (!joined_s) st.problematic.emplace_back(i, j);
    } else if (!intersects(nbr_st[i], mask_st[j])) {
      st.nasty.emplace_back(i, j);
    }
  }

  const double td = static_cast<double>(t);
  st.p1 = bad_count <= 5 * p.nu * td;
  st.p2 = disjointed_count <= 5 * p.mu * td;
  st.p3 = static_cast<double>(st.problematic.size()) <= 2.5 * td;
  st.q1 = static_cast<double>(st.nasty.size()) <= td / 2;

  const double seeded = n > 0 ? static_cast<double>(p.ell) * td / n : 0.0;
  st.p4_floor = 1.0 - seeded - eps / 2;
  st.p5_floor = 1.0 - seeded - eps * eps / (lam * (1 + eps));
  st.p4 = st.p5 = true;
  st.p4_worst = st.p5_worst = 1.0;
  for (uint32_t v = 0; v < n; ++v) {
    const uint64_t* rv = rows.row(v);
    uint32_t deg_out = 0;
    for (uint32_t w = 0; w < rows.words(); ++w) {
      deg_out += static_cast<uint32_t>(__builtin_popcountll(rv[w] & ~union_s[w]));
    }
    const uint32_t deg = g.degree(v);
    if (deg > 0) {
      const double ratio = static_cast<double>(deg_out) / deg;
      st.p5_worst = std::min(st.p5_worst, ratio);
      if (static_cast<double>(deg_out) < st.p5_floor * deg) st.p5 = false;
    }
    for (uint32_t u = v + 1; u < n; ++u) {
      const uint64_t* ru = rows.row(u);
      uint32_t common = 0, common_out = 0;
      for (uint32_t w = 0; w < rows.words(); ++w) {
        const uint64_t both = rv[w] & ru[w];
        common += static_cast<uint32_t>(__builtin_popcountll(both));
        common_out += static_cast<uint32_t>(__builtin_popcountll(both & ~union_s[w]));
      }
      if (common == 0) continue;
      const double ratio = static_cast<double>(common_out) / common;
      st.p4_worst = std::min(st.p4_worst, ratio);
      if (static_cast<double>(common_out) < st.p4_floor * common) st.p4 = false;
    }
  }
  return st;
}

namespace {

std::string stage1_line(uint32_t attempt, const StageState& st, bool accepted) {
  uint32_t bad = 0, dis = 0;
  for (bool b : st.bad) bad += b;
  for (bool b : st.disjointed) dis += b;
  return "stage 1 sample " + std::to_string(attempt) + ": bad=" + std::to_string(bad) +
         " disjointed=" + std::to_string(dis) +
         " problematic=" + std::to_string(st.problematic.size()) +
         " p4=" + (st.p4 ? "yes" : "no") + " p5=" + (st.p5 ? "yes" : "no") +
         (accepted ? " -> accepted" : " -> rejected");
}

std::vector<std::string> gate_failures(const StageState& st, bool enforce) {
  std::vector<std::string> out;
  if (!st.p1) out.push_back("P1");
  if (!st.p2) out.push_back("P2");
  if (!st.p3) out.push_back("P3");
  if (enforce && !st.p4) out.push_back("P4");
  if (enforce && !st.p5) out.push_back("P5");
  return out;
}

constexpr uint32_t kMaxSampleAttempts = 50;

}  // namespace

HeartResult heart_embed(const Graph& g, const Graph& h, const HeartParams& p, uint64_t seed,
                        bool enforce_assumptions) {
  const uint32_t t = h.vertex_count();
  const uint32_t n = g.vertex_count();
  HeartResult res;

  if (t == 0) {
    res.model = MinorModel{h, g, {}};
    res.log.push_back("empty pattern: nothing to embed");
    return res;
  }
  if (n == 0) throw std::invalid_argument("heart embedding needs a nonempty host");
  if (Rational(g.min_degree()) < p.lambda * Rational(n)) {
    throw std::invalid_argument("host minimum degree is below lambda * n");
  }
  if (enforce_assumptions) {
    if (!p.slack_covers_theta) {
      throw std::invalid_argument(
          "assumption epsilon(1-epsilon)(2 lambda - 1) ell >= 2 theta fails for these parameters");
    }
    if (static_cast<double>(n) < p.min_n_pair_concentration) {
      throw std::invalid_argument("host is smaller than the pair-concentration floor");
    }
    if (static_cast<double>(n) < p.min_n_degree_concentration) {
      throw std::invalid_argument("host is smaller than the degree-concentration floor");
    }
    if (Rational(n) < (Rational(1) + p.epsilon) * Rational(p.ell) * Rational(t)) {
      throw std::invalid_argument("host has fewer than (1+epsilon) * ell * t vertices");
    }
  }

  const uint32_t need = p.ell * t;
  if (n < need) {
    res.violated = {"P0"};
    res.log.push_back("stage 1: host has " + std::to_string(n) + " vertices, " +
                      std::to_string(need) + " disjoint seed slots required");
    return res;
  }

  SplitMix64 rng(seed);
  StageState st;
  bool accepted = false;
  for (uint32_t attempt = 1; attempt <= kMaxSampleAttempts; ++attempt) {
    std::vector<uint32_t> draw = rng.sample_prefix(n, need);
    std::vector<std::vector<uint32_t>> S(t);
    for (uint32_t i = 0; i < t; ++i) {
      S[i].assign(draw.begin() + static_cast<size_t>(i) * p.ell,
                  draw.begin() + static_cast<size_t>(i + 1) * p.ell);
      std::sort(S[i].begin(), S[i].end());
    }
    st = evaluate_state(g, h, p, S);
    res.stage1_attempts = attempt;
    accepted = st.p1 && st.p2 && st.p3 && (!enforce_assumptions || (st.p4 && st.p5));
    res.log.push_back(stage1_line(attempt, st, accepted));
    if (accepted) break;
  }
  if (!accepted) {
    res.violated = gate_failures(st, enforce_assumptions);
    res.state = st;
    return res;
  }

  std::vector<uint32_t> bad_idx;
  for (uint32_t i = 0; i < t; ++i) {
    if (st.bad[i]) bad_idx.push_back(i);
  }
  if (!bad_idx.empty()) {
    std::vector<bool> in_s(n, false);
    for (const auto& s : st.S) {
      for (uint32_t v : s) in_s[v] = true;
    }
    std::vector<uint32_t> w_pool;
    for (uint32_t v = 0; v < n; ++v) {
      if (!in_s[v]) w_pool.push_back(v);
    }
    const uint64_t booster = static_cast<uint64_t>(p.ell) * p.ell;
    if (w_pool.size() < booster * bad_idx.size()) {
      res.violated = {"Q0"};
      res.state = st;
      res.log.push_back("stage 2: " + std::to_string(w_pool.size()) +
                        " free vertices cannot host " + std::to_string(bad_idx.size()) +
                        " booster sets of size " + std::to_string(booster));
      return res;
    }
    bool q_ok = false;
    for (uint32_t attempt = 1; attempt <= kMaxSampleAttempts; ++attempt) {
      std::vector<uint32_t> draw = rng.sample_prefix(static_cast<uint32_t>(w_pool.size()),
                                                     static_cast<uint32_t>(booster * bad_idx.size()));
      std::vector<std::vector<uint32_t>> T(t);
      for (size_t b = 0; b < bad_idx.size(); ++b) {
        auto& slot = T[bad_idx[b]];
        for (uint64_t j = 0; j < booster; ++j) slot.push_back(w_pool[draw[b * booster + j]]);
        std::sort(slot.begin(), slot.end());
      }
      st = evaluate_state(g, h, p, st.S, T);
      res.stage2_attempts = attempt;
      q_ok = st.q1;
      res.log.push_back("stage 2 sample " + std::to_string(attempt) +
                        ": nasty=" + std::to_string(st.nasty.size()) +
                        (q_ok ? " -> accepted" : " -> rejected"));
      if (q_ok) break;
    }
    if (!q_ok) {
      res.violated = {"Q1"};
      res.state = st;
      return res;
    }
  }

  // Stage 3: deterministic connectors and repairs. Any starvation here is a
  // genuine failure of the run, reported against the properties the accepted
  // families ended up violating; if every premise of the counting argument
  // held, starvation would contradict it, so that case aborts loudly.
  const BitRows rows(g);
  const uint32_t words = std::max<uint32_t>(rows.words(), 1);
  Mask used(words, 0);
  std::vector<Mask> mask_x(t, Mask(words, 0)), nbr_x(t, Mask(words, 0));
  std::vector<std::vector<uint32_t>> X(t);
  for (uint32_t i = 0; i < t; ++i) {
    X[i] = st.S[i];
    X[i].insert(X[i].end(), st.T[i].begin(), st.T[i].end());
    std::sort(X[i].begin(), X[i].end());
    for (uint32_t v : X[i]) {
      set_bit(used, v);
      set_bit(mask_x[i], v);
      or_row(nbr_x[i], rows, v);
    }
  }

  std::vector<std::vector<uint32_t>> U(t);
  uint32_t connectors = 0, repairs = 0;
  auto starve = [&](const std::string& detail) {
    st = evaluate_state(g, h, p, st.S, st.T, U);
    res.state = st;
    res.violated = gate_failures(st, true);
    if (!st.q1) res.violated.push_back("Q1");
    if (res.violated.empty()) {
      const double nd = static_cast<double>(n);
      if (!p.slack_covers_theta) res.violated.push_back("A1");
      if (nd < p.min_n_pair_concentration) res.violated.push_back("A2");
      if (nd < p.min_n_degree_concentration) res.violated.push_back("A3");
      if (Rational(n) < (Rational(1) + p.epsilon) * Rational(p.ell) * Rational(t)) {
        res.violated.push_back("N");
      }
      ensure(!res.violated.empty(), "connector search starved with every premise satisfied");
    }
    res.log.push_back("stage 3: " + detail);
  };

  for (uint32_t i = 0; i < t; ++i) {
    const auto comps = g.induced(X[i]).components();
    for (size_t j = 0; j + 1 < comps.size(); ++j) {
      const uint32_t a = X[i][comps[j][0]];
      const uint32_t b = X[i][comps[j + 1][0]];
      const uint32_t z = first_free_common(rows, a, b, used);
      if (z >= n) {
        starve("no unused common neighbor links components of branch " + std::to_string(i));
        return res;
      }
      U[i].push_back(z);
      set_bit(used, z);
      set_bit(mask_x[i], z);
      or_row(nbr_x[i], rows, z);
      ++connectors;
    }
  }
  for (auto [u, v] : h.edges()) {
    if (intersects(nbr_x[u], mask_x[v])) continue;
    const uint32_t z = first_free_common(nbr_x[u], nbr_x[v], used);
    if (z >= n) {
      starve("no unused common neighbor realizes pattern edge " + std::to_string(u) + "-" +
             std::to_string(v));
      return res;
    }
    U[u].push_back(z);
    set_bit(used, z);
    set_bit(mask_x[u], z);
    or_row(nbr_x[u], rows, z);
    ++repairs;
  }

  st = evaluate_state(g, h, p, st.S, st.T, U);
  res.state = st;
  res.log.push_back("stage 3: " + std::to_string(connectors) + " connectors, " +
                    std::to_string(repairs) + " repairs");

  MinorModel model{h, g, {}};
  model.branch_sets.resize(t);
  for (uint32_t i = 0; i < t; ++i) {
    model.branch_sets[i] = X[i];
    model.branch_sets[i].insert(model.branch_sets[i].end(), U[i].begin(), U[i].end());
    std::sort(model.branch_sets[i].begin(), model.branch_sets[i].end());
  }
  const ModelCheck check = validate_model(model);
  ensure(check.ok, "heart embedding produced a valid model: " + check.violation);
  res.model = std::move(model);
  return res;
}

}  // namespace minorforge
