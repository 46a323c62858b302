#include "minorforge/constants.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "minorforge/check.hpp"

namespace minorforge {

namespace {

struct Coefficients {
  std::array<Rational, 4> a;
  std::array<Rational, 4> b;
};

Coefficients coefficients(const Rational& c1, const Rational& c2) {
  const Rational half_c1 = c1 / Rational(2);
  Coefficients c;
  c.a = {half_c1 + Rational(1), Rational(2), c2, Rational(4) - half_c1};
  c.b = {Rational(2), Rational(1) + Rational(1) / c1, Rational(1), c2};
  return c;
}

Rational gap_of(const Coefficients& c, int i) {
  return Rational(2) * c.b[i] - c.a[i];
}

bool feasible(const Coefficients& c) {
  for (int i = 0; i < 4; ++i) {
    const Rational gap = gap_of(c, i);
    if (gap <= Rational(0) || gap > Rational(3) || c.b[i] >= c.a[i]) return false;
  }
  return true;
}

std::string at_point(const Rational& c1, const Rational& c2) {
  return " (c1 = " + c1.str() + ", c2 = " + c2.str() + ")";
}

void require_feasible(const char* op, const Rational& c1, const Rational& c2,
                      const Coefficients& c) {
  for (int i = 0; i < 4; ++i) {
    const std::string idx = std::to_string(i + 1);
    const Rational gap = gap_of(c, i);
    if (gap <= Rational(0))
      throw Infeasible(std::string(op) + ": gap 2*b" + idx + " - a" + idx + " = " +
                       gap.str() + " is not positive" + at_point(c1, c2));
    if (gap > Rational(3))
      throw Infeasible(std::string(op) + ": gap 2*b" + idx + " - a" + idx + " = " +
                       gap.str() + " exceeds 3" + at_point(c1, c2));
    if (c.b[i] >= c.a[i])
      throw Infeasible(std::string(op) + ": b" + idx + " = " + c.b[i].str() +
                       " is not below a" + idx + " = " + c.a[i].str() + at_point(c1, c2));
  }
}

Rational minimal_alpha(const Coefficients& c) {
  Rational alpha(4);
  for (int i = 0; i < 4; ++i) alpha = std::max(alpha, Rational(4) / gap_of(c, i));
  return alpha;
}

Rational minimal_beta(const Coefficients& c) {
  Rational beta(0);
  for (int i = 0; i < 4; ++i) {
    const Rational cand = Rational(4) * (c.a[i] - c.b[i]) / (c.a[i] * gap_of(c, i));
    beta = std::max(beta, cand);
  }
  return beta;
}

// Search state: c1 = p/scale, c2 = q/scale. Scores compare lower-is-better
// (max objectives are negated), ties toward smaller c1 then smaller c2.
struct Candidate {
  double score = std::numeric_limits<double>::infinity();
  long long p = 0;
  long long q = 0;
  bool found = false;
};

bool better(const Candidate& x, const Candidate& y) {
  if (!x.found || !y.found) return x.found;
  if (x.score != y.score) return x.score < y.score;
  if (x.p != y.p) return x.p < y.p;
  return x.q < y.q;
}

Candidate evaluate(Objective objective, const std::optional<double>& cap,
                   long long p, long long q, long long scale) {
  const Rational c1(p, scale);
  const Rational c2(q, scale);
  const Coefficients c = coefficients(c1, c2);
  if (!feasible(c)) return {};

  double min_gap = std::numeric_limits<double>::infinity();
  double min_ratio = std::numeric_limits<double>::infinity();
  double beta = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double a = c.a[i].to_double();
    const double b = c.b[i].to_double();
    const double gap = 2.0 * b - a;
    min_gap = std::min(min_gap, gap);
    min_ratio = std::min(min_ratio, b / a);
    beta = std::max(beta, 4.0 * (a - b) / (a * gap));
  }
  const double alpha = std::max(4.0, 4.0 / min_gap);

  double score = 0.0;
  bool within_cap = true;
  switch (objective) {
    case Objective::MinBeta:
      score = beta;
      within_cap = !cap || alpha <= *cap;
      break;
    case Objective::MinAlpha:
      score = alpha;
      within_cap = !cap || beta <= *cap;
      break;
    case Objective::MaxMinRatio:
      score = -min_ratio;
      within_cap = !cap || min_gap >= *cap;
      break;
    case Objective::MaxMinGap:
      score = -min_gap;
      within_cap = !cap || min_ratio >= *cap;
      break;
  }
  if (!within_cap) return {};
  return {score, p, q, true};
}

unsigned thread_count() {
  if (const char* env = std::getenv("MINORFORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

Candidate coarse_scan(Objective objective, const std::optional<double>& cap,
                      long long scale) {
  const long long p_lo = 2 * scale + 1, p_hi = 6 * scale;
  const long long q_lo = scale + 1, q_hi = 3 * scale;

  const unsigned threads =
      std::min<unsigned>(thread_count(), static_cast<unsigned>(p_hi - p_lo + 1));
  std::vector<Candidate> best_per(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Candidate local;
      for (long long p = p_lo + t; p <= p_hi; p += threads)
        for (long long q = q_lo; q <= q_hi; ++q) {
          const Candidate cand = evaluate(objective, cap, p, q, scale);
          if (better(cand, local)) local = cand;
        }
      best_per[t] = local;
    });
  }
  for (auto& th : pool) th.join();

  Candidate best;
  for (const Candidate& cand : best_per)
    if (better(cand, best)) best = cand;
  return best;
}

// 21x21 window around the incumbent, re-centered while it keeps improving.
// Each move strictly decreases the (score, p, q) key, so this terminates.
Candidate refine_at_scale(Objective objective, const std::optional<double>& cap,
                          Candidate best, long long scale) {
  const long long p_lo = 2 * scale + 1, p_hi = 6 * scale;
  const long long q_lo = scale + 1, q_hi = 3 * scale;
  for (;;) {
    Candidate improved = best;
    for (long long p = std::max(p_lo, best.p - 10); p <= std::min(p_hi, best.p + 10); ++p)
      for (long long q = std::max(q_lo, best.q - 10); q <= std::min(q_hi, best.q + 10); ++q) {
        const Candidate cand = evaluate(objective, cap, p, q, scale);
        if (better(cand, improved)) improved = cand;
      }
    if (!better(improved, best)) return best;
    best = improved;
  }
}

}  // namespace

MaderConstants derive(const Rational& c1, const Rational& c2) {
  if (c1.is_zero())
    throw Infeasible("derive: c1 = 0 is outside the feasible range");
  const Coefficients c = coefficients(c1, c2);
  require_feasible("derive", c1, c2, c);
  MaderConstants out;
  out.c1 = c1;
  out.c2 = c2;
  out.a = c.a;
  out.b = c.b;
  out.alpha = minimal_alpha(c);
  out.beta = minimal_beta(c);
  return out;
}

MaderConstants with_bounds(const Rational& c1, const Rational& c2,
                           const Rational& alpha, const Rational& beta) {
  MaderConstants out = derive(c1, c2);
  if (alpha < out.alpha)
    throw Infeasible("with_bounds: alpha = " + alpha.str() + " is below the minimum " +
                     out.alpha.str() + at_point(c1, c2));
  if (beta < out.beta)
    throw Infeasible("with_bounds: beta = " + beta.str() + " is below the minimum " +
                     out.beta.str() + at_point(c1, c2));
  out.alpha = alpha;
  out.beta = beta;
  return out;
}

std::pair<Rational, Rational> min_ratio_and_gap(const Rational& c1,
                                                const Rational& c2) {
  if (c1.is_zero())
    throw Infeasible("min_ratio_and_gap: c1 = 0 is outside the feasible range");
  const Coefficients c = coefficients(c1, c2);
  require_feasible("min_ratio_and_gap", c1, c2, c);
  Rational ratio = c.b[0] / c.a[0];
  Rational gap = gap_of(c, 0);
  for (int i = 1; i < 4; ++i) {
    ratio = std::min(ratio, c.b[i] / c.a[i]);
    gap = std::min(gap, gap_of(c, i));
  }
  return {ratio, gap};
}

MaderConstants optimize(Objective objective, std::optional<double> cap) {
  long long scale = 100;
  Candidate best = coarse_scan(objective, cap, scale);
  if (!best.found)
    throw Infeasible("optimize: no feasible grid point satisfies the cap");

  while (scale < 100000) {
    scale *= 10;
    best.p *= 10;
    best.q *= 10;
    best = refine_at_scale(objective, cap, best, scale);
  }
  return derive(Rational(best.p, scale), Rational(best.q, scale));
}

}  // namespace minorforge
