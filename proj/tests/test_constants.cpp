#include "minorforge/constants.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "minorforge/rational.hpp"

using minorforge::derive;
using minorforge::Infeasible;
using minorforge::MaderConstants;
using minorforge::min_ratio_and_gap;
using minorforge::Objective;
using minorforge::optimize;
using minorforge::Rational;
using minorforge::with_bounds;

namespace {

Rational gap(const MaderConstants& k, int i) {
  return Rational(2) * k.b[i] - k.a[i];
}

Rational ratio(const MaderConstants& k, int i) { return k.b[i] / k.a[i]; }

// Independent recomputation of alpha and beta at 50 decimal digits.
std::pair<double, double> alpha_beta_error_50(const MaderConstants& k) {
  using f50 = boost::multiprecision::cpp_dec_float_50;
  const f50 c1 = f50(k.c1.num()) / f50(k.c1.den());
  const f50 c2 = f50(k.c2.num()) / f50(k.c2.den());
  const f50 a[4] = {c1 / 2 + 1, f50(2), c2, 4 - c1 / 2};
  const f50 b[4] = {f50(2), 1 + 1 / c1, f50(1), c2};
  f50 alpha = 4, beta = 0;
  for (int i = 0; i < 4; ++i) {
    const f50 g = 2 * b[i] - a[i];
    alpha = std::max(alpha, f50(4 / g));
    beta = std::max(beta, f50(4 * (a[i] - b[i]) / (a[i] * g)));
  }
  const f50 da = abs(alpha - f50(k.alpha.num()) / f50(k.alpha.den()));
  const f50 db = abs(beta - f50(k.beta.num()) / f50(k.beta.den()));
  return {da.convert_to<double>(), db.convert_to<double>()};
}

}  // namespace

TEST_CASE("derive reproduces the first pinned constant pair") {
  const MaderConstants k = derive(Rational(27, 8), Rational(293, 200));

  CHECK(k.a[0] == Rational(43, 16));
  CHECK(k.b[0] == Rational(2));
  CHECK(k.a[1] == Rational(2));
  CHECK(k.b[1] == Rational(35, 27));
  CHECK(k.a[2] == Rational(293, 200));
  CHECK(k.b[2] == Rational(1));
  CHECK(k.a[3] == Rational(37, 16));
  CHECK(k.b[3] == Rational(293, 200));

  CHECK(k.alpha == Rational(800, 107));
  CHECK(std::abs(k.alpha.to_double() - 7.477) <= 1e-3);
  CHECK(k.beta == Rational(19, 8));
  CHECK(std::abs(k.beta.to_double() - 2.375) <= 1e-3);
}

TEST_CASE("derive reproduces the second pinned constant pair") {
  const MaderConstants k = derive(Rational(871, 250), Rational(713, 500));
  CHECK(k.alpha == Rational(2000, 287));
  CHECK(std::abs(k.alpha.to_double() - 6.9687) <= 1e-3);
  CHECK(k.beta == Rational(621, 250));
  CHECK(std::abs(k.beta.to_double() - 2.484) <= 1e-3);
}

TEST_CASE("derive at a round point computes exactly") {
  const MaderConstants k = derive(Rational(4), Rational(3, 2));
  CHECK(k.alpha == Rational(8));
  CHECK(k.beta == Rational(3));
  CHECK(gap(k, 0) == Rational(1));
  CHECK(gap(k, 1) == Rational(1, 2));
  CHECK(gap(k, 2) == Rational(1, 2));
  CHECK(gap(k, 3) == Rational(1));
}

TEST_CASE("derive agrees with a 50-digit recomputation") {
  for (const MaderConstants& k :
       {derive(Rational(27, 8), Rational(293, 200)),
        derive(Rational(871, 250), Rational(713, 500)),
        derive(Rational(32929, 10000), Rational(15341, 10000))}) {
    const auto [da, db] = alpha_beta_error_50(k);
    CHECK(da < 1e-10);
    CHECK(db < 1e-10);
  }
}

TEST_CASE("min_ratio_and_gap reproduces the pinned minima") {
  const auto [r1, g1] =
      min_ratio_and_gap(Rational(32929, 10000), Rational(15341, 10000));
  CHECK(r1 == Rational(30682, 47071));
  CHECK(std::abs(r1.to_double() - 0.6518) <= 1e-4);
  CHECK(g1 == Rational(4659, 10000));

  const auto [r2, g2] =
      min_ratio_and_gap(Rational(34641, 10000), Rational(14227, 10000));
  CHECK(r2 == Rational(28454, 45359));
  CHECK(std::abs(r2.to_double() - 0.6273) <= 1e-4);
  CHECK(g2 == Rational(5773, 10000));

  const auto [r3, g3] = min_ratio_and_gap(Rational(4), Rational(3, 2));
  CHECK(r3 == Rational(5, 8));
  CHECK(g3 == Rational(1, 2));
}

TEST_CASE("infeasible pairs are rejected with the violated inequality") {
  CHECK_THROWS_AS(derive(Rational(2000001, 1000000), Rational(1000001, 1000000)),
                  Infeasible);
  CHECK_THROWS_AS(derive(Rational(2), Rational(3, 2)), Infeasible);
  CHECK_THROWS_AS(derive(Rational(3), Rational(1)), Infeasible);
  CHECK_THROWS_AS(derive(Rational(7), Rational(3, 2)), Infeasible);
  CHECK_THROWS_AS(derive(Rational(3), Rational(5, 2)), Infeasible);
  CHECK_THROWS_AS(derive(Rational(0), Rational(3, 2)), Infeasible);
  CHECK_THROWS_AS(derive(Rational(-3), Rational(3, 2)), Infeasible);
  CHECK_THROWS_AS(
      min_ratio_and_gap(Rational(2000001, 1000000), Rational(1000001, 1000000)),
      Infeasible);
  CHECK_THROWS_WITH_AS(derive(Rational(6), Rational(3, 2)),
                       "derive: gap 2*b1 - a1 = 0 is not positive (c1 = 6, c2 = 3/2)",
                       Infeasible);
}

TEST_CASE("with_bounds keeps dominating bounds and rejects the rest") {
  const MaderConstants ok =
      with_bounds(Rational(27, 8), Rational(293, 200), Rational(7477, 1000),
                  Rational(19, 8));
  CHECK(ok.alpha == Rational(7477, 1000));
  CHECK(ok.beta == Rational(19, 8));

  const MaderConstants tight =
      with_bounds(Rational(871, 250), Rational(713, 500), Rational(69687, 10000),
                  Rational(621, 250));
  CHECK(tight.alpha == Rational(69687, 10000));
  CHECK(tight.beta == Rational(621, 250));

  CHECK_THROWS_AS(with_bounds(Rational(27, 8), Rational(293, 200), Rational(4),
                              Rational(0)),
                  Infeasible);
  CHECK_THROWS_AS(with_bounds(Rational(27, 8), Rational(293, 200),
                              Rational(7477, 1000), Rational(23, 10)),
                  Infeasible);
  CHECK_THROWS_AS(with_bounds(Rational(2), Rational(3, 2), Rational(100),
                              Rational(100)),
                  Infeasible);
}

TEST_CASE("derived values satisfy the structural invariants on a sweep") {
  int feasible_pairs = 0;
  for (long long p = 205; p <= 595; p += 13) {
    for (long long q = 105; q <= 295; q += 11) {
      const Rational c1(p, 100), c2(q, 100);
      MaderConstants k;
      try {
        k = derive(c1, c2);
      } catch (const Infeasible&) {
        continue;
      }
      ++feasible_pairs;
      bool alpha_tight = k.alpha == Rational(4);
      bool beta_tight = false;
      for (int i = 0; i < 4; ++i) {
        const Rational g = gap(k, i);
        CHECK(g > Rational(0));
        CHECK(g <= Rational(3));
        CHECK(k.b[i] < k.a[i]);
        CHECK(k.alpha * g >= Rational(4));
        const Rational bi = Rational(4) * (k.a[i] - k.b[i]) / (k.a[i] * g);
        CHECK(k.beta >= bi);
        if (k.alpha * g == Rational(4)) alpha_tight = true;
        if (k.beta == bi) beta_tight = true;
      }
      CHECK(alpha_tight);
      CHECK(beta_tight);

      // The second outcome pins beta from below at exactly c1 - 1.
      const Rational b2 =
          Rational(4) * (k.a[1] - k.b[1]) / (k.a[1] * gap(k, 1));
      CHECK(b2 == c1 - Rational(1));
      CHECK(k.beta >= c1 - Rational(1));
    }
  }
  CHECK(feasible_pairs > 150);
}

TEST_CASE("optimizer hits the pinned objective targets") {
  const MaderConstants mb = optimize(Objective::MinBeta);
  CHECK(mb.beta.to_double() <= 2.3751);
  CHECK(mb.beta.to_double() >= 2.37);
  CHECK(mb.c1.to_double() >= 3.37);
  CHECK(mb.c1.to_double() <= 3.38);
  CHECK(mb.c2.to_double() >= 1.464);
  CHECK(mb.c2.to_double() <= 1.466);

  const MaderConstants ma = optimize(Objective::MinAlpha);
  CHECK(ma.alpha.to_double() <= 6.9283);
  CHECK(ma.alpha.to_double() >= 6.92);
  CHECK(std::abs(ma.c1.to_double() - 3.46410) <= 1e-3);
  CHECK(std::abs(ma.c2.to_double() - 1.42265) <= 1e-3);

  const MaderConstants mg = optimize(Objective::MaxMinGap);
  const auto [rg_ratio, rg_gap] = min_ratio_and_gap(mg.c1, mg.c2);
  CHECK(rg_gap.to_double() >= 0.5772);
  CHECK(rg_gap.to_double() <= 0.57736);

  const MaderConstants mr = optimize(Objective::MaxMinRatio);
  const auto [mr_ratio, mr_gap] = min_ratio_and_gap(mr.c1, mr.c2);
  CHECK(mr_ratio.to_double() >= 0.6517);
  CHECK(mr_ratio.to_double() <= 0.65185);
}

TEST_CASE("at the ratio optimum the three binding ratios equalize") {
  const MaderConstants mr = optimize(Objective::MaxMinRatio);
  const double r2 = ratio(mr, 1).to_double();
  const double r3 = ratio(mr, 2).to_double();
  const double r4 = ratio(mr, 3).to_double();
  CHECK(std::abs(r2 - r3) <= 1e-3);
  CHECK(std::abs(r2 - r4) <= 1e-3);
  CHECK(std::abs(r3 - r4) <= 1e-3);
  CHECK(std::abs(r2 - 0.6518) <= 1e-3);
  CHECK(std::abs(r3 - 0.6518) <= 1e-3);
  CHECK(std::abs(r4 - 0.6518) <= 1e-3);
}

TEST_CASE("optimizer caps constrain the companion quantity") {
  const MaderConstants unc = optimize(Objective::MinBeta);
  const MaderConstants capped = optimize(Objective::MinBeta, 7.478);
  CHECK(capped.alpha.to_double() <= 7.478 + 1e-12);
  CHECK(capped.beta.to_double() <= 2.3751);
  CHECK(capped.beta >= unc.beta);

  const MaderConstants tight_ratio = optimize(Objective::MaxMinRatio, 0.55);
  const auto [r, g] = min_ratio_and_gap(tight_ratio.c1, tight_ratio.c2);
  CHECK(g.to_double() >= 0.55 - 1e-12);
  CHECK(r.to_double() >= 0.642);
  CHECK(r.to_double() <= 0.644);

  CHECK_THROWS_AS(optimize(Objective::MinBeta, 4.5), Infeasible);
  CHECK_THROWS_AS(optimize(Objective::MinAlpha, 2.0), Infeasible);
}

TEST_CASE("optimizer results do not depend on the thread count") {
  setenv("MINORFORGE_THREADS", "1", 1);
  const MaderConstants one = optimize(Objective::MaxMinGap);
  setenv("MINORFORGE_THREADS", "5", 1);
  const MaderConstants five = optimize(Objective::MaxMinGap);
  unsetenv("MINORFORGE_THREADS");
  const MaderConstants def = optimize(Objective::MaxMinGap);

  CHECK(one.c1 == five.c1);
  CHECK(one.c2 == five.c2);
  CHECK(one.c1 == def.c1);
  CHECK(one.c2 == def.c2);
}
