#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dyana/hardy.hpp"
#include "dyana/probab.hpp"
#include "dyana/rng.hpp"

using namespace dyana;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// independent oracle: averages over generation-k blocks with plain loops
std::vector<double> oracle_ek(const std::vector<double>& vals, int k) {
  int m = 0;
  while ((std::size_t{1} << m) < vals.size()) ++m;
  if (k >= m) return vals;
  const std::size_t block = std::size_t{1} << (m - k);
  std::vector<double> out(vals.size());
  for (std::size_t start = 0; start < vals.size(); start += block) {
    double s = 0.0;
    for (std::size_t i = 0; i < block; ++i) s += vals[start + i];
    s /= static_cast<double>(block);
    for (std::size_t i = 0; i < block; ++i) out[start + i] = s;
  }
  return out;
}

std::vector<double> oracle_maximal(const std::vector<double>& vals) {
  int m = 0;
  while ((std::size_t{1} << m) < vals.size()) ++m;
  std::vector<double> sup(vals.size(), 0.0);
  for (int k = 0; k <= m; ++k) {
    const auto ek = oracle_ek(vals, k);
    for (std::size_t i = 0; i < vals.size(); ++i)
      sup[i] = std::max(sup[i], std::fabs(ek[i]));
  }
  return sup;
}

DyadicStepFn real_fn(const std::vector<double>& vals) {
  int m = 0;
  while ((std::size_t{1} << m) < vals.size()) ++m;
  return DyadicStepFn::from_real(m, vals);
}

DyadicStepFn random_fn(Rng& rng, int m) {
  std::vector<cd> vals(std::size_t{1} << m);
  for (auto& v : vals) v = cd(rng.normal(), 0.0);
  return DyadicStepFn(m, std::move(vals));
}

}  // namespace

TEST_CASE("maximal function values") {
  const DyadicStepFn f = DyadicStepFn::indicator({2, 0}, 2);
  const DyadicStepFn mf = maximal(f);
  REQUIRE(mf.cells() == 4);
  CHECK(mf[0].real() == doctest::Approx(1.0));
  CHECK(mf[1].real() == doctest::Approx(0.5));
  CHECK(mf[2].real() == doctest::Approx(0.25));
  CHECK(mf[3].real() == doctest::Approx(0.25));

  const DyadicStepFn c = DyadicStepFn::constant(cd(-3.0, 0.0));
  CHECK(lp_norm(maximal(c) - DyadicStepFn::constant(3.0), kInf) == 0.0);

  // against the independent enumeration oracle, plus sublinearity
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<double> vals(64);
    for (auto& v : vals) v = rng.normal();
    const DyadicStepFn g = real_fn(vals);
    const auto want = oracle_maximal(vals);
    const DyadicStepFn got = maximal(g);
    for (std::size_t i = 0; i < want.size(); ++i)
      CHECK(got[i].real() == doctest::Approx(want[i]).epsilon(1e-13));

    std::vector<double> vals2(64);
    for (auto& v : vals2) v = rng.normal();
    const DyadicStepFn h = real_fn(vals2);
    const DyadicStepFn lhs = maximal(g + h);
    const DyadicStepFn rhs = maximal(g) + maximal(h);
    for (std::size_t i = 0; i < 64; ++i) CHECK(lhs[i].real() <= rhs[i].real() + 1e-12);
    CHECK(lp_norm(maximal(cd(-2.0, 0.0) * g) - 2.0 * maximal(g), kInf) <= 1e-12);

    const int l = static_cast<int>(rng.below(7));
    CHECK(lp_norm(maximal(g, l) - maximal(expectation(g, l)), kInf) <= 1e-13);
  }
}

TEST_CASE("maximal level sets") {
  const DyadicStepFn f = DyadicStepFn::indicator({2, 0}, 2);

  const auto half = maximal_level_set(f, 0.5);
  REQUIRE(half.intervals.size() == 1);
  CHECK(half.intervals[0] == DyadicInterval{2, 0});
  CHECK(half.measure == doctest::Approx(0.25));
  CHECK(half.measure <= half.bound + 1e-12);
  CHECK(half.bound == doctest::Approx(0.5));

  const auto third = maximal_level_set(f, 1.0 / 3.0);
  REQUIRE(third.intervals.size() == 1);
  CHECK(third.intervals[0] == DyadicInterval{1, 0});
  CHECK(third.measure == doctest::Approx(0.5));
  CHECK(third.bound == doctest::Approx(0.75));
  CHECK(third.refined_bound <= third.bound + 1e-15);
  CHECK(third.measure <= third.refined_bound + 1e-12);

  CHECK(maximal_level_set(f, 1.0).intervals.empty());  // lambda >= sup
  CHECK_THROWS_AS(maximal_level_set(f, 0.0), std::invalid_argument);
}

TEST_CASE("lp maximal report") {
  // oracle for the p = 2 integral of M(f)^2 with f = 1_{[0,1/4)}:
  // M = (1, 1/2, 1/4, 1/4) so the integral is (1 + 1/4 + 1/16 + 1/16)/4
  const DyadicStepFn f = DyadicStepFn::indicator({2, 0}, 2);
  const auto [lhs, rhs] = lp_maximal_report(f, 2.0);
  CHECK(lhs == doctest::Approx(11.0 / 32.0).epsilon(1e-14));
  CHECK(rhs == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lhs <= rhs + 1e-10);

  const auto [l1, r1] = lp_maximal_report(haar_unit(3), 2.5);
  CHECK(l1 == doctest::Approx(1.0));
  CHECK(r1 == doctest::Approx(std::pow(2.0, 2.5) * 2.5 / 1.5));

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const DyadicStepFn g = random_fn(rng, 5);
    for (double p : {1.5, 2.0, 3.0}) {
      const auto [a, b] = lp_maximal_report(g, p);
      CHECK(a <= b + 1e-10);
    }
  }
  CHECK_THROWS_AS(lp_maximal_report(f, 1.0), std::invalid_argument);
}

TEST_CASE("square function") {
  // S of a single Rademacher function is constant 1
  const DyadicStepFn r1 = rademacher(1, 3);
  CHECK(lp_norm(square(r1) - haar_unit(0), kInf) <= 1e-14);

  const DyadicStepFn c = DyadicStepFn::constant(cd(0.0, -2.0));
  CHECK(lp_norm(square(c) - DyadicStepFn::constant(2.0), kInf) <= 1e-14);

  // L^2 identity and truncation rule
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const DyadicStepFn f = random_fn(rng, 6);
    CHECK(std::pow(lp_norm(square(f), 2.0), 2.0) ==
          doctest::Approx(std::pow(lp_norm(f, 2.0), 2.0)).epsilon(1e-10));
    const int l = static_cast<int>(rng.below(7));
    CHECK(lp_norm(square(f, l) - square(expectation(f, l)), kInf) <= 1e-13);
  }

  // sums of Rademacher functions have constant square function
  std::vector<double> alpha{0.3, -1.2, 0.7};
  DyadicStepFn f = DyadicStepFn(3, std::vector<cd>(8, cd(0.0)));
  double sumsq = 0.0;
  for (int j = 1; j <= 3; ++j) {
    f += alpha[static_cast<std::size_t>(j - 1)] * rademacher(j, 3);
    sumsq += alpha[static_cast<std::size_t>(j - 1)] * alpha[static_cast<std::size_t>(j - 1)];
  }
  const DyadicStepFn s = square(f);
  for (std::size_t i = 0; i < s.cells(); ++i)
    CHECK(s[i].real() == doctest::Approx(std::sqrt(sumsq)).epsilon(1e-12));
}

TEST_CASE("stopping-time flattening by averages") {
  // f = 1_{[0,1/4)}, lambda = 1/3: parents collapse to the root
  const DyadicStepFn f = DyadicStepFn::indicator({2, 0}, 2);
  const auto res = cz_flatten_m(f, 1.0 / 3.0);
  CHECK(!res.empty_family);
  CHECK(!res.degenerate_root);
  REQUIRE(res.intervals.size() == 1);
  CHECK(res.intervals[0] == DyadicInterval{0, 0});
  CHECK(lp_norm(res.flattened - DyadicStepFn::constant(0.25), kInf) <= 1e-15);

  // large lambda: family empty, f unchanged
  const auto big = cz_flatten_m(f, 2.0);
  CHECK(big.empty_family);
  CHECK(lp_norm(big.flattened - f, kInf) == 0.0);

  // |avg| > lambda at the root itself: degenerate convention
  const auto root = cz_flatten_m(DyadicStepFn::constant(5.0), 1.0);
  CHECK(root.degenerate_root);

  // lemma checks on random data
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const DyadicStepFn g = random_fn(rng, 5);
    const double lam = 0.05 + rng.uniform();
    const auto r = cz_flatten_m(g, lam);
    if (r.empty_family || r.degenerate_root) continue;
    const DyadicStepFn mg = maximal(g);
    for (std::size_t i = 0; i < r.flattened.cells(); ++i)
      CHECK(std::abs(r.flattened[i]) <= std::min(lam, mg[i].real()) + 1e-12);
    // averages agree on intervals meeting the complement of the family
    for (int k = 0; k <= 5; ++k) {
      for (const auto& K : dyadic_partition(k)) {
        bool meets_complement = false;
        const int m = 5;
        const std::uint64_t lo = K.j << (m - K.k), hi = (K.j + 1) << (m - K.k);
        for (std::uint64_t cell = lo; cell < hi && !meets_complement; ++cell) {
          const double x = (static_cast<double>(cell) + 0.5) / 32.0;
          bool covered = false;
          for (const auto& L : r.intervals) covered = covered || L.contains(x);
          meets_complement = !covered;
        }
        if (meets_complement)
          CHECK(std::abs(g.average_on(K) - r.flattened.average_on(K)) <= 1e-12);
      }
    }
    // S(f) = S(f_lambda) off the union of the parent family
    const DyadicStepFn sf = square(g), sfl = square(r.flattened);
    for (std::size_t i = 0; i < sf.cells(); ++i) {
      const double x = (static_cast<double>(i) + 0.5) / 32.0;
      bool covered = false;
      for (const auto& L : r.intervals) covered = covered || L.contains(x);
      if (!covered) CHECK(std::fabs(sf[i].real() - sfl[i].real()) <= 1e-11);
    }
  }
}

TEST_CASE("stopping-time flattening by the square function") {
  // S(r1) = 1: lambda above it leaves f alone, lambda below hits the root
  const DyadicStepFn r1 = rademacher(1, 2);
  const auto high = cz_flatten_s(r1, 2.0);
  CHECK(high.empty_family);
  CHECK(lp_norm(high.flattened - r1, kInf) == 0.0);

  const auto low = cz_flatten_s(r1, 0.5);
  CHECK(low.degenerate_root);
  CHECK(lp_norm(low.flattened - DyadicStepFn::constant(0.0), kInf) <= 1e-15);

  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const DyadicStepFn g = random_fn(rng, 5);
    for (double lam : {0.25, 0.5, 1.0, 2.0}) {
      const auto r = cz_flatten_s(g, lam);
      const DyadicStepFn sf = square(g);
      // the S level set is a union of dyadic intervals: the family covers it
      double level_meas = 0.0;
      for (std::size_t i = 0; i < sf.cells(); ++i)
        if (sf[i].real() > lam) level_meas += 1.0 / 32.0;
      double fam_meas = 0.0;
      for (const auto& L : r.intervals) fam_meas += L.length();
      if (!r.empty_family) {
        CHECK(fam_meas >= level_meas - 1e-12);
        CHECK(fam_meas <= 2.0 * level_meas + 1e-12);
      }
      if (r.empty_family || r.degenerate_root) continue;
      const DyadicStepFn sg = square(r.flattened);
      for (std::size_t i = 0; i < sg.cells(); ++i)
        CHECK(sg[i].real() <= std::min(lam, sf[i].real()) + 1e-12);
    }
  }
}

TEST_CASE("distribution-function integration") {
  const DyadicStepFn g = DyadicStepFn::indicator({1, 0}, 1);
  CHECK(distribution_integral(g, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(distribution_integral(DyadicStepFn::constant(0.0), 1.0) == 0.0);

  const DyadicStepFn three = real_fn({0.5, 2.0, 1.0, 0.5});
  CHECK(distribution_integral(three, 1.5) ==
        doctest::Approx(std::pow(lp_norm(three, 1.5), 1.5)).epsilon(1e-13));

  CHECK_THROWS_AS(distribution_integral(real_fn({-1.0, 0.0}), 1.0), std::invalid_argument);
}

TEST_CASE("p = 4 decomposition") {
  const auto r = p4_decomposition(rademacher(1, 2));
  CHECK(r.s4 == doctest::Approx(1.0));
  CHECK(r.a == doctest::Approx(1.0));
  CHECK(r.b == doctest::Approx(0.0));

  const auto c = p4_decomposition(DyadicStepFn::constant(cd(0.0, 1.5)));
  CHECK(c.s4 == doctest::Approx(std::pow(1.5, 4.0)));
  CHECK(c.a == doctest::Approx(std::pow(1.5, 4.0)));
  CHECK(c.b == doctest::Approx(0.0));

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const DyadicStepFn f = random_fn(rng, 5);
    const auto rep = p4_decomposition(f);
    // the identity, with S^4 recomputed by direct quadrature of S
    const DyadicStepFn s = square(f);
    double s4 = 0.0;
    for (std::size_t i = 0; i < s.cells(); ++i) s4 += std::pow(s[i].real(), 4.0) / 32.0;
    CHECK(rep.s4 == doctest::Approx(s4).epsilon(1e-12));
    CHECK(rep.s4 == doctest::Approx(rep.a + 2.0 * rep.b).epsilon(1e-9));
  }
}

TEST_CASE("duality pairing") {
  const DyadicStepFn r1 = rademacher(1, 3);
  const auto same = duality_pairing(r1, r1);
  CHECK(same.product_integral.real() == doctest::Approx(1.0));
  CHECK(same.martingale_sum.real() == doctest::Approx(1.0));
  CHECK(same.s_pairing == doctest::Approx(1.0));

  const auto zero = duality_pairing(r1, DyadicStepFn::constant(0.0));
  CHECK(std::abs(zero.product_integral) == 0.0);
  CHECK(std::abs(zero.martingale_sum) == 0.0);
  CHECK(zero.s_pairing == 0.0);

  const auto haars = duality_pairing(haar({0, 0}, 2), haar({1, 0}, 2));
  CHECK(std::abs(haars.product_integral) <= 1e-14);
  CHECK(std::abs(haars.martingale_sum) <= 1e-14);

  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const DyadicStepFn f1 = random_fn(rng, 5), f2 = random_fn(rng, 5);
    const auto rep = duality_pairing(f1, f2);
    CHECK(std::abs(rep.product_integral - rep.martingale_sum) <= 1e-10);
    CHECK(std::abs(rep.product_integral) <= rep.s_pairing + 1e-10);
  }
}

TEST_CASE("interval pruning") {
  const auto two = interval_prune({{0.0, 2.0}, {1.0, 3.0}, {1.5, 2.5}});
  CHECK(two.size() == 2);
  double lo = 1e9, hi = -1e9;
  for (const auto& I : two) {
    lo = std::min(lo, I.a);
    hi = std::max(hi, I.b);
  }
  CHECK(lo == 0.0);
  CHECK(hi == 3.0);

  const auto disjoint = interval_prune({{0.0, 1.0}, {2.0, 3.0}});
  CHECK(disjoint.size() == 2);

  std::vector<RealInterval> nested;
  for (int i = 0; i < 10; ++i)
    nested.push_back({static_cast<double>(i), 20.0 - i});
  CHECK(interval_prune(nested).size() == 1);

  // sum of integrals over the pruned family is at most twice the integral
  // over the union (nonnegative f == 1)
  Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    std::vector<RealInterval> family;
    for (int i = 0; i < 8; ++i) {
      const double a = 3.0 * rng.uniform();
      family.push_back({a, a + 1.5 * rng.uniform()});
    }
    const auto pruned = interval_prune(family);
    double sum_lengths = 0.0;
    for (const auto& I : pruned) sum_lengths += I.length();
    // measure of the union by sweeping
    std::vector<RealInterval> sorted = pruned;
    std::sort(sorted.begin(), sorted.end(),
              [](const RealInterval& x, const RealInterval& y) { return x.a < y.a; });
    double unionmeas = 0.0, cur_a = 0.0, cur_b = -1.0;
    for (const auto& I : sorted) {
      if (I.a > cur_b) {
        unionmeas += std::max(0.0, cur_b - cur_a);
        cur_a = I.a;
        cur_b = I.b;
      } else {
        cur_b = std::max(cur_b, I.b);
      }
    }
    unionmeas += std::max(0.0, cur_b - cur_a);
    CHECK(sum_lengths <= 2.0 * unionmeas + 1e-12);
  }
}

TEST_CASE("weak-type estimate for S") {
  const auto rep = weak_type_s_report(rademacher(1, 2), 0.5);
  CHECK(rep.level_measure == doctest::Approx(1.0));
  CHECK(rep.bound == doctest::Approx(6.0));
  CHECK(rep.level_measure <= rep.bound + 1e-12);

  const auto huge = weak_type_s_report(rademacher(1, 2), 50.0);
  CHECK(huge.level_measure == 0.0);

  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const DyadicStepFn f = random_fn(rng, 5);
    const double lam = 0.05 + 2.0 * rng.uniform();
    const auto r = weak_type_s_report(f, lam);
    CHECK(r.level_measure <= r.bound + 1e-12);
    CHECK(r.modified_measure <= r.modified_bound + 1e-12);
  }
}
