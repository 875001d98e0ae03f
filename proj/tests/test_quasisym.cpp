#include <doctest.h>

#include <cmath>

#include "dyana/quasisym.hpp"
#include "dyana/rng.hpp"

using namespace dyana;

TEST_CASE("cantor levels") {
  const auto thirds = cantor_level(1.0 / 3.0, 1);
  REQUIRE(thirds.size() == 2);
  CHECK(thirds[0].a == 0.0);
  CHECK(thirds[0].b == doctest::Approx(1.0 / 3.0));
  CHECK(thirds[1].a == doctest::Approx(2.0 / 3.0));
  CHECK(thirds[1].b == 1.0);

  const auto half = cantor_level(0.5, 1);
  CHECK(half[0].b == doctest::Approx(0.25));
  CHECK(half[1].a == doctest::Approx(0.75));

  const auto root = cantor_level(0.3, 0);
  REQUIRE(root.size() == 1);
  CHECK(root[0].a == 0.0);
  CHECK(root[0].b == 1.0);

  const auto deep = cantor_level(1.0 / 3.0, 5);
  CHECK(deep.size() == 32);
  for (const auto& I : deep) CHECK(I.length() == doctest::Approx(std::pow(3.0, -5.0)));

  CHECK_THROWS_AS(cantor_level(0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(cantor_level(1.0, 2), std::invalid_argument);
}

TEST_CASE("point addresses") {
  const CantorSystem sys = build_cantor(1.0 / 3.0, 6);
  CHECK(point_of_address(sys, "") == 0.0);
  CHECK(point_of_address(sys, "1") == doctest::Approx(2.0 / 3.0));

  const CantorSystem halfsys = build_cantor(0.5, 6);
  CHECK(point_of_address(halfsys, "01") == doctest::Approx(3.0 / 16.0));

  // addressed endpoints survive to the deepest level (they lie in K(r))
  for (const std::string addr : {"0", "10", "011"}) {
    const RealInterval I = addressed_interval(sys, addr);
    bool left_found = false, right_found = false;
    for (const RealInterval& J : sys.levels.back()) {
      if (J.a == I.a) left_found = true;
      if (J.b == I.b) right_found = true;
    }
    CHECK(left_found);
    CHECK(right_found);
  }
  CHECK_THROWS_AS(point_of_address(sys, "0000000"), std::invalid_argument);
  CHECK_THROWS_AS(point_of_address(sys, "02"), std::invalid_argument);
}

TEST_CASE("h_map correspondences") {
  // first-interval right endpoints: 1/3 -> 1/4
  const auto first = h_map(1.0 / 3.0, 0.5, "0", IntervalEnd::Right);
  CHECK(first.first == doctest::Approx(1.0 / 3.0));
  CHECK(first.second == doctest::Approx(0.25));

  // second-interval left endpoints: 2/3 -> 3/4
  const auto second = h_map(1.0 / 3.0, 0.5, "1", IntervalEnd::Left);
  CHECK(second.first == doctest::Approx(2.0 / 3.0));
  CHECK(second.second == doctest::Approx(0.75));

  // endpoints of the unit interval are fixed
  CHECK(h_map(1.0 / 3.0, 0.5, "", IntervalEnd::Left) == std::pair{0.0, 0.0});
  CHECK(h_map(1.0 / 3.0, 0.5, "", IntervalEnd::Right) == std::pair{1.0, 1.0});

  // identity when both ratios agree
  const auto same = h_map(0.4, 0.4, "0101", IntervalEnd::Left);
  CHECK(same.first == same.second);

  // deeper addresses refine consistently: the image of an address is inside
  // the image of each prefix
  const CantorSystem dst = build_cantor(0.5, 8);
  const RealInterval outer = addressed_interval(dst, "01");
  const RealInterval inner = addressed_interval(dst, "0110");
  CHECK(outer.contains(inner));
}

TEST_CASE("two-fifths construction") {
  const auto tf1 = two_fifths_map(1);
  REQUIRE(tf1.source_intervals.size() == 3);
  CHECK(tf1.source_intervals[0].b == doctest::Approx(1.0 / 3.0));
  CHECK(tf1.source_intervals[1].a == doctest::Approx(2.0 / 3.0));
  CHECK(tf1.source_intervals[1].b == doctest::Approx(7.0 / 9.0));
  CHECK(tf1.source_intervals[2].a == doctest::Approx(8.0 / 9.0));
  CHECK(tf1.target_intervals[0].b == doctest::Approx(0.2));
  CHECK(tf1.target_intervals[1].a == doctest::Approx(0.4));
  CHECK(tf1.target_intervals[1].b == doctest::Approx(0.6));
  CHECK(tf1.target_intervals[2].a == doctest::Approx(0.8));

  const auto tf0 = two_fifths_map(0);
  REQUIRE(tf0.source_intervals.size() == 1);
  CHECK(tf0.source_intervals[0].a == 0.0);
  CHECK(tf0.source_intervals[0].b == 1.0);

  // sandwich E_{2l} within E_hat_l within E_l at l = 3
  const int l = 3;
  const auto tf = two_fifths_map(l);
  const auto el = cantor_level(1.0 / 3.0, l);
  const auto e2l = cantor_level(1.0 / 3.0, 2 * l);
  for (const auto& I : e2l) {
    bool inside = false;
    for (const auto& J : tf.source_intervals)
      if (J.a <= I.a + 1e-12 && I.b <= J.b + 1e-12) inside = true;
    CHECK(inside);
  }
  for (const auto& J : tf.source_intervals) {
    bool inside = false;
    for (const auto& K : el)
      if (K.a <= J.a + 1e-12 && J.b <= K.b + 1e-12) inside = true;
    CHECK(inside);
  }
  for (const auto& I : tf.target_intervals)
    CHECK(I.length() == doctest::Approx(std::pow(0.2, l)));

  // the endpoint map is order preserving
  for (std::size_t i = 1; i < tf.endpoint_map.size(); ++i) {
    CHECK(tf.endpoint_map[i].first >= tf.endpoint_map[i - 1].first);
    CHECK(tf.endpoint_map[i].second >= tf.endpoint_map[i - 1].second);
  }
}

TEST_CASE("empirical modulus tables") {
  Rng rng(3);

  // identity on 50 points: eta_hat tracks t within one bucket width
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd x(1);
    x[0] = rng.uniform();
    pts.push_back(x);
  }
  const auto table = eta_empirical(pts, pts, 500000, rng);
  const double bucket = std::pow(10.0, 0.25);
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    CHECK(table.eta[i] <= table.t[i] * (1.0 + 1e-9));
    CHECK(table.eta[i] >= table.t[i] / (bucket * bucket));
  }
  for (std::size_t i = 1; i < table.eta.size(); ++i)
    CHECK(table.eta[i] >= table.eta[i - 1]);

  // similarity a x + x0 has the same modulus
  std::vector<Eigen::VectorXd> sim;
  for (const auto& x : pts) sim.push_back(Eigen::VectorXd(2.5 * x - Eigen::VectorXd::Ones(1)));
  const auto table2 = eta_empirical(pts, sim, 500000, rng);
  REQUIRE(table2.t.size() == table.t.size());
  for (std::size_t i = 0; i < table.t.size(); ++i)
    CHECK(table2.eta[i] == doctest::Approx(table.eta[i]).epsilon(1e-9));

  // repeated source points are rejected
  auto dup = pts;
  dup.push_back(pts.front());
  CHECK_THROWS_AS(eta_empirical(dup, dup, 1000, rng), std::invalid_argument);

  // a collapsing (non-injective) map is rejected
  std::vector<Eigen::VectorXd> collapsed(pts.size(), pts.front());
  CHECK_THROWS_AS(eta_empirical(pts, collapsed, 100000, rng), std::invalid_argument);
}

TEST_CASE("inverse modulus") {
  // identity table inverts to (about) itself
  ModulusTable id;
  for (int b = -8; b <= 8; ++b) {
    id.t.push_back(std::pow(10.0, 0.25 * b));
    id.eta.push_back(id.t.back());
  }
  const auto inv = eta_inverse(id);
  for (std::size_t i = 0; i < inv.t.size(); ++i)
    CHECK(inv.eta[i] == doctest::Approx(inv.t[i]).epsilon(1e-6));

  // bilipschitz: eta(t) = C^2 t inverts to alpha(t) = C^2 t
  const double c2 = 4.0;
  ModulusTable bil;
  for (int b = -8; b <= 8; ++b) {
    bil.t.push_back(std::pow(10.0, 0.25 * b));
    bil.eta.push_back(c2 * bil.t.back());
  }
  const auto binv = eta_inverse(bil);
  for (std::size_t i = 0; i < binv.t.size(); ++i)
    CHECK(binv.eta[i] == doctest::Approx(c2 * binv.t[i]).epsilon(1e-6));
}

TEST_CASE("power envelopes") {
  const auto linear = power_envelope(0.5, 2.0);
  CHECK(linear.C == doctest::Approx(2.0));
  CHECK(linear.a1 == doctest::Approx(1.0));
  CHECK(linear.a2 == doctest::Approx(1.0));

  const auto quarter = power_envelope(0.25, 3.0);
  CHECK(quarter.C == doctest::Approx(3.0));
  CHECK(quarter.a1 == doctest::Approx(0.5));
  CHECK(quarter.a2 == doctest::Approx(std::log2(3.0)));

  const auto four = power_envelope(0.5, 4.0);
  CHECK(four.C == doctest::Approx(4.0));
  CHECK(four.a1 == doctest::Approx(1.0));
  CHECK(four.a2 == doctest::Approx(2.0));

  // dominates the iterated step bounds
  for (const auto& [t1, L] : std::vector<std::pair<double, double>>{
           {0.5, 2.0}, {0.25, 3.0}, {0.5, 4.0}, {0.2, 1.5}}) {
    const auto env = power_envelope(t1, L);
    for (int k = 1; k <= 10; ++k) {
      CHECK(env.eval(std::pow(t1, k)) >= std::pow(0.5, k) * (1.0 - 1e-12));
      CHECK(env.eval(std::ldexp(1.0, k)) >= std::pow(L, k) * (1.0 - 1e-12));
    }
  }
  CHECK_THROWS_AS(power_envelope(1.5, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(power_envelope(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("radial maps") {
  Eigen::VectorXd x(2);
  x << 3.0, 4.0;
  CHECK(radial_map(1.0, x) == x);
  const Eigen::VectorXd y = radial_map(2.0, x);
  CHECK(y[0] == doctest::Approx(15.0));
  CHECK(y[1] == doctest::Approx(20.0));

  Eigen::VectorXd one(1);
  one << 4.0;
  CHECK(radial_map(0.5, one)[0] == doctest::Approx(2.0));
  CHECK(radial_map(0.5, Eigen::VectorXd::Zero(2)).norm() == 0.0);
  CHECK_THROWS_AS(radial_map(0.0, x), std::invalid_argument);
}

TEST_CASE("h_map endpoints are order preserving with a finite modulus") {
  const CantorSystem src = build_cantor(1.0 / 3.0, 8);
  const CantorSystem dst = build_cantor(0.5, 8);
  const auto se = endpoints_at_depth(src);
  const auto de = endpoints_at_depth(dst);
  REQUIRE(se.size() == de.size());
  for (std::size_t i = 1; i < se.size(); ++i) {
    CHECK(se[i] >= se[i - 1]);
    CHECK(de[i] >= de[i - 1]);
  }

  // dedupe shared endpoints before estimating the modulus
  std::vector<Eigen::VectorXd> spts, dpts;
  for (std::size_t i = 0; i < se.size(); ++i) {
    if (!spts.empty() && se[i] == spts.back()[0]) continue;
    Eigen::VectorXd a(1), b(1);
    a[0] = se[i];
    b[0] = de[i];
    spts.push_back(a);
    dpts.push_back(b);
  }
  Rng rng(7);
  const auto table = eta_empirical(spts, dpts, 300000, rng);
  for (double e : table.eta) CHECK(std::isfinite(e));

  // the inverse modulus stays finite, positive and monotone
  const auto inv = eta_inverse(table);
  REQUIRE(!inv.t.empty());
  for (std::size_t i = 0; i < inv.t.size(); ++i) {
    CHECK(std::isfinite(inv.eta[i]));
    CHECK(inv.eta[i] > 0.0);
    if (i > 0) CHECK(inv.eta[i] >= inv.eta[i - 1]);
  }
}
