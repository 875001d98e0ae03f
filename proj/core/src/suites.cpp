#include "dyana/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dyana/convex.hpp"
#include "dyana/dyadic.hpp"
#include "dyana/hardy.hpp"
#include "dyana/inequalities.hpp"
#include "dyana/interp.hpp"
#include "dyana/io.hpp"
#include "dyana/linops.hpp"
#include "dyana/probab.hpp"
#include "dyana/quasisym.hpp"
#include "dyana/varmin.hpp"

namespace dyana {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Checker {
  SuiteReport* rep;

  // lhs <= rhs + tol
  void le(const std::string& id, double lhs, double rhs, double tol) {
    ++rep->cases;
    if (!(lhs <= rhs + tol)) rep->violations.push_back({id, lhs, rhs, tol});
  }
  // |lhs - rhs| <= tol
  void close(const std::string& id, double lhs, double rhs, double tol) {
    ++rep->cases;
    if (!(std::fabs(lhs - rhs) <= tol)) rep->violations.push_back({id, lhs, rhs, tol});
  }
  void is_true(const std::string& id, bool cond) {
    ++rep->cases;
    if (!cond) rep->violations.push_back({id, 0.0, 1.0, 0.0});
  }
};

DyadicStepFn random_stepfn(Rng& rng, int m, bool complex_values = false, double scale = 1.0) {
  std::vector<cd> vals(std::size_t{1} << m);
  for (auto& v : vals) {
    if (complex_values)
      v = scale * rng.complex_normal();
    else
      v = cd(scale * rng.normal(), 0.0);
  }
  return DyadicStepFn(m, std::move(vals));
}

DyadicStepFn random_nonneg_stepfn(Rng& rng, int m, double scale = 1.0) {
  std::vector<cd> vals(std::size_t{1} << m);
  for (auto& v : vals) v = cd(scale * rng.uniform(), 0.0);
  return DyadicStepFn(m, std::move(vals));
}

Matrix random_matrix(Rng& rng, int rows, int cols, bool complex_entries = true) {
  Matrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a(r, c) = complex_entries ? rng.complex_normal() : cd(rng.normal(), 0.0);
  return a;
}

// ---------------------------------------------------------------- dyadic --

void suite_dyadic(Checker& ck, Rng& rng, SuiteSize size) {
  // nesting trichotomy, exhaustive up to generation 10
  {
    std::vector<DyadicInterval> all;
    for (int k = 0; k <= 10; ++k)
      for (const auto& I : dyadic_partition(k)) all.push_back(I);
    bool ok = true;
    for (const auto& A : all) {
      for (const auto& B : all) {
        const auto rel = compare(A, B);
        const bool overlap = A.left() < B.right() && B.left() < A.right();
        if (rel == IntervalRelation::Disjoint && overlap) ok = false;
        if (rel != IntervalRelation::Disjoint && !overlap) ok = false;
      }
    }
    ck.is_true("dyadic.trichotomy", ok);
  }

  const int reps = size == SuiteSize::Small ? 10 : 40;
  for (int t = 0; t < reps; ++t) {
    const int m = 4 + static_cast<int>(rng.below(4));
    const DyadicStepFn f = random_stepfn(rng, m, t % 2 == 1);

    // E_j E_k = E_min(j,k)
    const int j = static_cast<int>(rng.below(9));
    const int k = static_cast<int>(rng.below(9));
    const DyadicStepFn lhs = expectation(expectation(f, k), j);
    const DyadicStepFn rhs = expectation(f, std::min(j, k));
    ck.le("dyadic.tower", lp_norm(lhs - rhs, kInf), 0.0, 1e-12);

    // Parseval and reconstruction
    const HaarExpansion e = haar_analyze(f);
    double sumsq = std::norm(e.c0);
    for (const auto& [I, c] : e.coeffs) sumsq += std::norm(c);
    ck.close("dyadic.parseval", sumsq, std::pow(lp_norm(f, 2.0), 2.0), 1e-12);
    ck.le("dyadic.reconstruct", lp_norm(haar_synthesize(e, m) - f, kInf), 0.0, 1e-12);
    ck.is_true("dyadic.coeff_count", e.coeffs.size() + 1 == (std::size_t{1} << m));

    // truncating the expansion at generation k gives E_k(f)
    HaarExpansion trunc = e;
    for (auto it = trunc.coeffs.begin(); it != trunc.coeffs.end();) {
      if (it->first.k >= std::min(k, m)) it = trunc.coeffs.erase(it);
      else ++it;
    }
    ck.le("dyadic.truncation",
          lp_norm(haar_synthesize(trunc, m) - expectation(f, std::min(k, m)), kInf), 0.0,
          1e-12);
  }

  // Haar orthonormality for |I| >= 2^-6
  {
    std::vector<DyadicStepFn> hs{haar_unit(7)};
    for (int k = 0; k <= 6; ++k)
      for (const auto& I : dyadic_partition(k)) hs.push_back(haar(I, 7));
    bool ok = true;
    for (std::size_t i = 0; i < hs.size() && ok; ++i)
      for (std::size_t j2 = i; j2 < hs.size(); ++j2) {
        const double ip = (hs[i] * hs[j2]).integral().real();
        const double want = i == j2 ? 1.0 : 0.0;
        if (std::fabs(ip - want) > 1e-12) {
          ok = false;
          break;
        }
      }
    ck.is_true("dyadic.haar_orthonormal", ok);
  }

  // Hoelder, Minkowski, p < 1
  for (int t = 0; t < reps; ++t) {
    const int m = 4 + static_cast<int>(rng.below(3));
    const DyadicStepFn f = random_nonneg_stepfn(rng, m);
    const DyadicStepFn g = random_nonneg_stepfn(rng, m);
    const double p = 1.0 + 3.0 * rng.uniform();
    const double q = p / (p - 1.0);
    ck.le("dyadic.hoelder", (f * g).integral().real(), lp_norm(f, p) * lp_norm(g, q), 1e-10);
    ck.le("dyadic.minkowski", lp_norm(f + g, p), lp_norm(f, p) + lp_norm(g, p), 1e-10);
    const double ps = 0.2 + 0.7 * rng.uniform();  // p < 1
    ck.le("dyadic.subadditive_small_p", std::pow(lp_norm(f + g, ps), ps),
          std::pow(lp_norm(f, ps), ps) + std::pow(lp_norm(g, ps), ps), 1e-10);
    // p-norm monotone in p on the probability space
    ck.le("dyadic.norm_monotone", lp_norm(f, 1.0), lp_norm(f, 2.0), 1e-12);
  }
}

// ---------------------------------------------------------- inequalities --

SampledFunction random_convex_samples(Rng& rng, int npts) {
  std::vector<double> xs, ys;
  double x = -2.0, slope = -3.0 * rng.uniform() - 0.2, y = rng.normal();
  for (int i = 0; i < npts; ++i) {
    xs.push_back(x);
    ys.push_back(y);
    const double dx = 0.1 + rng.uniform();
    x += dx;
    y += slope * dx;
    slope += rng.uniform();  // quotients increase
  }
  return SampledFunction(xs, ys);
}

void suite_inequalities(Checker& ck, Rng& rng, SuiteSize size) {
  const int reps = size == SuiteSize::Small ? 250 : 1000;
  for (int t = 0; t < reps; ++t) {
    const SampledFunction phi = random_convex_samples(rng, 5 + static_cast<int>(rng.below(6)));
    ck.is_true("ineq.random_convex_certified", convexity_certificate(phi).convex);

    // jensen gap nonnegative for f ranging inside the sampled domain
    const double lo = phi.points.front(), hi = phi.points.back();
    const int m = 3 + static_cast<int>(rng.below(3));
    std::vector<cd> vals(std::size_t{1} << m);
    for (auto& v : vals) v = cd(lo + (hi - lo) * rng.uniform(), 0.0);
    const DyadicStepFn f(m, vals);
    ck.le("ineq.jensen_nonneg", 0.0, jensen_gap(phi, f), 1e-12);

    // support line minorizes with equality at t
    const std::size_t idx = rng.below(phi.points.size());
    const double a = support_line(phi, phi.points[idx]);
    bool minor = true;
    for (std::size_t i = 0; i < phi.points.size(); ++i) {
      const double A = phi.values[idx] + a * (phi.points[i] - phi.points[idx]);
      if (A > phi.values[i] + 1e-9) minor = false;
    }
    ck.is_true("ineq.support_minorizes", minor);
  }

  for (int t = 0; t < reps / 5; ++t) {
    const int n = 2 + static_cast<int>(rng.below(4));
    std::vector<cd> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (auto& v : x) v = rng.complex_normal();
    for (auto& v : y) v = rng.complex_normal();
    const auto par = clarkson_check(x, y, 2.0);
    ck.close("ineq.clarkson_parallelogram", par.lhs, par.rhs, 1e-12);
    for (double p : {1.3, 1.7, 2.5, 4.0}) {
      const auto sides = clarkson_check(x, y, p);
      ck.le("ineq.clarkson", sides.lhs, sides.rhs, 1e-12);
    }
  }
}

// ----------------------------------------------------------------- hardy --

void suite_hardy(Checker& ck, Rng& rng, SuiteSize size) {
  const int reps = size == SuiteSize::Small ? 150 : 500;

  const double c34 = std::pow(20.0 * std::pow(2.0, 4.0 / 3.0), 3.0);  // chained q=4 constant
  for (int t = 0; t < reps; ++t) {
    const int m = 3 + static_cast<int>(rng.below(4));
    const DyadicStepFn f = random_stepfn(rng, m, t % 3 == 1);

    for (double p : {1.0, 1.5}) {
      const double sp = std::pow(lp_norm(square(f), p), p);
      const double mp = std::pow(lp_norm(maximal(f), p), p);
      ck.le("hardy.s_by_m", sp, (2.0 + 2.0 / (2.0 - p)) * mp, 1e-10);
      ck.le("hardy.m_by_s", mp, (2.0 + 16.0 / (2.0 - p)) * sp, 1e-10);
    }
    ck.le("hardy.f4_by_s4", std::pow(lp_norm(f, 4.0), 4.0),
          c34 * std::pow(lp_norm(square(f), 4.0), 4.0), 1e-9);

    // stabilization
    ck.le("hardy.m_stabilizes", lp_norm(maximal(f, m + 3) - maximal(f), kInf), 0.0, 0.0);
    ck.le("hardy.s_stabilizes", lp_norm(square(f, m + 3) - square(f), kInf), 0.0, 0.0);

    // M_l(f) = M(E_l f), S_l(f) = S(E_l f)
    const int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 1));
    ck.le("hardy.m_truncation", lp_norm(maximal(f, l) - maximal(expectation(f, l)), kInf),
          0.0, 1e-12);
    ck.le("hardy.s_truncation", lp_norm(square(f, l) - square(expectation(f, l)), kInf),
          0.0, 1e-12);

    // weak type for M (constant 1, and the refined version), S (constant 3)
    const double lam = 0.05 + rng.uniform();
    const auto ls = maximal_level_set(f, lam);
    ck.le("hardy.weak_m_refined", ls.measure, ls.refined_bound, 1e-12);
    ck.le("hardy.weak_m", ls.measure, ls.bound, 1e-12);
    const auto ws = weak_type_s_report(f, lam);
    ck.le("hardy.weak_s", ws.level_measure, ws.bound, 1e-12);
    ck.le("hardy.weak_m_modified", ws.modified_measure, ws.modified_bound, 1e-12);

    // level set of M is exactly the union of the maximal family
    {
      const DyadicStepFn mf = maximal(f);
      double meas = 0.0;
      const double w = std::ldexp(1.0, -mf.resolution());
      for (const cd& v : mf.values())
        if (v.real() > lam) meas += w;
      ck.close("hardy.level_set_exact", ls.measure, meas, 1e-12);
    }

    // L^p maximal inequality
    for (double p : {1.5, 2.0, 3.0}) {
      const auto [lhs, rhs] = lp_maximal_report(f, p);
      ck.le("hardy.lp_maximal", lhs, rhs, 1e-10);
    }

    // S flattening postconditions
    const auto gs = cz_flatten_s(f, lam);
    if (!gs.empty_family && !gs.degenerate_root) {
      const DyadicStepFn sg = square(gs.flattened);
      const DyadicStepFn sf = square(f);
      double worst = 0.0;
      for (std::size_t i = 0; i < sg.cells(); ++i)
        worst = std::max(worst,
                         sg[i].real() - std::min(lam, sf.refined(sg.resolution())[i].real()));
      ck.le("hardy.s_flatten_dominated", worst, 0.0, 1e-10);
      double family_measure = 0.0;
      for (const auto& L : gs.intervals) family_measure += L.length();
      ck.le("hardy.s_flatten_measure", family_measure, 2.0 * ws.level_measure, 1e-12);
    }

    // M flattening postconditions
    const auto fsr = cz_flatten_m(f, lam);
    if (!fsr.empty_family && !fsr.degenerate_root) {
      const DyadicStepFn mf = maximal(f).refined(m);
      const DyadicStepFn fl = fsr.flattened;
      double worst = 0.0;
      for (std::size_t i = 0; i < fl.cells(); ++i)
        worst = std::max(worst, std::abs(fl[i]) - std::min(lam, mf[i].real()));
      ck.le("hardy.m_flatten_dominated", worst, 0.0, 1e-10);
      // S(f) = S(f_lambda) off the union of the parent family
      const DyadicStepFn sf = square(f);
      const DyadicStepFn sfl = square(fl);
      bool equal_off = true;
      for (std::size_t i = 0; i < sf.cells(); ++i) {
        const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(sf.cells());
        bool covered = false;
        for (const auto& L : fsr.intervals) covered = covered || L.contains(x);
        if (!covered && std::fabs(sf[i].real() - sfl[i].real()) > 1e-10) equal_off = false;
      }
      ck.is_true("hardy.s_preserved_off_family", equal_off);
      ck.le("hardy.flatten_l1", fl.abs().integral().real(), f.abs().integral().real(),
            1e-12);
    }

    // distribution-function integration
    const DyadicStepFn g = random_nonneg_stepfn(rng, m);
    for (double p : {1.0, 1.5, 2.0}) {
      const double layer = distribution_integral(g, p);
      ck.close("hardy.layer_cake", layer, std::pow(lp_norm(g, p), p), 1e-11);
    }

    // p = 4 decomposition and duality pairing
    const auto dec = p4_decomposition(f);
    ck.close("hardy.p4_identity", dec.s4, dec.a + 2.0 * dec.b,
             1e-9 * std::max(1.0, dec.s4));
    // A <= 4 int S^2 M(|f|^2) via |Delta_j| <= 2 M(f), B <= int S^2 M(|f|^2)
    const DyadicStepFn m2 = maximal(f.pow_abs(2.0));
    const double rhs4 = 6.0 * ((square(f).pow_abs(2.0) * m2).integral().real());
    ck.le("hardy.p4_bound", dec.s4, rhs4, 1e-9);

    const DyadicStepFn f2 = random_stepfn(rng, m, t % 3 == 2);
    const auto pairing = duality_pairing(f, f2);
    ck.close("hardy.duality_identity", std::abs(pairing.product_integral - pairing.martingale_sum),
             0.0, 1e-10);
    ck.le("hardy.duality_bound", std::abs(pairing.product_integral), pairing.s_pairing, 1e-10);
  }

  // vector-valued bound, r = 2, p = 1.5, chained constant 12^{1/6}
  {
    const double C = std::pow(12.0, 1.0 / 6.0);
    const int cases = size == SuiteSize::Small ? 40 : 150;
    for (int t = 0; t < cases; ++t) {
      const int m = 4;
      const int l = 1 + static_cast<int>(rng.below(4));
      std::vector<DyadicStepFn> beta;
      for (int i = 0; i <= l; ++i) beta.push_back(random_stepfn(rng, m));
      DyadicStepFn lhs_sq = DyadicStepFn(m, std::vector<cd>(std::size_t{1} << m, cd(0.0)));
      DyadicStepFn rhs_sq = lhs_sq;
      for (int i = 0; i <= l; ++i) {
        lhs_sq += expectation(beta[static_cast<std::size_t>(i)], i).refined(m).pow_abs(2.0);
        rhs_sq += beta[static_cast<std::size_t>(i)].pow_abs(2.0);
      }
      const double p = 1.5;
      const double lhs = lp_norm(lhs_sq.pow_abs(0.5), p);
      const double rhs = lp_norm(rhs_sq.pow_abs(0.5), p);
      ck.le("hardy.vector_valued", lhs, C * rhs, 1e-10);
    }
  }

  // interval pruning
  const int prunes = size == SuiteSize::Small ? 50 : 200;
  for (int t = 0; t < prunes; ++t) {
    std::vector<RealInterval> family;
    const int count = 3 + static_cast<int>(rng.below(10));
    for (int i = 0; i < count; ++i) {
      const double a = 4.0 * rng.uniform();
      family.push_back({a, a + 2.0 * rng.uniform()});
    }
    const auto pruned = interval_prune(family);
    bool cover_ok = true, union_ok = true;
    std::vector<double> probes;
    for (const auto& I : family) {
      probes.push_back(I.a - 1e-9);
      probes.push_back(I.a + 1e-9);
      probes.push_back(I.b - 1e-9);
      probes.push_back(I.b + 1e-9);
      probes.push_back(0.5 * (I.a + I.b));
    }
    for (double x : probes) {
      int before = 0, after = 0;
      for (const auto& I : family)
        if (I.contains(x)) ++before;
      for (const auto& I : pruned)
        if (I.contains(x)) ++after;
      if (after > 2) cover_ok = false;
      if ((before > 0) != (after > 0)) union_ok = false;
    }
    ck.is_true("hardy.prune_cover", cover_ok);
    ck.is_true("hardy.prune_union", union_ok);
  }
}

// ---------------------------------------------------------------- probab --

void suite_probab(Checker& ck, Rng& rng, SuiteSize size) {
  // group axioms, exhaustive for small orders
  {
    std::vector<FiniteAbelianGroup> groups;
    for (int n : {1, 2, 3, 5, 8, 12, 64}) groups.push_back(FiniteAbelianGroup::cyclic(n));
    for (int l : {0, 1, 2, 4, 6}) groups.push_back(FiniteAbelianGroup::signs(l));
    for (const auto& G : groups) {
      bool ok = true;
      const std::size_t N = G.order();
      for (std::size_t a = 0; a < N && ok; ++a) {
        if (G.op(a, G.identity()) != a || G.op(G.identity(), a) != a) ok = false;
        if (G.op(a, G.inverse(a)) != G.identity()) ok = false;
        for (std::size_t b = 0; b < N && ok; ++b) {
          if (G.op(a, b) != G.op(b, a)) ok = false;
          for (std::size_t c = 0; c < N; ++c)
            if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c))) {
              ok = false;
              break;
            }
        }
      }
      ck.is_true("probab.group_axioms", ok);
    }
  }

  // rademacher basics
  for (int j = 1; j <= 5; ++j) {
    const DyadicStepFn r = rademacher(j, 6);
    ck.close("probab.rademacher_unimodular", lp_norm(r.abs() - haar_unit(6), kInf), 0.0, 0.0);
    bool zero_means = true;
    for (int k = 0; k < j; ++k)
      for (const auto& L : dyadic_partition(k))
        if (std::abs(r.average_on(L)) > 1e-15) zero_means = false;
    ck.is_true("probab.rademacher_zero_mean", zero_means);
  }

  // product integrals: parity rule vs quadrature
  const int prodreps = size == SuiteSize::Small ? 60 : 200;
  for (int t = 0; t < prodreps; ++t) {
    std::vector<int> idx;
    const int len = 1 + static_cast<int>(rng.below(5));
    for (int i = 0; i < len; ++i) idx.push_back(1 + static_cast<int>(rng.below(5)));
    DyadicStepFn prod = haar_unit(6);
    for (int i : idx) prod *= rademacher(i, 6);
    ck.close("probab.product_integral", prod.integral().real(),
             rademacher_product_integral(idx), 1e-12);
  }

  // Khintchine: exact p=2, pairing formula at p=4, sandwich at p in {1,4}
  const int kreps = size == SuiteSize::Small ? 80 : 200;
  const double c4 = std::pow(3.0, 0.25), c1 = std::sqrt(3.0);
  for (int t = 0; t < kreps; ++t) {
    const int m = 2 + static_cast<int>(rng.below(7));
    std::vector<double> alpha(static_cast<std::size_t>(m));
    for (auto& a : alpha) a = rng.normal();
    const auto r2 = khintchine_report(alpha, 2.0);
    ck.close("probab.khintchine_p2", r2.ratio, 1.0, 1e-12);
    const auto r4 = khintchine_report(alpha, 4.0);
    double s2 = 0.0, s4 = 0.0;
    for (double a : alpha) {
      s2 += a * a;
      s4 += a * a * a * a;
    }
    ck.close("probab.khintchine_pairing", std::pow(r4.p_norm, 4.0), 3.0 * s2 * s2 - 2.0 * s4,
             1e-10 * std::max(1.0, s2 * s2));
    ck.le("probab.khintchine_upper4", r4.ratio, c4, 1e-12);
    ck.le("probab.khintchine_lower4", 1.0 / c4, r4.ratio, 1e-12);
    const auto r1 = khintchine_report(alpha, 1.0);
    ck.le("probab.khintchine_upper1", r1.ratio, c1, 1e-12);
    ck.le("probab.khintchine_lower1", 1.0 / c1, r1.ratio, 1e-12);
  }

  // lacunary fourth moments: combinatorial value vs quadrature, and bound
  const int lreps = size == SuiteSize::Small ? 20 : 60;
  for (int t = 0; t < lreps; ++t) {
    const int terms = 1 + static_cast<int>(rng.below(5));
    std::vector<cd> c(static_cast<std::size_t>(terms));
    for (auto& z : c) z = rng.complex_normal();
    const auto rep = lacunary_fourth(c);
    ck.le("probab.lacunary_bound", rep.fourth_moment, rep.bound, 1e-9);
    // uniform rule with N > top frequency integrates the trig polynomial exactly
    const int N = 1 << (terms + 2);
    double quad = 0.0;
    for (int i = 0; i < N; ++i) {
      const double x = (i + 0.5) / N;
      cd phi = 0.0;
      for (int j2 = 0; j2 < terms; ++j2) {
        const double ang = 2.0 * std::numbers::pi * std::ldexp(1.0, j2) * x;
        phi += c[static_cast<std::size_t>(j2)] * cd(std::cos(ang), std::sin(ang));
      }
      quad += std::pow(std::abs(phi), 4.0);
    }
    quad /= N;
    ck.close("probab.lacunary_quadrature", rep.fourth_moment, quad,
             1e-6 * std::max(1.0, quad));
  }

  // characters and convolution operators
  {
    std::vector<FiniteAbelianGroup> groups{FiniteAbelianGroup::cyclic(2),
                                           FiniteAbelianGroup::cyclic(3),
                                           FiniteAbelianGroup::cyclic(6),
                                           FiniteAbelianGroup::signs(2),
                                           FiniteAbelianGroup::signs(3)};
    for (const auto& G : groups) {
      const auto chars = characters(G);
      ck.is_true("probab.character_count", chars.size() == G.order());
      bool ortho = true, unimodular = true, multiplicative = true;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j2 = 0; j2 < chars.size(); ++j2) {
          cd ip = 0.0;
          for (std::size_t g = 0; g < G.order(); ++g)
            ip += chars[i][g] * std::conj(chars[j2][g]);
          const double want = i == j2 ? static_cast<double>(G.order()) : 0.0;
          if (std::abs(ip - want) > 1e-10) ortho = false;
        }
        for (std::size_t g = 0; g < G.order(); ++g) {
          if (std::fabs(std::abs(chars[i][g]) - 1.0) > 1e-12) unimodular = false;
          for (std::size_t h = 0; h < G.order(); ++h)
            if (std::abs(chars[i][G.op(g, h)] - chars[i][g] * chars[i][h]) > 1e-10)
              multiplicative = false;
        }
      }
      ck.is_true("probab.character_orthogonality", ortho);
      ck.is_true("probab.character_unimodular", unimodular);
      ck.is_true("probab.character_multiplicative", multiplicative);

      GroupFunction a(G.order());
      for (auto& v : a) v = rng.complex_normal();
      double a1 = 0.0, a2 = 0.0;
      for (const cd& v : a) {
        a1 += std::abs(v);
        a2 += std::norm(v);
      }
      const Matrix S = group_convolution(G, a, ConvolutionSide::Left);
      ck.close("probab.conv_l1_norm", operator_norm(S, 1.0, 1.0).value, a1, 1e-10);
      ck.le("probab.conv_l2_le_l1", operator_norm(S, 2.0, 2.0).value, a1, 1e-10);
      ck.le("probab.conv_linf_le_l1", operator_norm(S, kInf, kInf).value, a1, 1e-10);
      ck.close("probab.conv_hs", hilbert_schmidt_norm(S),
               std::sqrt(static_cast<double>(G.order())) * std::sqrt(a2), 1e-10);
      ck.close("probab.conv_norm2_characters", convolution_norm2(G, a),
               operator_norm(S, 2.0, 2.0).value, 1e-9);
    }
  }

  // Walsh functions pulled back through binary digits are Rademacher products
  {
    const int l = 4;
    const FiniteAbelianGroup G = FiniteAbelianGroup::signs(l);
    const auto chars = characters(G);
    bool match = true;
    for (std::size_t mask = 0; mask < G.order(); ++mask) {
      DyadicStepFn prod = haar_unit(l);
      for (int i = 1; i <= l; ++i)
        if (mask & (std::size_t{1} << (i - 1))) prod *= rademacher(i, l);
      for (std::size_t ccell = 0; ccell < prod.cells(); ++ccell) {
        std::size_t e = 0;
        for (int i = 1; i <= l; ++i)
          if ((ccell >> (l - i)) & 1) e |= std::size_t{1} << (i - 1);
        if (std::abs(prod[ccell] - chars[mask][e]) > 1e-12) match = false;
      }
    }
    ck.is_true("probab.walsh_rademacher", match);
  }

  // moment constants
  {
    const std::size_t samples = size == SuiteSize::Small ? 200000 : 1000000;
    const auto rep2 = linear_moment_constants(3, 2.0, samples, rng);
    ck.close("probab.gaussian_p2", rep2.gaussian, 0.5, 1e-12);
    const auto rep0 = linear_moment_constants(2, 0.0, 100, rng);
    ck.close("probab.gaussian_p0", rep0.gaussian, 1.0, 1e-12);
    const auto rep1d = linear_moment_constants(1, 3.7, 100, rng);
    ck.close("probab.sphere_n1", rep1d.sphere, 1.0, 1e-12);
    for (double p : {1.0, 2.0}) {
      const auto rep = linear_moment_constants(4, p, samples, rng);
      ck.le("probab.sphere_rotation_invariance", std::fabs(rep.sphere - rep.rotated),
            3.0 * (rep.sphere_stderr + rep.rotated_stderr), 1e-12);
      // closed-form sphere moment as an oracle (Gamma ratios)
      const double n = 4.0;
      const double exact = std::exp(std::lgamma(0.5 * (p + 1.0)) + std::lgamma(0.5 * n) -
                                    std::lgamma(0.5) - std::lgamma(0.5 * (n + p)));
      ck.le("probab.sphere_matches_closed_form", std::fabs(rep.sphere - exact),
            5.0 * rep.sphere_stderr + 1e-6, 1e-12);
    }
  }
}

// ---------------------------------------------------------------- linops --

void suite_linops(Checker& ck, Rng& rng, SuiteSize size) {
  const int reps = size == SuiteSize::Small ? 40 : 150;
  for (int t = 0; t < reps; ++t) {
    const int n = 2 + static_cast<int>(rng.below(5));

    // dual-norm duality and the extremal vector
    {
      const double ps[] = {1.0, 1.5, 2.0, 3.0, kInf};
      const double p = ps[rng.below(5)];
      const double q = conjugate_exponent(p);
      Vector w(n);
      for (int i = 0; i < n; ++i) w[i] = rng.complex_normal();
      const Vector v = dual_extremal(w, p);
      const double pairing = std::abs((w.transpose() * v)(0));
      ck.close("linops.dual_attained", pairing, vector_pnorm(w, q) * vector_pnorm(v, p),
               1e-10);
      // sampled sup over the unit p-ball: random directions plus small
      // perturbations of the extremal direction, all renormalized
      const Vector vstar = v / std::max(1e-300, vector_pnorm(v, p));
      const double scales[] = {0.2, 0.05, 0.01, 0.002};
      double sampled = 0.0;
      for (int s = 0; s < 2000; ++s) {
        Vector u(n);
        for (int i = 0; i < n; ++i) u[i] = rng.complex_normal();
        if (s % 5 != 0) u = vstar + scales[s % 4] * u / u.norm();
        u /= vector_pnorm(u, p);
        sampled = std::max(sampled, std::abs((w.transpose() * u)(0)));
      }
      ck.le("linops.dual_sampled_le", sampled, vector_pnorm(w, q), 1e-9);
      ck.le("linops.dual_sampled_ge", 0.98 * vector_pnorm(w, q), sampled, 1e-9);
    }

    const Matrix A = random_matrix(rng, n, n);
    const Matrix B = random_matrix(rng, n, n);

    // transpose norm identity and submultiplicativity at exact exponents
    for (double p : {1.0, 2.0, kInf}) {
      const double na = operator_norm(A, p, p).value;
      const double nat = operator_norm(Matrix(A.transpose()), conjugate_exponent(p),
                                       conjugate_exponent(p))
                             .value;
      ck.close("linops.transpose_norm", na, nat, 1e-10 * std::max(1.0, na));
      const double nb = operator_norm(B, p, p).value;
      const double nab = operator_norm(Matrix(A * B), p, p).value;
      ck.le("linops.submultiplicative", nab, na * nb, 1e-9);
    }

    // C*-identity and adjoint involution
    {
      const auto rep = c_star_report(A);
      ck.le("linops.cstar", std::fabs(rep.norm_ata - rep.norm_sq),
            1e-9 * std::max(1.0, rep.norm_sq), 0.0);
      ck.le("linops.adjoint_involution", (adjoint(adjoint(A)) - A).norm(), 0.0, 1e-14);
    }

    // spectral radius: Rad <= |T|_op, gelfand >= Rad
    {
      const auto sr = spectral_radius(A, 32);
      ck.le("linops.rad_le_norm", sr.eigen_radius, operator_norm(A, 2.0, 2.0).value, 1e-9);
      ck.le("linops.rad_le_gelfand", sr.eigen_radius, sr.gelfand, 1e-7);
    }

    // normal power identity via a random normal matrix
    {
      Matrix H = random_matrix(rng, n, n);
      H = 0.5 * (H + adjoint(H));
      Eigen::SelfAdjointEigenSolver<Matrix> es(H);
      Matrix D = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) D(i, i) = rng.complex_normal();
      const Matrix N = es.eigenvectors() * D * es.eigenvectors().adjoint();
      const double base = operator_norm(N, 2.0, 2.0).value;
      Matrix P = Matrix::Identity(n, n);
      for (int l = 1; l <= 8; ++l) {
        P = P * N;
        const double lhs = operator_norm(P, 2.0, 2.0).value;
        const double rhs = std::pow(base, l);
        ck.le("linops.normal_powers", std::fabs(lhs - rhs), 1e-8 * std::max(1.0, rhs), 0.0);
      }
    }

    // Neumann series
    {
      Matrix C = random_matrix(rng, n, n);
      C *= cd(0.6 / std::max(1e-9, operator_norm(C, 2.0, 2.0).value), 0.0);
      const double nc = operator_norm(C, 2.0, 2.0).value;
      const Matrix inv = neumann_inverse(C, 1e-12);
      const Matrix I = Matrix::Identity(n, n);
      ck.le("linops.neumann_residual", operator_norm(Matrix((I - C) * inv - I), 2.0, 2.0).value,
            1e-12 / (1.0 - nc), 1e-15);
      ck.le("linops.neumann_norm", operator_norm(inv, 2.0, 2.0).value,
            1.0 / (1.0 - nc) + 1e-9, 1e-12);
    }

    // Schmidt decomposition and Hilbert-Schmidt norm
    {
      const int m2 = 2 + static_cast<int>(rng.below(4));
      const Matrix T = random_matrix(rng, m2, n);
      const auto dec = schmidt_decompose(T);
      Matrix R = Matrix::Zero(m2, n);
      for (std::size_t j2 = 0; j2 < dec.u.size(); ++j2)
        R += dec.w[j2] * dec.u[j2].adjoint();
      ck.le("linops.schmidt_reconstruct", (R - T).norm(), 0.0, 1e-9);
      bool ortho = true;
      for (std::size_t i = 0; i < dec.w.size(); ++i)
        for (std::size_t j2 = i + 1; j2 < dec.w.size(); ++j2)
          if (std::abs(dec.w[i].dot(dec.w[j2])) > 1e-8) ortho = false;
      ck.is_true("linops.schmidt_orthogonal_images", ortho);

      const double hs = hilbert_schmidt_norm(T);
      const double op = operator_norm(T, 2.0, 2.0).value;
      ck.le("linops.hs_lower", op, hs, 1e-10);
      ck.le("linops.hs_upper", hs, std::sqrt(static_cast<double>(std::min(m2, n))) * op, 1e-10);
      // unitary invariance
      Matrix Q = random_matrix(rng, m2, m2);
      const Eigen::HouseholderQR<Matrix> qr(Q);
      const Matrix Uq = qr.householderQ();
      ck.close("linops.hs_unitary_invariant", hilbert_schmidt_norm(Matrix(Uq * T)), hs, 1e-12);
    }

    // projections
    {
      const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      std::vector<Vector> basis;
      for (int i = 0; i < k; ++i) {
        Vector b(n);
        for (int j2 = 0; j2 < n; ++j2) b[j2] = rng.complex_normal();
        basis.push_back(b);
      }
      const Subspace S(n, basis);
      const Matrix P = orthogonal_projection(S);
      ck.le("linops.projection_idempotent", (P * P - P).norm(), 0.0, 1e-10);
      ck.le("linops.projection_selfadjoint", (adjoint(P) - P).norm(), 0.0, 1e-10);
      ck.close("linops.projection_norm_one", operator_norm(P, 2.0, 2.0).value, 1.0, 1e-10);
    }

    // self-adjoint spectra
    {
      Matrix H = random_matrix(rng, n, n);
      H = 0.5 * (H + adjoint(H));
      Eigen::ComplexEigenSolver<Matrix> es(H, true);
      bool real_spec = true;
      for (int i = 0; i < n; ++i)
        if (std::fabs(es.eigenvalues()[i].imag()) > 1e-10) real_spec = false;
      ck.is_true("linops.selfadjoint_real_spectrum", real_spec);
      bool ortho = true;
      for (int i = 0; i < n; ++i)
        for (int j2 = i + 1; j2 < n; ++j2) {
          if (std::abs(es.eigenvalues()[i] - es.eigenvalues()[j2]) > 1e-6 &&
              std::abs(es.eigenvectors().col(i).dot(es.eigenvectors().col(j2))) > 1e-7)
            ortho = false;
        }
      ck.is_true("linops.selfadjoint_orthogonal_eigenvectors", ortho);
    }
  }

  // strict convexity of the unit p-ball: unique maximizer for 1 < p < inf
  const int strict_reps = size == SuiteSize::Small ? 6 : 20;
  for (int t = 0; t < strict_reps; ++t) {
    const int n = 3;
    Vector w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.complex_normal();
    for (double p : {1.5, 3.0}) {
      auto maximize = [&](Rng& r2) {
        auto obj = [&](const optim::RealVec& raw) {
          Vector x(n);
          for (int i = 0; i < n; ++i) x[i] = cd(raw[i], raw[n + i]);
          const double nx = vector_pnorm(x, p);
          if (nx < 1e-9) return 0.0;
          // maximize the real part so the maximizer phase is pinned
          return -((w.transpose() * x)(0).real() / nx);
        };
        optim::RealVec x0(2 * n);
        for (int i = 0; i < 2 * n; ++i) x0[i] = r2.normal();
        const auto res = optim::pattern_search(obj, x0, 0.5, 1e-10);
        Vector x(n);
        for (int i = 0; i < n; ++i) x[i] = cd(res.x[i], res.x[n + i]);
        x /= vector_pnorm(x, p);
        return x;
      };
      Rng ra = rng.fork(1), rb = rng.fork(2);
      const Vector xa = maximize(ra);
      const Vector xb = maximize(rb);
      ck.le("linops.strict_convexity_unique", (xa - xb).norm(), 1e-5, 0.0);
    }
  }
  {
    // p = 1 and p = infinity: distinct maximizers witnessed exactly
    Vector w(2);
    w << cd(1.0, 0.0), cd(1.0, 0.0);
    const Vector e1 = Vector::Unit(2, 0), e2 = Vector::Unit(2, 1);
    const double v1 = std::abs((w.transpose() * e1)(0));
    const double v2 = std::abs((w.transpose() * e2)(0));
    ck.close("linops.p1_nonunique", v1, vector_pnorm(w, kInf), 1e-15);
    ck.close("linops.p1_nonunique_second", v2, vector_pnorm(w, kInf), 1e-15);
    Vector u(2);
    u << cd(1.0, 0.0), cd(0.0, 0.0);
    Vector x1(2), x2(2);
    x1 << cd(1.0, 0.0), cd(1.0, 0.0);
    x2 << cd(1.0, 0.0), cd(-1.0, 0.0);
    ck.close("linops.pinf_nonunique", std::abs((u.transpose() * x1)(0)),
             vector_pnorm(u, 1.0) * vector_pnorm(x1, kInf), 1e-15);
    ck.close("linops.pinf_nonunique_second", std::abs((u.transpose() * x2)(0)),
             vector_pnorm(u, 1.0) * vector_pnorm(x2, kInf), 1e-15);
  }

  // quotient norms, extension, separation, cones
  const int geo_reps = size == SuiteSize::Small ? 10 : 30;
  for (int t = 0; t < geo_reps; ++t) {
    const int n = 3 + static_cast<int>(rng.below(3));
    std::vector<Vector> basis;
    const int k = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < k; ++i) {
      Vector b(n);
      for (int j2 = 0; j2 < n; ++j2) b[j2] = rng.complex_normal();
      basis.push_back(b);
    }
    const Subspace W(n, basis);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.complex_normal();
    for (double p : {1.0, 2.0, 3.0, kInf}) {
      const double qn = quotient_norm(W, v, p, 3, &rng);
      ck.le("linops.quotient_le_norm", qn, vector_pnorm(v, p), 1e-12);
      // must vanish on W
      const double onw = quotient_norm(W, basis[0], p, 3, &rng);
      ck.le("linops.quotient_vanishes_on_w", onw, 0.0, 1e-5);
    }

    // Hahn-Banach extension with mu = a scaled coordinate functional on W
    {
      const double ps[] = {1.0, 1.5, 2.0, kInf};
      const double p = ps[rng.below(4)];
      std::vector<cd> mu(static_cast<std::size_t>(W.dim()));
      // mu(b_i) = <b_i, g> scaled to satisfy |mu| <= |.|_p
      Vector g(n);
      for (int i = 0; i < n; ++i) g[i] = rng.complex_normal();
      for (int i = 0; i < W.dim(); ++i) {
        mu[static_cast<std::size_t>(i)] = (g.transpose() * W.basis[static_cast<std::size_t>(i)])(0);
      }
      // scale so |mu| <= 0.9 |.|_p on all of W, strictly inside the ball
      const double gq = vector_pnorm(g, conjugate_exponent(p));
      for (auto& m2 : mu) m2 *= 0.9 / gq;
      const Vector lambda = hahn_banach_extend(W, mu, p, 2, rng);
      for (int i = 0; i < W.dim(); ++i) {
        const cd got = (lambda.transpose() * W.basis[static_cast<std::size_t>(i)])(0);
        ck.le("linops.hb_restricts", std::abs(got - mu[static_cast<std::size_t>(i)]), 0.0, 1e-6);
      }
      ck.le("linops.hb_norm", vector_pnorm(lambda, conjugate_exponent(p)), 1.0, 1e-4);
    }

    // separation in R^3
    {
      std::vector<Eigen::VectorXd> gens;
      for (int i = 0; i < 6; ++i) {
        Eigen::VectorXd gpt(3);
        for (int d = 0; d < 3; ++d) gpt[d] = rng.normal();
        gens.push_back(gpt);
      }
      const ConvexBody hull(ConvexBody::Mode::Hull, gens);
      Eigen::VectorXd far(3);
      for (int d = 0; d < 3; ++d) far[d] = rng.normal();
      far *= 10.0 / std::max(1e-9, far.norm());
      const auto sep = separate(hull, far);
      bool below = true;
      for (const auto& gpt : gens)
        if (sep.functional.dot(gpt) > sep.threshold + 1e-9) below = false;
      ck.is_true("linops.separation_side", below);
      ck.le("linops.separation_strict", sep.threshold, sep.functional.dot(far), 1e-12);

      // cones: inside iff nonnegative-combination residual vanishes
      const ConvexBody cone(ConvexBody::Mode::Cone, gens);
      Eigen::VectorXd mix = Eigen::VectorXd::Zero(3);
      for (const auto& gpt : gens) mix += rng.uniform() * gpt;
      const auto inside = cone_dual_check(cone, mix);
      ck.is_true("linops.cone_inside", inside.inside);
      const auto zero = cone_dual_check(cone, Eigen::VectorXd::Zero(3));
      ck.is_true("linops.cone_contains_zero", zero.inside);
      const auto outside = cone_dual_check(cone, far);
      if (!outside.inside) {
        double minval = kInf;
        for (const auto& gpt : gens) minval = std::min(minval, outside.functional->dot(gpt));
        ck.le("linops.cone_witness_nonneg", -1e-10, minval, 1e-12);
        ck.le("linops.cone_witness_negative", outside.functional->dot(far), 0.0, 1e-12);
      } else {
        ck.is_true("linops.cone_far_membership", true);
      }
    }
  }

  // commuting normal family and numerical range
  {
    const int n = 4;
    Matrix H = random_matrix(rng, n, n);
    H = 0.5 * (H + adjoint(H));
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    const Matrix V = es.eigenvectors();
    std::vector<Matrix> family;
    for (int i = 0; i < 3; ++i) {
      Matrix D = Matrix::Zero(n, n);
      for (int j2 = 0; j2 < n; ++j2) D(j2, j2) = rng.complex_normal();
      family.push_back(V * D * V.adjoint());
    }
    const Matrix Q = simultaneous_diagonalize(family, rng);
    ck.le("linops.simdiag_orthonormal", (Q.adjoint() * Q - Matrix::Identity(n, n)).norm(),
          0.0, 1e-9);
    double offmax = 0.0;
    for (const Matrix& A : family) {
      const Matrix D = Q.adjoint() * A * Q;
      for (int i = 0; i < n; ++i)
        for (int j2 = 0; j2 < n; ++j2)
          if (i != j2) offmax = std::max(offmax, std::abs(D(i, j2)));
    }
    ck.le("linops.simdiag_diagonalizes", offmax, 0.0, 1e-8);

    // numerical range of a normal matrix lies in the eigenvalue hull
    const Matrix& A = family[0];
    Eigen::ComplexEigenSolver<Matrix> ces(A, false);
    std::vector<Eigen::VectorXd> eigs;
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd e(2);
      e << ces.eigenvalues()[i].real(), ces.eigenvalues()[i].imag();
      eigs.push_back(e);
    }
    const ConvexBody hull(ConvexBody::Mode::Hull, eigs);
    double worst = 0.0;
    for (const cd& pt : numerical_range(A, size == SuiteSize::Small ? 100 : 400, rng)) {
      Eigen::VectorXd x(2);
      x << pt.real(), pt.imag();
      worst = std::max(worst, hull_distance(hull, x).first);
    }
    ck.le("linops.numerical_range_hull", worst, 0.0, 1e-9);
  }
}

// ---------------------------------------------------------------- interp --

void suite_interp(Checker& ck, Rng& rng, SuiteSize size) {
  const int reps = size == SuiteSize::Small ? 30 : 100;
  for (int t = 0; t < reps; ++t) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Matrix a = random_matrix(rng, n, n);

    // Schur formulas against brute force over basis vectors
    {
      double m1 = 0.0;
      for (int k = 0; k < n; ++k) m1 = std::max(m1, vector_pnorm(a.col(k), 1.0));
      double minf = 0.0;
      for (int j2 = 0; j2 < n; ++j2)
        minf = std::max(minf, vector_pnorm(a.row(j2).transpose(), 1.0));
      ck.close("interp.schur_m1", mp_norm(a, 1.0).value, m1, 1e-12);
      ck.close("interp.schur_minf", mp_norm(a, kInf).value, minf, 1e-12);
    }

    // duality M_p(a) = M_{p'}(a^T)
    for (double p : {1.0, 2.0, kInf}) {
      ck.close("interp.mp_duality", mp_norm(a, p).value,
               mp_norm(Matrix(a.transpose()), conjugate_exponent(p)).value, 1e-10);
    }

    // extremal pairs: unit norms, stationarity residuals, value near M_r
    {
      const double rs[] = {1.5, 2.5, 4.0};
      const double r = rs[rng.below(3)];
      Rng ra = rng.fork(31);
      Rng rb = ra;  // identical stream: the pair attains the reported bound
      const auto pair = extremal_pair(a, r, 6, ra);
      ck.close("interp.extremal_x_norm", vector_pnorm(pair.x, r), 1.0, 1e-9);
      ck.close("interp.extremal_y_norm", vector_pnorm(pair.y, conjugate_exponent(r)), 1.0,
               1e-9);
      ck.le("interp.extremal_residual_mu", pair.residual_mu, 0.0, 1e-6);
      ck.le("interp.extremal_residual_nu", pair.residual_nu, 0.0, 1e-6);
      ck.close("interp.extremal_mu_nu", pair.mu, pair.nu, 1e-6 * std::max(1.0, pair.mu));
      const auto mr = mp_norm(a, r, 6, &rb);
      ck.le("interp.extremal_attains", mr.value, pair.value, 1e-9);
    }

    // Riesz convexity with exact endpoints
    {
      const std::pair<double, double> pqs[] = {{1.0, 2.0}, {2.0, kInf}, {1.0, kInf}};
      for (const auto& [p, q] : pqs) {
        for (double tt : {0.25, 0.5, 0.75}) {
          const auto rep = riesz_convexity_report(a, p, q, tt, 4, &rng);
          ck.le("interp.riesz_convexity", rep.m_r_lower,
                rep.endpoint_product * (1.0 + 1e-9), 1e-12);
        }
      }
    }

    // if some M_p is zero the form vanishes
    {
      const Matrix z = Matrix::Zero(n, n);
      ck.close("interp.zero_form", mp_norm(z, 1.5, 2, &rng).value, 0.0, 1e-15);
    }
  }

  // midpoint convexity upgrade
  {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 16; ++i) {
      const double x = -1.0 + 2.0 * i / 16.0;
      xs.push_back(x);
      ys.push_back(x * x);
    }
    const auto rep = midpoint_convexity_upgrade(SampledFunction(xs, ys));
    ck.is_true("interp.midpoint_square", rep.hypothesis_holds && rep.convex && rep.upgraded);

    for (double& y : ys) y = -y;  // concave: hypothesis must fail, reported
    const auto rep2 = midpoint_convexity_upgrade(SampledFunction(xs, ys));
    ck.is_true("interp.midpoint_concave", !rep2.hypothesis_holds && !rep2.convex);

    // log M_{1/s} along s in [0,1] is convex (Riesz) -- sample it
    const Matrix a = random_matrix(rng, 4, 4);
    std::vector<double> ss, ls;
    for (int i = 0; i <= 4; ++i) {
      const double s = i / 4.0;
      const double p = s == 0.0 ? kInf : 1.0 / s;
      double value;
      if (p == 1.0 || p == 2.0 || std::isinf(p))
        value = mp_norm(a, p).value;
      else
        value = mp_norm(a, p, 10, &rng).value;
      ss.push_back(s);
      ls.push_back(std::log(value));
    }
    const auto rep3 = midpoint_convexity_upgrade(SampledFunction(ss, ls));
    ck.is_true("interp.midpoint_log_mp", rep3.upgraded);
  }

  // step-function operator reformulation
  {
    const int m = 3;
    const int n = 1 << m;
    // averaging operator E_1 as a matrix: contraction for every p
    Matrix Ek = Matrix::Zero(n, n);
    const int block = n / 2;
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < block; ++i)
        for (int j2 = 0; j2 < block; ++j2)
          Ek(b * block + i, b * block + j2) = cd(1.0 / block, 0.0);
    for (double p : {1.0, 2.0, kInf}) {
      ck.close("interp.averaging_norm_one", mp_norm(Ek, p).value, 1.0, 1e-10);
    }
    auto repE = stepfn_operator_interp(Ek, 1.0, kInf, 0.5, 40, rng);
    ck.is_true("interp.stepfn_averaging", repE.holds);

    // Haar truncation projector
    Matrix H = Matrix::Zero(n, n);
    {
      // build from analysis/synthesis of basis vectors, dropping fine levels
      for (int j2 = 0; j2 < n; ++j2) {
        std::vector<cd> vals(static_cast<std::size_t>(n), cd(0.0));
        vals[static_cast<std::size_t>(j2)] = 1.0;
        HaarExpansion e = haar_analyze(DyadicStepFn(m, vals));
        for (auto it = e.coeffs.begin(); it != e.coeffs.end();) {
          if (it->first.k >= 2) it = e.coeffs.erase(it);
          else ++it;
        }
        const DyadicStepFn col = haar_synthesize(e, m);
        for (int i = 0; i < n; ++i) H(i, j2) = col[static_cast<std::size_t>(i)];
      }
    }
    auto repH = stepfn_operator_interp(H, 1.0, kInf, 0.3, 40, rng);
    ck.is_true("interp.stepfn_haar_truncation", repH.holds);

    auto repR = stepfn_operator_interp(random_matrix(rng, n, n), 1.0, kInf, 0.6, 40, rng);
    ck.is_true("interp.stepfn_random", repR.holds);
    auto rep2 = stepfn_operator_interp(random_matrix(rng, n, n), 2.0, kInf, 0.5, 40, rng);
    ck.is_true("interp.stepfn_random_2inf", rep2.holds);
  }

  // linearization of maximal and square functions
  const int lreps = size == SuiteSize::Small ? 20 : 80;
  for (int t = 0; t < lreps; ++t) {
    const int m = 3 + static_cast<int>(rng.below(4));
    const DyadicStepFn f = random_stepfn(rng, m, t % 2 == 1);
    const auto lin = linearize_maximal(f);
    ck.le("interp.linearize_maximal", lp_norm(lin.reconstruction - maximal(f), kInf), 0.0,
          1e-12);
    ck.le("interp.linearize_square", lp_norm(linearize_square(f) - square(f), kInf), 0.0,
          1e-10);
  }
}

// ---------------------------------------------------------------- varmin --

GridDomain random_domain(Rng& rng, int max_points) {
  // random connected blob in Z^2 grown from the origin
  std::vector<GridPoint> pts{{0, 0}};
  std::map<GridPoint, bool> seen{{{0, 0}, true}};
  while (static_cast<int>(pts.size()) < max_points) {
    const GridPoint& base = pts[rng.below(pts.size())];
    GridPoint q = base;
    const int d = static_cast<int>(rng.below(2));
    const int s = rng.below(2) ? 1 : -1;
    q[static_cast<std::size_t>(d)] += s;
    if (!seen.count(q)) {
      seen[q] = true;
      pts.push_back(q);
    }
  }
  // thicken so an interior exists: add all neighbors of a random kernel
  std::vector<GridPoint> extra;
  for (const auto& p : pts) {
    for (int d = 0; d < 2; ++d)
      for (int s : {-1, 1}) {
        GridPoint q = p;
        q[static_cast<std::size_t>(d)] += s;
        if (!seen.count(q)) {
          seen[q] = true;
          extra.push_back(q);
        }
      }
  }
  for (auto& q : extra) pts.push_back(std::move(q));
  return GridDomain(2, std::move(pts));
}

void suite_varmin(Checker& ck, Rng& rng, SuiteSize size) {
  const int reps = size == SuiteSize::Small ? 25 : 100;
  for (int t = 0; t < reps; ++t) {
    const GridDomain U = random_domain(rng, 6 + static_cast<int>(rng.below(20)));

    // seminorm axioms
    GridFn f(U.size()), g(U.size());
    for (auto& v : f) v = rng.complex_normal();
    for (auto& v : g) v = rng.complex_normal();
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double vf = vp_seminorm(U, f, p);
      const double vg = vp_seminorm(U, g, p);
      GridFn sum(U.size());
      for (std::size_t i = 0; i < U.size(); ++i) sum[i] = f[i] + g[i];
      ck.le("varmin.triangle", vp_seminorm(U, sum, p), vf + vg, 1e-10);
      GridFn scaled(U.size());
      const cd c = rng.complex_normal();
      for (std::size_t i = 0; i < U.size(); ++i) scaled[i] = c * f[i];
      ck.close("varmin.homogeneous", vp_seminorm(U, scaled, p), std::abs(c) * vf,
               1e-10 * std::max(1.0, vf));
      GridFn diff(U.size());
      for (std::size_t i = 0; i < U.size(); ++i) diff[i] = f[i] - g[i];
      ck.le("varmin.reverse_triangle", std::fabs(vf - vg), vp_seminorm(U, diff, p), 1e-10);
    }
    {
      GridFn constant(U.size(), cd(2.5, -1.0));
      ck.close("varmin.vanishes_on_constants", vp_seminorm(U, constant, 2.0), 0.0, 1e-12);
    }

    // quadratic form by polarization
    {
      const Eigen::MatrixXd A0 = quadratic_form_matrix(U);
      ck.le("varmin.quadratic_symmetric", (A0 - A0.transpose()).norm(), 0.0, 1e-12);
      GridFn h(U.size(), cd(0.0));
      Vector hi(static_cast<Eigen::Index>(U.interior().size()));
      for (std::size_t i = 0; i < U.interior().size(); ++i) {
        h[U.interior()[i]] = rng.complex_normal();
        hi[static_cast<Eigen::Index>(i)] = h[U.interior()[i]];
      }
      const double quad = (hi.adjoint() * (A0 * hi))(0).real();
      const double direct = std::pow(vp_seminorm(U, h, 2.0), 2.0);
      ck.close("varmin.quadratic_matches", quad, direct, 1e-10 * std::max(1.0, direct));
      // positive definite on interior-supported functions: V_p there is a
      // norm, so the compression has no kernel
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A0);
      ck.le("varmin.quadratic_definite", 1e-12, es.eigenvalues().minCoeff(), 0.0);
    }

    // minimization: boundary data, competitors, maximum principle
    std::map<std::size_t, cd> boundary;
    for (std::size_t b : U.boundary()) boundary[b] = cd(2.0 * rng.uniform(), 0.0);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const GridFn star = minimize_vp(U, boundary, p, {1e-11, false, 4000}, &rng);
      bool matches_boundary = true;
      for (std::size_t b : U.boundary())
        if (std::abs(star[b] - boundary[b]) > 0.0) matches_boundary = false;
      ck.is_true("varmin.boundary_respected", matches_boundary);
      const double vstar = vp_seminorm(U, star, p);
      for (int c = 0; c < 20; ++c) {
        GridFn comp = star;
        for (std::size_t i : U.interior()) comp[i] = cd(4.0 * rng.uniform() - 1.0, 0.0);
        ck.le("varmin.minimality", vstar, vp_seminorm(U, comp, p), 2e-5);
      }
      const auto mp = maximum_principle_report(U, boundary, star);
      ck.is_true("varmin.maximum_principle", mp.holds);

      // truncation contraction
      const Truncation tau = Truncation::floor_at(0.5);
      GridFn realf(U.size());
      for (auto& v : realf) v = cd(rng.normal(), 0.0);
      ck.le("varmin.truncation_contracts", vp_seminorm(U, truncate(U, realf, tau), p),
            vp_seminorm(U, realf, p), 1e-12);
      const Truncation sigma = Truncation::disc(1.0);
      GridFn cfn(U.size());
      for (auto& v : cfn) v = rng.complex_normal();
      ck.le("varmin.disc_truncation_contracts", vp_seminorm(U, truncate(U, cfn, sigma), p),
            vp_seminorm(U, cfn, p), 1e-12);
    }

    // p > 1 uniqueness: random starts agree
    {
      Rng ra = rng.fork(11), rb = rng.fork(12);
      const GridFn s1 = minimize_vp(U, boundary, 1.5, {1e-12, true, 6000}, &ra);
      const GridFn s2 = minimize_vp(U, boundary, 1.5, {1e-12, true, 6000}, &rb);
      double dist = 0.0;
      for (std::size_t i = 0; i < U.size(); ++i) dist = std::max(dist, std::abs(s1[i] - s2[i]));
      ck.le("varmin.uniqueness_p15", dist, 1e-5, 0.0);
    }

    // convex combinations of p = 1 minimizers are minimizers
    {
      Rng ra = rng.fork(21), rb = rng.fork(22);
      const GridFn s1 = minimize_vp(U, boundary, 1.0, {1e-12, true, 6000}, &ra);
      const GridFn s2 = minimize_vp(U, boundary, 1.0, {1e-12, true, 6000}, &rb);
      const double v1 = vp_seminorm(U, s1, 1.0);
      const double v2 = vp_seminorm(U, s2, 1.0);
      for (double tt : {0.25, 0.5, 0.75}) {
        GridFn mix(U.size());
        for (std::size_t i = 0; i < U.size(); ++i) mix[i] = tt * s1[i] + (1.0 - tt) * s2[i];
        ck.le("varmin.p1_convex_combination", vp_seminorm(U, mix, 1.0),
              std::max(v1, v2), 2e-5);
      }
    }
  }

  // complex boundary data: modulus bound and hull membership
  {
    std::vector<GridPoint> pts;
    for (int x = 0; x <= 4; ++x)
      for (int y = 0; y <= 4; ++y) pts.push_back({x, y});
    const GridDomain U(2, pts);
    std::map<std::size_t, cd> boundary;
    for (std::size_t b : U.boundary()) {
      const double ang = 2.0 * std::numbers::pi * rng.uniform();
      boundary[b] = cd(std::cos(ang), std::sin(ang));
    }
    for (double p : {1.5, 2.0, 3.0}) {
      const GridFn star = minimize_vp(U, boundary, p, {1e-11, false, 4000}, &rng);
      const auto rep = maximum_principle_report(U, boundary, star);
      ck.is_true("varmin.complex_maximum_principle", rep.holds);
      ck.le("varmin.complex_modulus_bound", rep.interior_abs_max, 1.0, 1e-8);
    }
  }

  // far points do not affect V_p; interior-supported V_p is a norm on a bar
  {
    std::vector<GridPoint> pts;
    for (int x = 0; x <= 6; ++x)
      for (int y = 0; y <= 2; ++y) pts.push_back({x, y});
    pts.push_back({20, 20});  // isolated faraway point
    const GridDomain U(2, pts);
    GridFn f(U.size());
    for (auto& v : f) v = cd(rng.normal(), 0.0);
    const double before = vp_seminorm(U, f, 1.5);
    GridFn g2 = f;
    g2[*U.index_of({20, 20})] += 42.0;
    ck.close("varmin.far_points_ignored", before, vp_seminorm(U, g2, 1.5), 1e-12);

    GridFn h(U.size(), cd(0.0));
    bool nondeg = true;
    for (std::size_t i : U.interior()) {
      GridFn e = h;
      e[i] = 1.0;
      if (vp_seminorm(U, e, 2.0) <= 0.0) nondeg = false;
    }
    ck.is_true("varmin.interior_norm_nondegenerate", nondeg);
  }

  // 1-D monotonicity characterization
  {
    std::vector<GridPoint> seg;
    for (int x = 0; x <= 5; ++x) seg.push_back({x});
    const GridDomain U(1, seg);
    GridFn inc(U.size());
    for (std::size_t i = 0; i < U.size(); ++i)
      inc[i] = cd(static_cast<double>(U.points[i][0]) * 0.5, 0.0);
    const auto repInc = v1_monotone_check(U, inc);
    ck.is_true("varmin.v1_monotone", repInc.monotone && repInc.v1_equals_diff);
    GridFn wig = inc;
    wig[2] = cd(9.0, 0.0);
    const auto repWig = v1_monotone_check(U, wig);
    ck.is_true("varmin.v1_wiggle", !repWig.monotone && !repWig.v1_equals_diff);
  }
}

// -------------------------------------------------------------- quasisym --

void suite_quasisym(Checker& ck, Rng& rng, SuiteSize size) {
  // cantor levels: counts, lengths, nesting, middle thirds
  for (double r : {1.0 / 3.0, 0.5, 0.2}) {
    const int depth = 6;
    const CantorSystem sys = build_cantor(r, depth);
    bool ok = true;
    for (int j = 0; j <= depth; ++j) {
      const auto& level = sys.levels[static_cast<std::size_t>(j)];
      if (level.size() != (std::size_t{1} << j)) ok = false;
      const double want = std::pow((1.0 - r) / 2.0, j);
      for (const auto& I : level)
        if (std::fabs(I.length() - want) > 1e-12) ok = false;
      if (j > 0) {
        for (const auto& I : level) {
          bool nested = false;
          for (const auto& P : sys.levels[static_cast<std::size_t>(j - 1)])
            if (P.contains(I)) nested = true;
          if (!nested) ok = false;
        }
      }
    }
    ck.is_true("quasisym.cantor_levels", ok);
  }
  {
    const auto third = cantor_level(1.0 / 3.0, 1);
    ck.close("quasisym.middle_thirds_left", third[0].b, 1.0 / 3.0, 1e-15);
    ck.close("quasisym.middle_thirds_right", third[1].a, 2.0 / 3.0, 1e-15);
  }

  // h_map: identity case, order preservation, injectivity, non-affinity
  {
    const int depth = 10;
    const CantorSystem src = build_cantor(1.0 / 3.0, depth);
    const CantorSystem dst = build_cantor(0.5, depth);
    const auto se = endpoints_at_depth(src);
    const auto de = endpoints_at_depth(dst);
    bool order_ok = true, inject_ok = true;
    for (std::size_t i = 1; i < de.size(); ++i) {
      if (de[i] < de[i - 1]) order_ok = false;
      if (de[i] == de[i - 1] && se[i] != se[i - 1]) inject_ok = false;
    }
    ck.is_true("quasisym.hmap_order", order_ok);
    ck.is_true("quasisym.hmap_injective", inject_ok);

    // nonzero second difference on consecutive depth-5 endpoints
    const CantorSystem s5 = build_cantor(1.0 / 3.0, 5);
    const CantorSystem d5 = build_cantor(0.5, 5);
    const auto se5 = endpoints_at_depth(s5);
    const auto de5 = endpoints_at_depth(d5);
    bool noncollinear = true;
    for (std::size_t i = 0; i + 2 < se5.size(); ++i) {
      const double slope1 = (de5[i + 1] - de5[i]) / (se5[i + 1] - se5[i]);
      const double slope2 = (de5[i + 2] - de5[i + 1]) / (se5[i + 2] - se5[i + 1]);
      if (std::fabs(slope1 - slope2) < 1e-12) noncollinear = false;
    }
    ck.is_true("quasisym.hmap_not_affine", noncollinear);

    // identity h_map
    const auto idm = h_map(1.0 / 3.0, 1.0 / 3.0, "0110", IntervalEnd::Right, 10);
    ck.close("quasisym.hmap_identity", idm.first, idm.second, 0.0);
  }

  // two-fifths construction and the sandwich E_{2l} in E_hat_l in E_l
  {
    const int l = 3;
    const auto tf = two_fifths_map(l);
    ck.is_true("quasisym.twofifths_counts",
               tf.source_intervals.size() == 27 && tf.target_intervals.size() == 27);
    bool target_lengths = true;
    for (const auto& I : tf.target_intervals)
      if (std::fabs(I.length() - std::pow(0.2, l)) > 1e-12) target_lengths = false;
    ck.is_true("quasisym.twofifths_target_lengths", target_lengths);
    const auto e_l = cantor_level(1.0 / 3.0, l);
    const auto e_2l = cantor_level(1.0 / 3.0, 2 * l);
    bool inner = true, outer = true;
    for (const auto& I : e_2l) {
      bool contained = false;
      for (const auto& J : tf.source_intervals)
        if (J.a <= I.a + 1e-12 && I.b <= J.b + 1e-12) contained = true;
      if (!contained) inner = false;
    }
    for (const auto& J : tf.source_intervals) {
      bool contained = false;
      for (const auto& K : e_l)
        if (K.a <= J.a + 1e-12 && J.b <= K.b + 1e-12) contained = true;
      if (!contained) outer = false;
    }
    ck.is_true("quasisym.twofifths_sandwich", inner && outer);
  }

  // empirical moduli
  const std::size_t budget = size == SuiteSize::Small ? 200000 : 1000000;
  {
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 40; ++i) {
      Eigen::VectorXd x(1);
      x[0] = rng.uniform();
      pts.push_back(x);
    }
    const auto table_id = eta_empirical(pts, pts, budget, rng);
    bool within = true;
    const double bucket = std::pow(10.0, 0.25);
    for (std::size_t i = 0; i < table_id.t.size(); ++i) {
      if (table_id.eta[i] > table_id.t[i] * 1.0000001) within = false;
      if (table_id.eta[i] < table_id.t[i] / (bucket * bucket)) within = false;
    }
    ck.is_true("quasisym.identity_modulus", within);
    // admissibility: the smallest sampled bucket sits within twice the
    // identity baseline at that t
    ck.le("quasisym.identity_admissible", table_id.eta.front(), 2.0 * table_id.t.front(),
          1e-12);

    // similarity map keeps the same modulus
    std::vector<Eigen::VectorXd> sim;
    for (const auto& x : pts) sim.push_back(Eigen::VectorXd(3.0 * x + Eigen::VectorXd::Ones(1)));
    const auto table_sim = eta_empirical(pts, sim, budget, rng);
    bool same = table_sim.t.size() == table_id.t.size();
    for (std::size_t i = 0; same && i < table_sim.t.size(); ++i)
      if (std::fabs(table_sim.eta[i] - table_id.eta[i]) >
          1e-9 * std::max(1.0, table_id.eta[i]))
        same = false;
    ck.is_true("quasisym.similarity_modulus", same);

    // inverse modulus: identity inverts to itself, bilipschitz algebra
    const auto inv = eta_inverse(table_id);
    bool inv_ok = true;
    for (std::size_t i = 0; i < inv.t.size(); ++i)
      if (inv.eta[i] > inv.t[i] * bucket * bucket * 1.01 ||
          inv.eta[i] < inv.t[i] / (bucket * bucket) / 1.01)
        inv_ok = false;
    ck.is_true("quasisym.inverse_identity", inv_ok);
  }

  // power envelope dominates the iterated step bounds
  {
    for (const auto& [t1, L] : std::vector<std::pair<double, double>>{
             {0.5, 2.0}, {0.25, 3.0}, {0.5, 4.0}, {0.1, 7.5}}) {
      const PowerEnvelope env = power_envelope(t1, L);
      bool ok = true;
      for (int k = 1; k <= 12; ++k) {
        if (env.eval(std::pow(t1, k)) < std::pow(0.5, k) * (1.0 - 1e-12)) ok = false;
        if (env.eval(std::ldexp(1.0, k)) < std::pow(L, k) * (1.0 - 1e-12)) ok = false;
      }
      ck.is_true("quasisym.envelope_dominates", ok);
    }
  }

  // radial maps
  {
    Eigen::VectorXd x(2);
    x << 3.0, 4.0;
    const Eigen::VectorXd y = radial_map(2.0, x);
    ck.close("quasisym.radial_b2_x", y[0], 15.0, 1e-12);
    ck.close("quasisym.radial_b2_y", y[1], 20.0, 1e-12);
    std::vector<Eigen::VectorXd> pts, imgs;
    for (int i = 0; i < 35; ++i) {
      Eigen::VectorXd p(2);
      p << rng.normal(), rng.normal();
      pts.push_back(p);
      imgs.push_back(radial_map(0.5, p));
    }
    const auto table = eta_empirical(pts, imgs, budget, rng);
    bool finite = true;
    for (double e : table.eta)
      if (!std::isfinite(e)) finite = false;
    ck.is_true("quasisym.radial_modulus_finite", finite);
    bool monotone = true;
    for (std::size_t i = 1; i < table.eta.size(); ++i)
      if (table.eta[i] < table.eta[i - 1]) monotone = false;
    ck.is_true("quasisym.radial_modulus_monotone", monotone);

    // composition modulus dominated by the composition of moduli
    std::vector<Eigen::VectorXd> mids, comps;
    for (const auto& p : pts) {
      mids.push_back(radial_map(0.7, p));
      comps.push_back(radial_map(0.5, radial_map(0.7, p)));
    }
    const auto table_f = eta_empirical(pts, mids, budget, rng);
    const auto table_g = eta_empirical(mids, comps, budget, rng);
    const auto table_gf = eta_empirical(pts, comps, budget, rng);
    const double slack = std::pow(10.0, 0.5);  // two bucket widths
    bool dominated = true;
    for (std::size_t i = 0; i < table_gf.t.size(); ++i) {
      const double ef = table_f.eval(table_gf.t[i]);
      if (!std::isfinite(ef)) continue;
      const double eg = table_g.eval(ef * slack);
      if (!std::isfinite(eg)) continue;
      if (table_gf.eta[i] > eg * slack) dominated = false;
    }
    ck.is_true("quasisym.composition_modulus", dominated);
  }
}

using SuiteFn = std::function<void(Checker&, Rng&, SuiteSize)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"dyadic", suite_dyadic},     {"inequalities", suite_inequalities},
      {"linops", suite_linops},     {"hardy", suite_hardy},
      {"probab", suite_probab},     {"interp", suite_interp},
      {"varmin", suite_varmin},     {"quasisym", suite_quasisym},
  };
  return table;
}

SuiteReport run_one(const std::string& name, const SuiteFn& fn, std::uint64_t seed,
                    SuiteSize size) {
  SuiteReport rep;
  rep.name = name;
  Checker ck{&rep};
  Rng rng(seed ^ std::hash<std::string>{}(name));
  const auto start = std::chrono::steady_clock::now();
  fn(ck, rng, size);
  const auto stop = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed,
                                    SuiteSize size) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& [n, fn] : registry()) out.push_back(run_one(n, fn, seed, size));
    return out;
  }
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      out.push_back(run_one(n, fn, seed, size));
      return out;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::string reports_to_csv(const std::vector<SuiteReport>& reports, bool include_timings) {
  std::ostringstream os;
  os << (include_timings ? "suite,cases,violations,wall_ms\n" : "suite,cases,violations\n");
  for (const auto& rep : reports) {
    os << rep.name << ',' << rep.cases << ',' << rep.violations.size();
    if (include_timings) os << ',' << io::format_double(rep.wall_ms);
    os << '\n';
  }
  bool any = false;
  for (const auto& rep : reports) any = any || !rep.violations.empty();
  if (any) {
    os << "suite,case,lhs,rhs,tol\n";
    for (const auto& rep : reports)
      for (const auto& v : rep.violations)
        os << rep.name << ',' << v.id << ',' << io::format_double(v.lhs) << ','
           << io::format_double(v.rhs) << ',' << io::format_double(v.tol) << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool include_timings) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    if (i) os << ',';
    os << "{\"suite\":\"" << rep.name << "\",\"cases\":" << rep.cases;
    if (include_timings) os << ",\"wall_ms\":" << io::format_double(rep.wall_ms);
    os << ",\"violations\":[";
    for (std::size_t v = 0; v < rep.violations.size(); ++v) {
      const auto& vi = rep.violations[v];
      if (v) os << ',';
      os << "{\"case\":\"" << vi.id << "\",\"lhs\":" << io::format_double(vi.lhs)
         << ",\"rhs\":" << io::format_double(vi.rhs)
         << ",\"tol\":" << io::format_double(vi.tol) << "}";
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

}  // namespace dyana
