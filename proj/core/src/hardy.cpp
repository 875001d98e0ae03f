#include "dyana/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dyana {

namespace {

// pointwise |avg| > lambda over all dyadic intervals of generation <= m
std::vector<DyadicInterval> threshold_family(const DyadicStepFn& f, double lambda) {
  std::vector<DyadicInterval> fam;
  for (int k = 0; k <= f.resolution(); ++k) {
    for (const DyadicInterval& I : dyadic_partition(k)) {
      if (std::abs(f.average_on(I)) > lambda) fam.push_back(I);
    }
  }
  return fam;
}

double measure_of(const std::vector<DyadicInterval>& disjoint) {
  double s = 0.0;
  for (const auto& I : disjoint) s += I.length();
  return s;
}

DyadicStepFn average_on_family(const DyadicStepFn& f,
                               const std::vector<DyadicInterval>& family) {
  DyadicStepFn g = f;
  const int m = g.resolution();
  std::vector<cd> vals = g.values();
  for (const auto& L : family) {
    const cd a = f.average_on(L);
    const std::uint64_t lo = L.j << (m - L.k);
    const std::uint64_t hi = (L.j + 1) << (m - L.k);
    for (std::uint64_t i = lo; i < hi; ++i) vals[i] = a;
  }
  return DyadicStepFn(m, std::move(vals));
}

}  // namespace

DyadicStepFn maximal(const DyadicStepFn& f, std::optional<int> l) {
  const int m = f.resolution();
  const int kmax = l ? std::min(*l, m) : m;
  const int res = kmax;
  std::vector<double> sup(std::size_t{1} << res, 0.0);
  for (int k = 0; k <= kmax; ++k) {
    const DyadicStepFn ek = expectation(f, k).refined(res);
    for (std::size_t i = 0; i < sup.size(); ++i)
      sup[i] = std::max(sup[i], std::abs(ek[i]));
  }
  return DyadicStepFn::from_real(res, sup);
}

LevelSetReport maximal_level_set(const DyadicStepFn& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("maximal_level_set: lambda must be positive");
  LevelSetReport rep;
  rep.lambda = lambda;
  const DyadicStepFn af = f.abs();
  rep.bound = af.integral().real() / lambda;
  auto fam = threshold_family(f, lambda);
  if (fam.empty()) return rep;
  rep.intervals = maximal_disjoint(fam);
  rep.measure = measure_of(rep.intervals);
  double restricted = 0.0;
  for (const auto& L : rep.intervals)
    restricted += (af.average_on(L) * L.length()).real();
  rep.refined_bound = restricted / lambda;
  return rep;
}

std::pair<double, double> lp_maximal_report(const DyadicStepFn& f, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("lp_maximal_report: p must exceed 1");
  const double lhs = std::pow(lp_norm(maximal(f), p), p);
  const double rhs = std::pow(2.0, p) * p / (p - 1.0) * std::pow(lp_norm(f, p), p);
  return {lhs, rhs};
}

DyadicStepFn square(const DyadicStepFn& f, std::optional<int> l) {
  const int m = f.resolution();
  const int kmax = l ? std::min(*l, m) : m;
  const int res = kmax;
  std::vector<double> acc(std::size_t{1} << res, 0.0);
  DyadicStepFn prev = expectation(f, 0);
  {
    const DyadicStepFn e0 = prev.refined(res);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::norm(e0[i]);
  }
  for (int k = 1; k <= kmax; ++k) {
    DyadicStepFn ek = expectation(f, k);
    DyadicStepFn diff = ek - prev;
    const DyadicStepFn d = diff.refined(res);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::norm(d[i]);
    prev = std::move(ek);
  }
  std::vector<double> vals(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) vals[i] = std::sqrt(acc[i]);
  return DyadicStepFn::from_real(res, vals);
}

FlattenResult cz_flatten_m(const DyadicStepFn& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("cz_flatten_m: lambda must be positive");
  FlattenResult out{f, {}, false, false};
  auto fam = threshold_family(f, lambda);
  if (fam.empty()) {
    out.empty_family = true;
    return out;
  }
  auto f0 = maximal_disjoint(fam);
  if (f0.size() == 1 && f0[0].k == 0) {
    out.degenerate_root = true;
    out.intervals = f0;
    out.flattened = average_on_family(f, f0);
    return out;
  }
  std::vector<DyadicInterval> parents;
  parents.reserve(f0.size());
  for (const auto& J : f0) parents.push_back(J.parent());
  out.intervals = maximal_disjoint(parents);
  out.flattened = average_on_family(f, out.intervals);
  return out;
}

FlattenResult cz_flatten_s(const DyadicStepFn& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("cz_flatten_s: lambda must be positive");
  FlattenResult out{f, {}, false, false};
  const DyadicStepFn s = square(f);
  const int m = s.resolution();
  std::vector<bool> in_set(std::size_t{1} << m);
  bool any = false, all = true;
  for (std::size_t i = 0; i < in_set.size(); ++i) {
    in_set[i] = s[i].real() > lambda;
    any = any || in_set[i];
    all = all && in_set[i];
  }
  if (!any) {
    out.empty_family = true;
    return out;
  }
  if (all) {
    out.degenerate_root = true;
    out.intervals = {DyadicInterval{0, 0}};
    out.flattened = average_on_family(f.refined(m), out.intervals);
    return out;
  }
  // dyadic intervals fully inside the level set
  std::vector<DyadicInterval> inside;
  for (int k = 0; k <= m; ++k) {
    for (const DyadicInterval& I : dyadic_partition(k)) {
      const std::uint64_t lo = I.j << (m - k);
      const std::uint64_t hi = (I.j + 1) << (m - k);
      bool ok = true;
      for (std::uint64_t i = lo; i < hi && ok; ++i) ok = in_set[i];
      if (ok) inside.push_back(I);
    }
  }
  auto g0 = maximal_disjoint(inside);
  std::vector<DyadicInterval> parents;
  parents.reserve(g0.size());
  for (const auto& J : g0) parents.push_back(J.parent());
  out.intervals = maximal_disjoint(parents);
  out.flattened = average_on_family(f.refined(m), out.intervals);
  return out;
}

double distribution_integral(const DyadicStepFn& g, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("distribution_integral: p must be positive");
  const double w = std::ldexp(1.0, -g.resolution());
  std::vector<double> vals;
  vals.reserve(g.cells());
  for (const cd& v : g.values()) {
    if (v.imag() != 0.0 || v.real() < 0.0)
      throw std::invalid_argument("distribution_integral: g must be nonnegative real");
    vals.push_back(v.real());
  }
  std::vector<double> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  double layer = 0.0, prev = 0.0;
  for (double v : sorted) {
    if (v <= 0.0) continue;
    double meas = 0.0;  // |{g >= v}| = |{g > lambda}| for lambda in [prev, v)
    for (double x : vals)
      if (x >= v) meas += w;
    layer += meas * (std::pow(v, p) - std::pow(prev, p));
    prev = v;
  }
  double direct = 0.0;
  for (double x : vals) direct += w * std::pow(x, p);
  if (std::fabs(layer - direct) > 1e-12 * std::max(1.0, direct))
    throw std::logic_error("distribution_integral: layer-cake identity failed");
  return layer;
}

P4Decomposition p4_decomposition(const DyadicStepFn& f) {
  P4Decomposition out;
  const int m = f.resolution();
  out.s4 = std::pow(lp_norm(square(f), 4.0), 4.0);

  DyadicStepFn prev = expectation(f, 0);
  for (int j = 0; j <= m; ++j) {
    DyadicStepFn delta = (j == 0) ? prev : expectation(f, j) - prev;
    if (j > 0) prev = expectation(f, j);
    out.a += std::pow(lp_norm(delta, 4.0), 4.0);

    // E_j(|f - E_j f|^2), paired against |delta_j|^2
    DyadicStepFn resid = f - expectation(f, j);
    DyadicStepFn cond = expectation(resid.pow_abs(2.0), j);
    DyadicStepFn term = delta.pow_abs(2.0) * cond;
    out.b += term.integral().real();
  }
  return out;
}

DualityPairing duality_pairing(const DyadicStepFn& f1, const DyadicStepFn& f2) {
  DualityPairing out;
  DyadicStepFn a = f1, b = f2;
  align(a, b);
  out.product_integral = (a * b).integral();

  const int m = a.resolution();
  DyadicStepFn prev1 = expectation(a, 0), prev2 = expectation(b, 0);
  cd sum = (prev1 * prev2).integral();
  for (int j = 1; j <= m; ++j) {
    DyadicStepFn e1 = expectation(a, j), e2 = expectation(b, j);
    sum += ((e1 - prev1) * (e2 - prev2)).integral();
    prev1 = std::move(e1);
    prev2 = std::move(e2);
  }
  out.martingale_sum = sum;
  out.s_pairing = (square(a) * square(b)).integral().real();
  return out;
}

std::vector<RealInterval> interval_prune(std::vector<RealInterval> intervals) {
  for (const auto& I : intervals)
    if (!(I.a <= I.b)) throw std::invalid_argument("interval_prune: need a <= b");

  // drop intervals contained in a single other interval
  std::vector<RealInterval> kept;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < intervals.size() && !contained; ++j) {
      if (i == j) continue;
      const bool inside =
          intervals[j].a <= intervals[i].a && intervals[i].b <= intervals[j].b;
      const bool equal = intervals[j].a == intervals[i].a && intervals[j].b == intervals[i].b;
      if (inside && (!equal || j < i)) contained = true;
    }
    if (!contained) kept.push_back(intervals[i]);
  }

  // while some point lies in three intervals, drop one of the three
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<double> pts;
    for (const auto& I : kept) {
      pts.push_back(I.a);
      pts.push_back(I.b);
    }
    for (double x : pts) {
      std::vector<std::size_t> holding;
      for (std::size_t i = 0; i < kept.size(); ++i)
        if (kept[i].a <= x && x <= kept[i].b) holding.push_back(i);
      if (holding.size() < 3) continue;
      // among the first three, the leftmost-reaching and rightmost-reaching
      // cover the third
      std::size_t l = holding[0], r = holding[0];
      for (std::size_t idx : holding) {
        if (kept[idx].a < kept[l].a) l = idx;
        if (kept[idx].b > kept[r].b) r = idx;
      }
      std::size_t drop = holding[0];
      for (std::size_t idx : holding)
        if (idx != l && idx != r) {
          drop = idx;
          break;
        }
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(drop));
      changed = true;
      break;
    }
  }
  return kept;
}

WeakTypeSReport weak_type_s_report(const DyadicStepFn& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weak_type_s_report: lambda must be positive");
  WeakTypeSReport rep;
  const DyadicStepFn s = square(f);
  const double w = std::ldexp(1.0, -s.resolution());
  for (const cd& v : s.values())
    if (v.real() > lambda) rep.level_measure += w;
  rep.bound = 3.0 / lambda * f.abs().integral().real();

  const DyadicStepFn mf = maximal(f);
  const double wm = std::ldexp(1.0, -mf.resolution());
  for (const cd& v : mf.values())
    if (v.real() > 2.0 * lambda) rep.modified_measure += wm;
  const double wf = std::ldexp(1.0, -f.resolution());
  for (const cd& v : f.values())
    if (std::abs(v) > lambda) rep.modified_bound += wf * std::abs(v);
  rep.modified_bound /= lambda;
  return rep;
}

}  // namespace dyana
