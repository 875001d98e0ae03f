#include "dyana/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dyana/hardy.hpp"
#include "dyana/linops.hpp"

namespace dyana {

namespace {

// Hoelder-equality partner: unit q-norm y maximizing |sum y_j z_j|, keeping
// y_j = 0 where z_j = 0
Vector hoelder_partner(const Vector& z, double q) {
  Vector y = Vector::Zero(z.size());
  const double nz = vector_pnorm(z, conjugate_exponent(q));
  if (nz == 0.0) return y;
  if (std::isinf(q)) {
    for (Eigen::Index j = 0; j < z.size(); ++j)
      if (std::abs(z[j]) > 0.0) y[j] = std::conj(z[j]) / std::abs(z[j]);
    return y;
  }
  const double r = conjugate_exponent(q);  // z is measured in l^r
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const double a = std::abs(z[j]);
    if (a > 0.0) y[j] = std::conj(z[j]) * std::pow(a, r - 2.0) / std::pow(nz, r - 1.0);
  }
  return y;
}

cd bilinear(const Matrix& a, const Vector& x, const Vector& y) {
  return (y.transpose() * (a * x))(0);
}

}  // namespace

namespace {

// one multistart run of the alternating extremal iteration; used by both
// mp_norm (inexact branch) and extremal_pair so the reported lower bound
// is attained by the returned pair
double alternating_ascent(const Matrix& a, double r, int budget, Rng& gen,
                          bool real_mode, Vector* best_x, Vector* best_y) {
  const double rc = conjugate_exponent(r);
  double best = 0.0;
  for (int t = 0; t < std::max(1, budget); ++t) {
    Vector x(a.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      x[i] = real_mode ? cd(gen.normal(), 0.0) : gen.complex_normal();
    const double nx = vector_pnorm(x, r);
    if (nx == 0.0) continue;
    x /= nx;
    Vector y;
    double value = 0.0;
    for (int sweep = 0; sweep < 600; ++sweep) {
      y = hoelder_partner(a * x, rc);
      const Vector ya = (y.transpose() * a).transpose();
      Vector xn = hoelder_partner(ya, r);
      if (real_mode) {
        for (Eigen::Index i = 0; i < xn.size(); ++i) xn[i] = cd(xn[i].real(), 0.0);
        const double n = vector_pnorm(xn, r);
        if (n > 0.0) xn /= n;
      }
      const double v = std::abs(bilinear(a, xn, y));
      if (v < value * (1.0 - 1e-12) - 1e-300)
        throw std::logic_error("alternating ascent decreased the form");
      x = xn;
      if (v <= value * (1.0 + 1e-14)) {
        value = std::max(value, v);
        break;
      }
      value = v;
    }
    if (value > best) {
      best = value;
      if (best_x) *best_x = x;
      if (best_y) *best_y = y;
    }
  }
  return best;
}

}  // namespace

MpResult mp_norm(const Matrix& a, double p, int budget, Rng* rng, bool real_mode) {
  if (!(p >= 1.0)) throw std::invalid_argument("mp_norm: p must be >= 1");
  if (p == 1.0) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      best = std::max(best, vector_pnorm(a.col(k), 1.0));
    return {best, true};
  }
  if (std::isinf(p)) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < a.rows(); ++j)
      best = std::max(best, vector_pnorm(a.row(j).transpose(), 1.0));
    return {best, true};
  }
  if (p == 2.0) {
    Eigen::JacobiSVD<Matrix> svd(a);
    return {svd.singularValues().size() ? svd.singularValues()[0] : 0.0, true};
  }

  Rng local(20240719);
  Rng& gen = rng ? *rng : local;
  if (a.norm() == 0.0) return {0.0, false};
  return {alternating_ascent(a, p, budget, gen, real_mode, nullptr, nullptr), false};
}

ExtremalPair extremal_pair(const Matrix& a, double r, int budget, Rng& rng) {
  if (!(r > 1.0) || std::isinf(r))
    throw std::invalid_argument("extremal_pair: r must lie in (1,infinity)");
  if (a.norm() == 0.0) throw std::invalid_argument("extremal_pair: zero matrix");
  const double rc = conjugate_exponent(r);

  auto worst_residuals = [&](const Vector& x, const Vector& y) {
    const Vector ax = a * x;
    const Vector ya = (y.transpose() * a).transpose();
    const double mu = vector_pnorm(ax, r);
    const double nu = vector_pnorm(ya, rc);
    double res = 0.0;
    for (Eigen::Index j = 0; j < ax.size(); ++j)
      res = std::max(res,
                     std::fabs(std::abs(ax[j]) - mu * std::pow(std::abs(y[j]), rc - 1.0)));
    for (Eigen::Index k = 0; k < ya.size(); ++k)
      res = std::max(res,
                     std::fabs(std::abs(ya[k]) - nu * std::pow(std::abs(x[k]), r - 1.0)));
    return res;
  };

  ExtremalPair best;
  best.value = alternating_ascent(a, r, budget, rng, false, &best.x, &best.y);
  // polish: extra sweeps at the winner until the pair is stationary
  for (int sweep = 0; sweep < 600 && worst_residuals(best.x, best.y) > 1e-9; ++sweep) {
    best.y = hoelder_partner(a * best.x, rc);
    const Vector ya = (best.y.transpose() * a).transpose();
    best.x = hoelder_partner(ya, r);
    best.value = std::max(best.value, std::abs(bilinear(a, best.x, best.y)));
  }

  // stationarity constants and residuals at the winner
  const Vector ax = a * best.x;
  const Vector ya = (best.y.transpose() * a).transpose();
  best.mu = vector_pnorm(ax, r);        // = |A(x,y)| at a Hoelder-equality pair
  best.nu = vector_pnorm(ya, rc);
  double res_mu = 0.0, res_nu = 0.0;
  for (Eigen::Index j = 0; j < ax.size(); ++j)
    res_mu = std::max(res_mu,
                      std::fabs(std::abs(ax[j]) - best.mu * std::pow(std::abs(best.y[j]), rc - 1.0)));
  for (Eigen::Index k = 0; k < ya.size(); ++k)
    res_nu = std::max(res_nu,
                      std::fabs(std::abs(ya[k]) - best.nu * std::pow(std::abs(best.x[k]), r - 1.0)));
  best.residual_mu = res_mu;
  best.residual_nu = res_nu;
  return best;
}

RieszReport riesz_convexity_report(const Matrix& a, double p, double q, double t,
                                   int budget, Rng* rng) {
  if (!(p >= 1.0) || !(q >= 1.0) || !(p < q))
    throw std::invalid_argument("riesz_convexity_report: need 1 <= p < q <= infinity");
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("riesz_convexity_report: t must lie in (0,1)");
  RieszReport rep;
  const double inv_r = t / p + (std::isinf(q) ? 0.0 : (1.0 - t) / q);
  rep.r = inv_r == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_r;
  const MpResult mr = mp_norm(a, rep.r, budget, rng);
  rep.m_r_lower = mr.value;
  rep.m_r_exact = mr.exact;
  rep.m_p = mp_norm(a, p, budget, rng).value;
  rep.m_q = mp_norm(a, q, budget, rng).value;
  rep.endpoint_product = std::pow(rep.m_p, t) * std::pow(rep.m_q, 1.0 - t);
  return rep;
}

MidpointConvexityReport midpoint_convexity_upgrade(const SampledFunction& f) {
  MidpointConvexityReport rep;
  const auto& x = f.points;
  const auto& y = f.values;
  rep.hypothesis_holds = true;
  for (std::size_t i = 0; i + 2 < x.size() && rep.hypothesis_holds; ++i) {
    for (std::size_t j = i + 2; j < x.size(); ++j) {
      bool found = false;
      for (std::size_t k = i + 1; k < j && !found; ++k) {
        const double lam = (x[j] - x[k]) / (x[j] - x[i]);
        if (y[k] <= lam * y[i] + (1.0 - lam) * y[j] + 1e-10) found = true;
      }
      if (!found) {
        rep.hypothesis_holds = false;
        break;
      }
    }
  }
  const ConvexityReport conv = convexity_certificate(f);
  rep.convex = conv.convex;
  rep.violation = conv.violation;
  rep.upgraded = !rep.hypothesis_holds || rep.convex;
  return rep;
}

StepOperatorInterpReport stepfn_operator_interp(const Matrix& T, double p, double q,
                                                double t, int trials, Rng& rng) {
  if (T.rows() != T.cols()) throw std::invalid_argument("stepfn_operator_interp: square T");
  const Eigen::Index n = T.rows();
  int m = 0;
  while ((Eigen::Index{1} << m) < n) ++m;
  if ((Eigen::Index{1} << m) != n)
    throw std::invalid_argument("stepfn_operator_interp: size must be a power of two");
  auto exact_endpoint = [](double e) { return e == 1.0 || e == 2.0 || std::isinf(e); };
  if (!exact_endpoint(p) || !exact_endpoint(q))
    throw std::invalid_argument("stepfn_operator_interp: endpoints must be 1, 2 or infinity");
  if (!(p < q)) throw std::invalid_argument("stepfn_operator_interp: need p < q");

  StepOperatorInterpReport rep;
  // under the 2^-m integral weighting the lp->lp norm is weight-free
  rep.n_p = mp_norm(T, p).value;
  rep.n_q = mp_norm(T, q).value;
  const double inv_r = t / p + (std::isinf(q) ? 0.0 : (1.0 - t) / q);
  rep.r = inv_r == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_r;
  rep.bound = std::pow(rep.n_p, t) * std::pow(rep.n_q, 1.0 - t);

  double worst = 0.0;
  for (int s = 0; s < trials; ++s) {
    std::vector<cd> vals(static_cast<std::size_t>(n));
    for (auto& v : vals) v = rng.complex_normal();
    const DyadicStepFn f(m, vals);
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = vals[static_cast<std::size_t>(i)];
    const Vector tx = T * x;
    std::vector<cd> tvals(tx.data(), tx.data() + tx.size());
    const DyadicStepFn tf(m, tvals);
    const double nf = lp_norm(f, rep.r);
    if (nf == 0.0) continue;
    worst = std::max(worst, lp_norm(tf, rep.r) / nf);
  }
  rep.worst_ratio = worst;
  rep.holds = worst <= rep.bound * (1.0 + 1e-9);
  return rep;
}

MaximalLinearization linearize_maximal(const DyadicStepFn& f) {
  MaximalLinearization out;
  const int m = f.resolution();
  std::vector<DyadicStepFn> layers;
  layers.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) layers.push_back(expectation(f, k).refined(m));
  out.selector.resize(std::size_t{1} << m, 0);
  std::vector<double> rec(std::size_t{1} << m, 0.0);
  for (std::size_t i = 0; i < rec.size(); ++i) {
    double best = -1.0;
    int arg = 0;
    for (int k = 0; k <= m; ++k) {
      const double v = std::abs(layers[static_cast<std::size_t>(k)][i]);
      if (v > best + 0.0) {  // strict: keeps the smallest level on ties
        best = v;
        arg = k;
      }
    }
    out.selector[i] = arg;
    rec[i] = std::abs(layers[static_cast<std::size_t>(arg)][i]);
  }
  out.reconstruction = DyadicStepFn::from_real(m, rec);
  return out;
}

DyadicStepFn linearize_square(const DyadicStepFn& f) {
  const int m = f.resolution();
  const DyadicStepFn s = square(f);
  std::vector<DyadicStepFn> deltas;
  DyadicStepFn prev = expectation(f, 0);
  deltas.push_back(prev.refined(m));
  for (int k = 1; k <= m; ++k) {
    DyadicStepFn ek = expectation(f, k);
    deltas.push_back((ek - prev).refined(m));
    prev = std::move(ek);
  }
  std::vector<cd> vals(std::size_t{1} << m, cd(0.0));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double sv = s[i].real();
    if (sv <= 0.0) continue;
    cd acc = 0.0;
    for (const auto& d : deltas) acc += std::conj(d[i]) / sv * d[i];
    vals[i] = acc;  // = S(f)(x) by Cauchy-Schwarz equality
  }
  return DyadicStepFn(m, std::move(vals));
}

}  // namespace dyana
