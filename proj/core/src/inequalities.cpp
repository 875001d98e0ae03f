#include "dyana/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dyana {

SampledFunction::SampledFunction(std::vector<double> pts, std::vector<double> vals)
    : points(std::move(pts)), values(std::move(vals)) {
  if (points.size() != values.size())
    throw std::invalid_argument("sample count mismatch");
  if (points.size() < 3) throw std::invalid_argument("need at least 3 samples");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i] > points[i - 1]))
      throw std::invalid_argument("abscissae must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("values must be finite");
}

double SampledFunction::operator()(double x) const {
  if (x < points.front() || x > points.back())
    throw std::domain_error("evaluation outside the sampled range");
  auto it = std::upper_bound(points.begin(), points.end(), x);
  if (it == points.end()) return values.back();
  if (it == points.begin()) return values.front();
  const std::size_t i = static_cast<std::size_t>(it - points.begin());
  const double x0 = points[i - 1], x1 = points[i];
  const double w = (x - x0) / (x1 - x0);
  return (1.0 - w) * values[i - 1] + w * values[i];
}

ConvexityReport convexity_certificate(const SampledFunction& phi, double tol) {
  ConvexityReport rep;
  rep.convex = true;
  const auto& x = phi.points;
  const auto& y = phi.values;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    const double s = x[i], t = x[i + 1], u = x[i + 2];
    const double q_st = (y[i + 1] - y[i]) / (t - s);
    const double q_su = (y[i + 2] - y[i]) / (u - s);
    const double q_tu = (y[i + 2] - y[i + 1]) / (u - t);
    if (q_st > q_su + tol || q_su > q_tu + tol) {
      rep.convex = false;
      rep.violation = std::array<double, 3>{s, t, u};
      return rep;
    }
  }
  return rep;
}

double support_line(const SampledFunction& phi, double t) {
  if (!convexity_certificate(phi).convex)
    throw std::invalid_argument("support_line: input is not convex");
  auto it = std::find(phi.points.begin(), phi.points.end(), t);
  if (it == phi.points.end())
    throw std::invalid_argument("support_line: t must be a sample abscissa");
  const std::size_t idx = static_cast<std::size_t>(it - phi.points.begin());
  const double ft = phi.values[idx];

  double dl = -std::numeric_limits<double>::infinity();
  double dr = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < phi.points.size(); ++i) {
    if (i == idx) continue;
    const double q = (phi.values[i] - ft) / (phi.points[i] - t);
    if (phi.points[i] < t)
      dl = std::max(dl, q);
    else
      dr = std::min(dr, q);
  }
  if (std::isinf(dl)) return dr;
  if (std::isinf(dr)) return dl;
  return 0.5 * (dl + dr);
}

double jensen_gap(const SampledFunction& phi, const DyadicStepFn& f) {
  if (!f.is_real(1e-14)) throw std::invalid_argument("jensen_gap: f must be real");
  double mean = 0.0, mean_phi = 0.0;
  const double w = 1.0 / static_cast<double>(f.cells());
  for (const cd& v : f.values()) {
    mean += w * v.real();
    mean_phi += w * phi(v.real());
  }
  return mean_phi - phi(mean);
}

double jensen_gap_power(double p, const DyadicStepFn& f) {
  if (p < 1.0) throw std::invalid_argument("jensen_gap_power: p must be >= 1");
  if (!f.is_real(1e-14)) throw std::invalid_argument("jensen_gap_power: f must be real");
  double mean = 0.0, mean_phi = 0.0;
  const double w = 1.0 / static_cast<double>(f.cells());
  for (const cd& v : f.values()) {
    if (v.real() < 0.0)
      throw std::domain_error("jensen_gap_power: f must be nonnegative");
    mean += w * v.real();
    mean_phi += w * std::pow(v.real(), p);
  }
  return mean_phi - std::pow(mean, p);
}

namespace {

double pnorm(const std::vector<cd>& v, double p) {
  double s = 0.0;
  for (const cd& z : v) s += std::pow(std::abs(z), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

ClarksonSides clarkson_check(const std::vector<cd>& x, const std::vector<cd>& y, double p) {
  if (x.size() != y.size()) throw std::invalid_argument("clarkson_check: size mismatch");
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("clarkson_check: p must lie in (1,infinity)");
  std::vector<cd> mid(x.size()), dif(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mid[i] = 0.5 * (x[i] + y[i]);
    dif[i] = 0.5 * (x[i] - y[i]);
  }
  ClarksonSides out;
  if (p >= 2.0) {
    out.lhs = std::pow(pnorm(mid, p), p) + std::pow(pnorm(dif, p), p);
    out.rhs = 0.5 * std::pow(pnorm(x, p), p) + 0.5 * std::pow(pnorm(y, p), p);
  } else {
    const double pc = p / (p - 1.0);
    out.lhs = std::pow(pnorm(mid, p), pc) + std::pow(pnorm(dif, p), pc);
    out.rhs = std::pow(0.5 * std::pow(pnorm(x, p), p) + 0.5 * std::pow(pnorm(y, p), p),
                       1.0 / (p - 1.0));
  }
  return out;
}

}  // namespace dyana
