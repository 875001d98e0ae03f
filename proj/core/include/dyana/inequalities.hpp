#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dyana/dyadic.hpp"

namespace dyana {

/// Real function sampled at strictly increasing abscissae (at least 3).
struct SampledFunction {
  std::vector<double> points;
  std::vector<double> values;

  SampledFunction(std::vector<double> pts, std::vector<double> vals);
  double operator()(double x) const;  // piecewise-linear interpolation
};

struct ConvexityReport {
  bool convex = false;
  // first consecutive triple (s,t,u) violating the slope monotonicity
  std::optional<std::array<double, 3>> violation;
};

/// Difference-quotient test on consecutive triples; tolerance 1e-10.
ConvexityReport convexity_certificate(const SampledFunction& phi, double tol = 1e-10);

/// Slope a with D_l <= a <= D_r at a sample abscissa t; A(x)=phi(t)+a(x-t)
/// minorizes phi at every sample point. Throws on non-convex input.
double support_line(const SampledFunction& phi, double t);

/// avg(phi(f)) - phi(avg f) for convex phi given by samples.
double jensen_gap(const SampledFunction& phi, const DyadicStepFn& f);
/// Same with phi(x) = x^p, p >= 1, f nonnegative real.
double jensen_gap_power(double p, const DyadicStepFn& f);

struct ClarksonSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of Clarkson's inequality for the given p in (1,infinity):
/// the p-power form for p >= 2, the conjugate-power form for p <= 2.
ClarksonSides clarkson_check(const std::vector<cd>& x, const std::vector<cd>& y, double p);

}  // namespace dyana
