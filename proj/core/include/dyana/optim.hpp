#pragma once

#include <Eigen/Dense>
#include <functional>

#include "dyana/rng.hpp"

namespace dyana::optim {

using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;
using Objective = std::function<double(const RealVec&)>;

struct MinimizeResult {
  RealVec x;
  double value = 0.0;
};

/// Coordinate pattern search with shrinking step; handles nonsmooth convex
/// objectives at small dimension.
MinimizeResult pattern_search(const Objective& f, RealVec x0, double step0,
                              double step_tol, int max_iter = 200000);

/// Pattern search from x0 plus `restarts` random starts in a box of the
/// given radius around x0.
MinimizeResult multistart_minimize(const Objective& f, const RealVec& x0,
                                   double radius, int restarts, Rng& rng,
                                   double step0, double step_tol);

struct MinNormResult {
  RealVec point;   // nearest point of the hull to the origin
  RealVec coeffs;  // simplex coefficients over the columns of P
};

/// Wolfe's minimum-norm-point algorithm over the convex hull of the columns
/// of P. Finite and exact up to the tolerance.
MinNormResult min_norm_point(const RealMat& P, double tol = 1e-12);

/// Lawson-Hanson nonnegative least squares: minimize |A x - b| over x >= 0.
RealVec nnls(const RealMat& A, const RealVec& b, double tol = 1e-12);

}  // namespace dyana::optim
