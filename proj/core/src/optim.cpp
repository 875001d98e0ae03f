#include "dyana/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dyana::optim {

MinimizeResult pattern_search(const Objective& f, RealVec x0, double step0,
                              double step_tol, int max_iter) {
  RealVec x = std::move(x0);
  double fx = f(x);
  double step = step0;
  int it = 0;
  const Eigen::Index d = x.size();
  while (step > step_tol && it < max_iter) {
    bool improved = false;
    for (Eigen::Index i = 0; i < d; ++i) {
      for (double sgn : {1.0, -1.0}) {
        RealVec y = x;
        y[i] += sgn * step;
        const double fy = f(y);
        ++it;
        if (fy < fx - 1e-18) {
          x = std::move(y);
          fx = fy;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {std::move(x), fx};
}

MinimizeResult multistart_minimize(const Objective& f, const RealVec& x0,
                                   double radius, int restarts, Rng& rng,
                                   double step0, double step_tol) {
  MinimizeResult best = pattern_search(f, x0, step0, step_tol);
  for (int r = 0; r < restarts; ++r) {
    RealVec start = x0;
    for (Eigen::Index i = 0; i < start.size(); ++i)
      start[i] += rng.uniform(-radius, radius);
    MinimizeResult cand = pattern_search(f, std::move(start), step0, step_tol);
    if (cand.value < best.value) best = std::move(cand);
  }
  return best;
}

namespace {

// affine minimum-norm point over the columns of S: minimize |S a| with
// sum(a) = 1 (KKT system, solved by least squares for robustness)
RealVec affine_min_norm(const RealMat& S) {
  const Eigen::Index k = S.cols();
  RealMat K(k + 1, k + 1);
  K.topLeftCorner(k, k) = S.transpose() * S;
  K.topRightCorner(k, 1).setOnes();
  K.bottomLeftCorner(1, k).setOnes();
  K(k, k) = 0.0;
  RealVec rhs = RealVec::Zero(k + 1);
  rhs[k] = 1.0;
  RealVec sol = K.colPivHouseholderQr().solve(rhs);
  return sol.head(k);
}

}  // namespace

MinNormResult min_norm_point(const RealMat& P, double tol) {
  const Eigen::Index n = P.cols();
  if (n == 0) throw std::invalid_argument("min_norm_point: no points");
  double scale = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, P.col(i).squaredNorm());

  // corral indices and weights
  std::vector<Eigen::Index> corral;
  std::vector<double> weight;
  {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (P.col(i).squaredNorm() < P.col(best).squaredNorm()) best = i;
    corral.push_back(best);
    weight.push_back(1.0);
  }

  auto current_point = [&]() {
    RealVec x = RealVec::Zero(P.rows());
    for (std::size_t i = 0; i < corral.size(); ++i) x += weight[i] * P.col(corral[i]);
    return x;
  };

  for (int guard = 0; guard < 16 * static_cast<int>(n) + 64; ++guard) {
    RealVec x = current_point();
    // most violating vertex
    Eigen::Index jbest = 0;
    double dbest = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = x.dot(P.col(i));
      if (d < dbest) {
        dbest = d;
        jbest = i;
      }
    }
    if (dbest >= x.squaredNorm() - tol * scale) break;  // optimal
    if (std::find(corral.begin(), corral.end(), jbest) == corral.end()) {
      corral.push_back(jbest);
      weight.push_back(0.0);
    }

    // minor cycle: pull the affine minimizer back into the simplex
    for (;;) {
      RealMat S(P.rows(), static_cast<Eigen::Index>(corral.size()));
      for (std::size_t i = 0; i < corral.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = P.col(corral[i]);
      RealVec a = affine_min_norm(S);
      bool interior = true;
      for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] <= 1e-14) interior = false;
      if (interior) {
        for (std::size_t i = 0; i < corral.size(); ++i) weight[i] = a[static_cast<Eigen::Index>(i)];
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < corral.size(); ++i) {
        const double ai = a[static_cast<Eigen::Index>(i)];
        if (ai < 1e-14 && weight[i] - ai > 1e-300)
          theta = std::min(theta, weight[i] / (weight[i] - ai));
      }
      for (std::size_t i = 0; i < corral.size(); ++i)
        weight[i] += theta * (a[static_cast<Eigen::Index>(i)] - weight[i]);
      // drop vanished vertices
      for (std::size_t i = corral.size(); i-- > 0;) {
        if (weight[i] <= 1e-12) {
          corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(i));
          weight.erase(weight.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      if (corral.empty()) throw std::logic_error("min_norm_point: corral emptied");
      // renormalize weights
      double s = 0.0;
      for (double w : weight) s += w;
      for (double& w : weight) w /= s;
    }
  }

  MinNormResult out;
  out.point = current_point();
  out.coeffs = RealVec::Zero(n);
  for (std::size_t i = 0; i < corral.size(); ++i) out.coeffs[corral[i]] = weight[i];
  return out;
}

RealVec nnls(const RealMat& A, const RealVec& b, double tol) {
  const Eigen::Index n = A.cols();
  RealVec x = RealVec::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  double scale = std::max(1.0, b.squaredNorm());
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, A.col(i).squaredNorm());

  auto solve_passive = [&](const std::vector<bool>& mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (mask[static_cast<std::size_t>(i)]) idx.push_back(i);
    RealVec z = RealVec::Zero(n);
    if (idx.empty()) return z;
    RealMat Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) Ap.col(static_cast<Eigen::Index>(i)) = A.col(idx[i]);
    RealVec zp = Ap.colPivHouseholderQr().solve(b);
    for (std::size_t i = 0; i < idx.size(); ++i) z[idx[i]] = zp[static_cast<Eigen::Index>(i)];
    return z;
  };

  for (int guard = 0; guard < 4 * static_cast<int>(n) + 32; ++guard) {
    const RealVec w = A.transpose() * (b - A * x);
    Eigen::Index best = -1;
    double wbest = tol * scale;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!passive[static_cast<std::size_t>(i)] && w[i] > wbest) {
        wbest = w[i];
        best = i;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    RealVec z = solve_passive(passive);
    for (int inner = 0; inner < 2 * static_cast<int>(n) + 16; ++inner) {
      double zmin = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < n; ++i)
        if (passive[static_cast<std::size_t>(i)]) zmin = std::min(zmin, z[i]);
      if (zmin > 0.0) break;
      double theta = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < n; ++i) {
        if (passive[static_cast<std::size_t>(i)] && z[i] <= 0.0 && x[i] - z[i] > 1e-300)
          theta = std::min(theta, x[i] / (x[i] - z[i]));
      }
      if (!std::isfinite(theta)) theta = 0.0;
      x += theta * (z - x);
      for (Eigen::Index i = 0; i < n; ++i)
        if (passive[static_cast<std::size_t>(i)] && x[i] <= tol) {
          passive[static_cast<std::size_t>(i)] = false;
          x[i] = 0.0;
        }
      z = solve_passive(passive);
    }
    x = z;
  }
  for (Eigen::Index i = 0; i < n; ++i) x[i] = std::max(x[i], 0.0);
  return x;
}

}  // namespace dyana::optim
