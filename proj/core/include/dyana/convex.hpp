#pragma once

#include <optional>
#include <vector>

#include "dyana/optim.hpp"

namespace dyana {

/// Finite generator list in R^n, read as a convex hull or as the convex cone
/// the generators span (a cone always contains 0).
struct ConvexBody {
  enum class Mode { Hull, Cone };
  Mode mode = Mode::Hull;
  std::vector<Eigen::VectorXd> generators;

  ConvexBody(Mode m, std::vector<Eigen::VectorXd> gens);
  int dim() const { return generators.empty() ? 0 : static_cast<int>(generators.front().size()); }
};

/// Euclidean distance from x to the hull of the generators, with the nearest
/// point. Exact (Wolfe minimum-norm point).
std::pair<double, Eigen::VectorXd> hull_distance(const ConvexBody& body,
                                                 const Eigen::VectorXd& x);

struct SeparationResult {
  Eigen::VectorXd nearest;     // q, unique nearest point of the hull
  Eigen::VectorXd functional;  // lambda = x - q
  double threshold = 0.0;      // c with lambda(y) <= c < lambda(x) on the hull
};

/// Strictly separating hyperplane; throws if x lies in the hull
/// (distance <= 1e-9).
SeparationResult separate(const ConvexBody& hull, const Eigen::VectorXd& x);

struct ConeMembership {
  bool inside = false;
  double residual = 0.0;                        // nonnegative-least-squares residual
  std::optional<Eigen::VectorXd> functional;    // nonnegative on the cone, negative at v
};

/// Membership of v in the cone (so in its double dual); when outside,
/// produces a separating functional witnessing v not in C**.
ConeMembership cone_dual_check(const ConvexBody& cone, const Eigen::VectorXd& v);

}  // namespace dyana
