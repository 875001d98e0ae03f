#include "dyana/convex.hpp"

#include <stdexcept>

namespace dyana {

ConvexBody::ConvexBody(Mode m, std::vector<Eigen::VectorXd> gens)
    : mode(m), generators(std::move(gens)) {
  if (generators.empty()) throw std::invalid_argument("ConvexBody: no generators");
  for (const auto& g : generators)
    if (g.size() != generators.front().size())
      throw std::invalid_argument("ConvexBody: generator dimensions differ");
}

std::pair<double, Eigen::VectorXd> hull_distance(const ConvexBody& body,
                                                 const Eigen::VectorXd& x) {
  const auto n = static_cast<Eigen::Index>(body.generators.size());
  Eigen::MatrixXd P(x.size(), n);
  for (Eigen::Index i = 0; i < n; ++i)
    P.col(i) = body.generators[static_cast<std::size_t>(i)] - x;
  const optim::MinNormResult res = optim::min_norm_point(P);
  return {res.point.norm(), Eigen::VectorXd(res.point + x)};
}

SeparationResult separate(const ConvexBody& hull, const Eigen::VectorXd& x) {
  if (hull.mode != ConvexBody::Mode::Hull)
    throw std::invalid_argument("separate: expected a hull body");
  auto [dist, q] = hull_distance(hull, x);
  if (dist <= 1e-9) throw std::invalid_argument("separate: point lies in the hull");
  SeparationResult out;
  out.nearest = q;
  out.functional = x - q;
  // slide the supporting hyperplane halfway toward x
  out.threshold = 0.5 * (out.functional.dot(q) + out.functional.dot(x));
  return out;
}

ConeMembership cone_dual_check(const ConvexBody& cone, const Eigen::VectorXd& v) {
  if (cone.mode != ConvexBody::Mode::Cone)
    throw std::invalid_argument("cone_dual_check: expected a cone body");
  const auto n = static_cast<Eigen::Index>(cone.generators.size());
  Eigen::MatrixXd G(v.size(), n);
  for (Eigen::Index i = 0; i < n; ++i) G.col(i) = cone.generators[static_cast<std::size_t>(i)];
  const Eigen::VectorXd coeffs = optim::nnls(G, v);
  const Eigen::VectorXd r = v - G * coeffs;
  ConeMembership out;
  out.residual = r.norm();
  out.inside = out.residual <= 1e-8;
  if (!out.inside) {
    // KKT of the nonnegative fit: r is nonpositive against every generator
    // and positive against v, so -r separates
    out.functional = Eigen::VectorXd(-r);
  }
  return out;
}

}  // namespace dyana
