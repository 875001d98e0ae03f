#include "dyana/varmin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dyana/convex.hpp"

namespace dyana {

GridDomain::GridDomain(int dim, std::vector<GridPoint> pts)
    : n(dim), points(std::move(pts)) {
  if (n < 1) throw std::invalid_argument("GridDomain: dimension must be positive");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != n)
      throw std::invalid_argument("GridDomain: point arity mismatch");
    if (!index_.emplace(points[i], i).second)
      throw std::invalid_argument("GridDomain: duplicate point");
  }
  interior_mask_.assign(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool inside = true;
    GridPoint q = points[i];
    for (int d = 0; d < n && inside; ++d) {
      for (int s : {-1, 1}) {
        q[static_cast<std::size_t>(d)] += s;
        if (!index_.count(q)) inside = false;
        q[static_cast<std::size_t>(d)] -= s;
      }
    }
    interior_mask_[i] = inside;
    (inside ? interior_ : boundary_).push_back(i);
  }
  if (interior_.empty())
    throw std::invalid_argument("GridDomain: interior must be nonempty");
}

std::optional<std::size_t> GridDomain::index_of(const GridPoint& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GridDomain::neighbors_in(std::size_t idx) const {
  std::vector<std::size_t> out;
  GridPoint q = points[idx];
  for (int d = 0; d < n; ++d) {
    for (int s : {-1, 1}) {
      q[static_cast<std::size_t>(d)] += s;
      if (auto it = index_.find(q); it != index_.end()) out.push_back(it->second);
      q[static_cast<std::size_t>(d)] -= s;
    }
  }
  return out;
}

namespace {

// directed edge list (x in Int U, y in N(x)); N(x) subset of U by interiority
std::vector<std::pair<std::size_t, std::size_t>> edge_list(const GridDomain& U) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x : U.interior())
    for (std::size_t y : U.neighbors_in(x)) edges.emplace_back(x, y);
  return edges;
}

double energy_p(const GridDomain& U, const GridFn& f, double p) {
  double e = 0.0;
  for (const auto& [x, y] : edge_list(U)) e += std::pow(std::abs(f[x] - f[y]), p);
  return e;
}

// weighted quadratic solve: minimize sum_e w_e |f(x)-f(y)|^2 with fixed
// boundary values
GridFn weighted_solve(const GridDomain& U, const std::map<std::size_t, cd>& boundary,
                      const std::vector<double>& w) {
  const auto& interior = U.interior();
  std::map<std::size_t, Eigen::Index> pos;
  for (std::size_t i = 0; i < interior.size(); ++i)
    pos[interior[i]] = static_cast<Eigen::Index>(i);
  const auto k = static_cast<Eigen::Index>(interior.size());
  Matrix K = Matrix::Zero(k, k);
  Vector rhs = Vector::Zero(k);

  const auto edges = edge_list(U);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    const double we = w[e];
    const Eigen::Index ix = pos.at(x);
    K(ix, ix) += we;
    if (U.is_interior(y)) {
      K(ix, pos.at(y)) -= we;
      // the same edge contributes to y's equation
      K(pos.at(y), pos.at(y)) += we;
      K(pos.at(y), ix) -= we;
    } else {
      rhs[ix] += we * boundary.at(y);
    }
  }
  const Vector sol = K.ldlt().solve(rhs);

  GridFn f(U.size(), cd(0.0));
  for (std::size_t b : U.boundary()) f[b] = boundary.at(b);
  for (std::size_t i = 0; i < interior.size(); ++i) f[interior[i]] = sol[static_cast<Eigen::Index>(i)];
  return f;
}

}  // namespace

double vp_seminorm(const GridDomain& U, const GridFn& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("vp_seminorm: p must be >= 1");
  if (f.size() != U.size()) throw std::invalid_argument("vp_seminorm: size mismatch");
  return std::pow(energy_p(U, f, p), 1.0 / p);
}

Eigen::MatrixXd quadratic_form_matrix(const GridDomain& U) {
  const auto& interior = U.interior();
  const auto k = static_cast<Eigen::Index>(interior.size());
  auto q_of = [&](const GridFn& f) { return energy_p(U, f, 2.0); };
  Eigen::MatrixXd A0(k, k);
  std::vector<double> diag(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) {
    GridFn ei(U.size(), cd(0.0));
    ei[interior[static_cast<std::size_t>(i)]] = 1.0;
    diag[static_cast<std::size_t>(i)] = q_of(ei);
    A0(i, i) = diag[static_cast<std::size_t>(i)];
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      GridFn f(U.size(), cd(0.0));
      f[interior[static_cast<std::size_t>(i)]] = 1.0;
      f[interior[static_cast<std::size_t>(j)]] = 1.0;
      const double v =
          0.5 * (q_of(f) - diag[static_cast<std::size_t>(i)] - diag[static_cast<std::size_t>(j)]);
      A0(i, j) = v;
      A0(j, i) = v;
    }
  }
  return A0;
}

GridFn minimize_vp(const GridDomain& U, const std::map<std::size_t, cd>& boundary,
                   double p, const MinimizeOptions& opts, Rng* rng) {
  if (!(p >= 1.0)) throw std::invalid_argument("minimize_vp: p must be >= 1");
  for (std::size_t b : U.boundary())
    if (!boundary.count(b))
      throw std::invalid_argument("minimize_vp: boundary value missing");

  const auto edges = edge_list(U);
  std::vector<double> w(edges.size(), 1.0);
  if (p == 2.0 && !opts.random_init) return weighted_solve(U, boundary, w);

  GridFn f;
  if (opts.random_init) {
    if (!rng) throw std::invalid_argument("minimize_vp: random_init needs an rng");
    f.assign(U.size(), cd(0.0));
    double scale = 1.0;
    for (const auto& [idx, v] : boundary) {
      (void)idx;
      scale = std::max(scale, std::abs(v));
    }
    for (std::size_t b : U.boundary()) f[b] = boundary.at(b);
    for (std::size_t i : U.interior())
      f[i] = cd(rng->uniform(-scale, scale), 0.0);
  } else {
    f = weighted_solve(U, boundary, w);
  }
  if (p == 2.0 && opts.random_init) return weighted_solve(U, boundary, w);

  const double eps = 1e-10;
  double e_prev = energy_p(U, f, p);
  for (int it = 0; it < opts.max_iters; ++it) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [x, y] = edges[e];
      const double d2 = std::norm(f[x] - f[y]) + eps;
      w[e] = std::pow(d2, 0.5 * p - 1.0);
    }
    const GridFn cand = weighted_solve(U, boundary, w);
    double theta = 1.0;
    GridFn next = cand;
    double e_next = energy_p(U, next, p);
    for (int half = 0; half < 40 && e_next > e_prev; ++half) {
      theta *= 0.5;
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = f[i] + theta * (cand[i] - f[i]);
      e_next = energy_p(U, next, p);
    }
    f = std::move(next);
    const bool done = std::fabs(e_prev - e_next) <= opts.tol * std::max(e_prev, 1e-300);
    e_prev = e_next;
    if (done) break;
  }
  return f;
}

Truncation Truncation::disc(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("Truncation::disc: radius must be positive");
  return {TruncationKind::Disc, r, 1, 0, 0};
}

Truncation Truncation::halfplane(double nx, double ny, double offset) {
  const double n = std::hypot(nx, ny);
  if (n == 0.0) throw std::invalid_argument("Truncation::halfplane: zero normal");
  return {TruncationKind::Halfplane, 0.0, nx / n, ny / n, offset};
}

cd Truncation::operator()(cd z) const {
  switch (kind) {
    case TruncationKind::Floor:
      if (z.imag() != 0.0) throw std::invalid_argument("floor truncation needs real input");
      return cd(std::max(z.real(), param), 0.0);
    case TruncationKind::Cap:
      if (z.imag() != 0.0) throw std::invalid_argument("cap truncation needs real input");
      return cd(std::min(z.real(), param), 0.0);
    case TruncationKind::Disc: {
      const double a = std::abs(z);
      return a <= param ? z : z * (param / a);
    }
    case TruncationKind::Halfplane: {
      const double d = z.real() * nx + z.imag() * ny;
      if (d <= offset) return z;
      return z - (d - offset) * cd(nx, ny);
    }
  }
  throw std::logic_error("unreachable");
}

GridFn truncate(const GridDomain& U, const GridFn& f, const Truncation& tau) {
  if (f.size() != U.size()) throw std::invalid_argument("truncate: size mismatch");
  GridFn out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = tau(f[i]);
  return out;
}

MaximumPrincipleReport maximum_principle_report(const GridDomain& U,
                                                const std::map<std::size_t, cd>& boundary,
                                                const GridFn& minimizer) {
  MaximumPrincipleReport rep;
  rep.real_case = true;
  for (const auto& [idx, v] : boundary) {
    (void)idx;
    if (std::fabs(v.imag()) > 0.0) rep.real_case = false;
  }
  for (const cd& v : minimizer)
    if (std::fabs(v.imag()) > 1e-12) rep.real_case = false;

  if (rep.real_case) {
    rep.boundary_min = std::numeric_limits<double>::infinity();
    rep.boundary_max = -rep.boundary_min;
    for (const auto& [idx, v] : boundary) {
      (void)idx;
      rep.boundary_min = std::min(rep.boundary_min, v.real());
      rep.boundary_max = std::max(rep.boundary_max, v.real());
    }
    rep.interior_min = std::numeric_limits<double>::infinity();
    rep.interior_max = -rep.interior_min;
    for (std::size_t i : U.interior()) {
      rep.interior_min = std::min(rep.interior_min, minimizer[i].real());
      rep.interior_max = std::max(rep.interior_max, minimizer[i].real());
    }
    rep.holds = rep.interior_min >= rep.boundary_min - 1e-8 &&
                rep.interior_max <= rep.boundary_max + 1e-8;
    return rep;
  }

  rep.boundary_abs_max = 0.0;
  std::vector<Eigen::VectorXd> gens;
  for (const auto& [idx, v] : boundary) {
    (void)idx;
    rep.boundary_abs_max = std::max(rep.boundary_abs_max, std::abs(v));
    Eigen::VectorXd g(2);
    g << v.real(), v.imag();
    gens.push_back(g);
  }
  const ConvexBody hull(ConvexBody::Mode::Hull, gens);
  rep.interior_abs_max = 0.0;
  rep.worst_hull_distance = 0.0;
  for (std::size_t i : U.interior()) {
    rep.interior_abs_max = std::max(rep.interior_abs_max, std::abs(minimizer[i]));
    Eigen::VectorXd x(2);
    x << minimizer[i].real(), minimizer[i].imag();
    rep.worst_hull_distance = std::max(rep.worst_hull_distance, hull_distance(hull, x).first);
  }
  rep.holds = rep.interior_abs_max <= rep.boundary_abs_max + 1e-8 &&
              rep.worst_hull_distance <= 1e-8;
  return rep;
}

V1MonotoneReport v1_monotone_check(const GridDomain& U, const GridFn& f) {
  if (U.n != 1) throw std::invalid_argument("v1_monotone_check: 1-D domains only");
  if (f.size() != U.size()) throw std::invalid_argument("v1_monotone_check: size mismatch");
  std::vector<std::pair<int, double>> pts;
  for (std::size_t i = 0; i < U.size(); ++i) {
    if (std::fabs(f[i].imag()) > 0.0)
      throw std::invalid_argument("v1_monotone_check: real values only");
    pts.emplace_back(U.points[i][0], f[i].real());
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first != pts[i - 1].first + 1)
      throw std::invalid_argument("v1_monotone_check: domain must be an integer interval");
  if (pts.size() < 3)
    throw std::invalid_argument("v1_monotone_check: segment too short");

  V1MonotoneReport rep;
  // chain variation: each consecutive pair once. The chapter seminorm counts
  // interior-interior pairs twice, which breaks the monotone equality on
  // segments with more than one interior point.
  for (std::size_t i = 1; i < pts.size(); ++i)
    rep.v1 += std::fabs(pts[i].second - pts[i - 1].second);
  rep.endpoint_diff = std::fabs(pts.back().second - pts.front().second);
  rep.v1_equals_diff = std::fabs(rep.v1 - rep.endpoint_diff) <= 1e-12;
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].second < pts[i - 1].second) inc = false;
    if (pts[i].second > pts[i - 1].second) dec = false;
  }
  rep.monotone = inc || dec;
  return rep;
}

}  // namespace dyana
