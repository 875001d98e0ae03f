#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dyana/linalg.hpp"
#include "dyana/rng.hpp"

namespace dyana {

using GridPoint = std::vector<int>;

/// Finite U in Z^n with the interior/boundary split Int U = {x : all 2n
/// neighbors lie in U}, boundary = U \ Int U. Int U must be nonempty.
struct GridDomain {
  int n = 1;
  std::vector<GridPoint> points;

  GridDomain(int dim, std::vector<GridPoint> pts);

  std::size_t size() const { return points.size(); }
  const std::vector<std::size_t>& interior() const { return interior_; }
  const std::vector<std::size_t>& boundary() const { return boundary_; }
  bool is_interior(std::size_t idx) const { return interior_mask_[idx]; }
  std::optional<std::size_t> index_of(const GridPoint& p) const;
  /// indices of the neighbors of points[idx] that lie in U
  std::vector<std::size_t> neighbors_in(std::size_t idx) const;

private:
  std::map<GridPoint, std::size_t> index_;
  std::vector<std::size_t> interior_;
  std::vector<std::size_t> boundary_;
  std::vector<bool> interior_mask_;
};

using GridFn = std::vector<cd>;  // one value per domain point, domain order

double vp_seminorm(const GridDomain& U, const GridFn& f, double p);

/// Real symmetric PSD matrix A0 on the interior (domain interior order)
/// with <A0 f, f> = V_2(f)^2 for f vanishing on the boundary, obtained by
/// polarization.
Eigen::MatrixXd quadratic_form_matrix(const GridDomain& U);

struct MinimizeOptions {
  double tol = 1e-10;        // relative energy tolerance
  bool random_init = false;  // random interior start instead of the p=2 solve
  int max_iters = 4000;
};

/// Minimize V_p over functions agreeing with the boundary data
/// (index -> value on every boundary point). p = 2 is a direct linear
/// solve; other p use damped iteratively-reweighted least squares.
GridFn minimize_vp(const GridDomain& U, const std::map<std::size_t, cd>& boundary,
                   double p, const MinimizeOptions& opts = {}, Rng* rng = nullptr);

enum class TruncationKind { Floor, Cap, Disc, Halfplane };

struct Truncation {
  TruncationKind kind = TruncationKind::Floor;
  double param = 0.0;            // c, d, or r
  double nx = 1.0, ny = 0.0;     // half-plane unit normal
  double offset = 0.0;           // half-plane {z : Re(conj(nu) z) <= offset}

  static Truncation floor_at(double c) { return {TruncationKind::Floor, c, 1, 0, 0}; }
  static Truncation cap_at(double d) { return {TruncationKind::Cap, d, 1, 0, 0}; }
  static Truncation disc(double r);
  static Truncation halfplane(double nx, double ny, double offset);

  cd operator()(cd z) const;
};

GridFn truncate(const GridDomain& U, const GridFn& f, const Truncation& tau);

struct MaximumPrincipleReport {
  bool real_case = true;
  double boundary_min = 0.0, boundary_max = 0.0;  // real case
  double interior_min = 0.0, interior_max = 0.0;
  double boundary_abs_max = 0.0, interior_abs_max = 0.0;  // complex case
  double worst_hull_distance = 0.0;  // distance of f* values to hull of b-values
  bool holds = false;
};

MaximumPrincipleReport maximum_principle_report(const GridDomain& U,
                                                const std::map<std::size_t, cd>& boundary,
                                                const GridFn& minimizer);

struct V1MonotoneReport {
  double v1 = 0.0;
  double endpoint_diff = 0.0;
  bool v1_equals_diff = false;
  bool monotone = false;
};

/// 1-D segment check: V_1(f) = |f(b) - f(a)| exactly when f is monotone.
V1MonotoneReport v1_monotone_check(const GridDomain& U, const GridFn& f);

}  // namespace dyana
