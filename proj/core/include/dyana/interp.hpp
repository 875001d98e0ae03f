#pragma once

#include <optional>
#include <vector>

#include "dyana/dyadic.hpp"
#include "dyana/inequalities.hpp"
#include "dyana/linalg.hpp"
#include "dyana/rng.hpp"

namespace dyana {

struct MpResult {
  double value = 0.0;
  bool exact = false;
};

/// Bilinear-form bound M_p = sup |A(x,y)| over unit p- and p'-balls. Exact
/// at p in {1,2,infinity} (Schur formulas / singular value); otherwise a
/// lower bound from the alternating extremal iteration with `budget`
/// random restarts. `real_mode` restricts the vectors to real entries.
MpResult mp_norm(const Matrix& a, double p, int budget = 8, Rng* rng = nullptr,
                 bool real_mode = false);

struct ExtremalPair {
  Vector x, y;
  double value = 0.0;        // |A(x,y)| at the pair
  double mu = 0.0, nu = 0.0; // stationarity constants, both near M_r
  double residual_mu = 0.0;  // worst violation of |(a x)_j| = mu |y_j|^{r'-1}
  double residual_nu = 0.0;  // worst violation of |(y a)_k| = nu |x_k|^{r-1}
};

ExtremalPair extremal_pair(const Matrix& a, double r, int budget, Rng& rng);

struct RieszReport {
  double m_r_lower = 0.0;  // certified lower bound for M_r
  bool m_r_exact = false;
  double m_p = 0.0, m_q = 0.0;
  double endpoint_product = 0.0;  // M_p^t M_q^{1-t}
  double r = 0.0;
};

/// Log-convexity check M_r <= M_p^t M_q^{1-t}; endpoints should lie in
/// {1,2,infinity} so both endpoint norms are exact.
RieszReport riesz_convexity_report(const Matrix& a, double p, double q, double t,
                                   int budget = 8, Rng* rng = nullptr);

struct MidpointConvexityReport {
  bool hypothesis_holds = false;  // every pair admits some interior point
  bool convex = false;            // full difference-quotient certificate
  bool upgraded = false;          // hypothesis implies convexity on this grid
  std::optional<std::array<double, 3>> violation;
};

MidpointConvexityReport midpoint_convexity_upgrade(const SampledFunction& f);

struct StepOperatorInterpReport {
  double n_p = 0.0, n_q = 0.0;  // endpoint operator norms (integral weighting)
  double r = 0.0;
  double bound = 0.0;           // N_p^t N_q^{1-t}
  double worst_ratio = 0.0;     // max over trials of |Tf|_r / |f|_r
  bool holds = false;
};

/// T acts on the 2^m values of resolution-m step functions; endpoint norms
/// use exact cases p,q in {1,2,infinity}.
StepOperatorInterpReport stepfn_operator_interp(const Matrix& T, double p, double q,
                                                double t, int trials, Rng& rng);

struct MaximalLinearization {
  std::vector<int> selector;     // level alpha(x) per finest cell, smallest on ties
  DyadicStepFn reconstruction;   // |E_{alpha(x)}(f)(x)|, equals M(f)
};

MaximalLinearization linearize_maximal(const DyadicStepFn& f);

/// Unit-l2 selector pairing that reproduces S(f) by Cauchy-Schwarz equality.
DyadicStepFn linearize_square(const DyadicStepFn& f);

}  // namespace dyana
