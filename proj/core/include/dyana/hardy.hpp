#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyana/dyadic.hpp"
#include "dyana/real_interval.hpp"

namespace dyana {

/// Dyadic maximal function M(f) = sup_k |E_k(f)|, truncated at l if given.
DyadicStepFn maximal(const DyadicStepFn& f, std::optional<int> l = std::nullopt);

struct LevelSetReport {
  double lambda = 0.0;
  std::vector<DyadicInterval> intervals;  // maximal, pairwise disjoint
  double measure = 0.0;
  double bound = 0.0;          // (1/lambda) * integral of |f|
  double refined_bound = 0.0;  // (1/lambda) * integral of |f| over {M > lambda}
};

/// Maximal disjoint dyadic intervals with |avg f| > lambda; their union is
/// exactly {M(f) > lambda}.
LevelSetReport maximal_level_set(const DyadicStepFn& f, double lambda);

/// (integral of M(f)^p, (2^p p/(p-1)) * integral of |f|^p), p > 1.
std::pair<double, double> lp_maximal_report(const DyadicStepFn& f, double p);

/// Square function S(f) = (|E_0 f|^2 + sum |E_j f - E_{j-1} f|^2)^{1/2},
/// truncated at l if given.
DyadicStepFn square(const DyadicStepFn& f, std::optional<int> l = std::nullopt);

struct FlattenResult {
  DyadicStepFn flattened;                 // f_lambda resp. g_lambda
  std::vector<DyadicInterval> intervals;  // the maximal-disjoint parent family
  bool empty_family = false;              // threshold family was empty
  bool degenerate_root = false;           // [0,1) itself was selected
};

/// Stopping-time flattening driven by averages: the maximal dyadic intervals
/// with |avg f| > lambda, their parents, and the averaged replacement.
FlattenResult cz_flatten_m(const DyadicStepFn& f, double lambda);

/// Stopping-time flattening driven by the square function level set.
FlattenResult cz_flatten_s(const DyadicStepFn& f, double lambda);

/// Closed-form evaluation of the layer-cake integral
/// int_0^inf p lambda^{p-1} |{g > lambda}| dlambda for nonnegative g;
/// equals the integral of g^p.
double distribution_integral(const DyadicStepFn& g, double p);

struct P4Decomposition {
  double s4 = 0.0;  // integral of S(f)^4
  double a = 0.0;   // diagonal part
  double b = 0.0;   // cross part; s4 = a + 2 b
};

P4Decomposition p4_decomposition(const DyadicStepFn& f);

struct DualityPairing {
  cd product_integral = 0.0;   // integral of f1 f2
  cd martingale_sum = 0.0;     // sum of paired martingale terms
  double s_pairing = 0.0;      // integral of S(f1) S(f2)
};

DualityPairing duality_pairing(const DyadicStepFn& f1, const DyadicStepFn& f2);

/// Subfamily with the same union in which no point is covered more than
/// twice.
std::vector<RealInterval> interval_prune(std::vector<RealInterval> intervals);

struct WeakTypeSReport {
  double level_measure = 0.0;    // |{S(f) > lambda}|
  double bound = 0.0;            // (3/lambda) * integral of |f|
  double modified_measure = 0.0; // |{M(f) > 2 lambda}|
  double modified_bound = 0.0;   // (1/lambda) * integral of |f| over {|f| > lambda}
};

WeakTypeSReport weak_type_s_report(const DyadicStepFn& f, double lambda);

}  // namespace dyana
