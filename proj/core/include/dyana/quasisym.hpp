#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "dyana/real_interval.hpp"
#include "dyana/rng.hpp"

namespace dyana {

/// Level-by-level Cantor construction K(r): depth-j stage has 2^j disjoint
/// closed intervals of length ((1-r)/2)^j at the ends of their parents.
struct CantorSystem {
  double r = 1.0 / 3.0;
  int depth = 0;
  std::vector<std::vector<RealInterval>> levels;  // levels[j], j = 0..depth
};

/// The 2^j intervals of the depth-j stage of K(r).
std::vector<RealInterval> cantor_level(double r, int j);

/// depth <= 24 keeps endpoint spacing above rounding noise
CantorSystem build_cantor(double r, int depth);

/// Address = string of '0'/'1' (left/right descent), length <= depth.
RealInterval addressed_interval(const CantorSystem& sys, const std::string& address);

/// Left endpoint of the addressed interval; always a point of K(r).
double point_of_address(const CantorSystem& sys, const std::string& address);

enum class IntervalEnd { Left, Right };

/// Address-preserving correspondence K(r_src) -> K(r_dst); returns the
/// chosen endpoint of the addressed interval in both systems.
std::pair<double, double> h_map(double r_src, double r_dst, const std::string& address,
                                IntervalEnd end, int depth_cap = 24);

struct TwoFifthsMap {
  std::vector<RealInterval> source_intervals;  // merged middle-thirds stage E_hat_l
  std::vector<RealInterval> target_intervals;  // two-fifths stage F_l
  std::vector<std::pair<double, double>> endpoint_map;  // source -> target
};

/// The merged-step description of the middle-thirds set (children [0,1/3],
/// [2/3,7/9], [8/9,1] in each parent) matched with the two-fifths set
/// (children [0,1/5], [2/5,3/5], [4/5,1]), 3^l intervals each.
TwoFifthsMap two_fifths_map(int l);

/// Monotone modulus table on quarter-decade buckets of t.
struct ModulusTable {
  std::vector<double> t;    // bucket representatives (upper edges), increasing
  std::vector<double> eta;  // regularized values, nondecreasing

  double eval(double tt) const;  // step interpolation, +inf above range
};

/// Empirical quasisymmetry modulus of the map source[i] -> target[i]:
/// per-bucket sup of image distance ratios over sampled triples, then the
/// monotone regularization inf{eta(s) : s >= t}.
ModulusTable eta_empirical(const std::vector<Eigen::VectorXd>& source,
                           const std::vector<Eigen::VectorXd>& target,
                           std::size_t triple_budget, Rng& rng);

/// Modulus of the inverse map, alpha(t) = 1/eta^{-1}(1/t), via monotone
/// table inversion of eta(t) + eps t.
ModulusTable eta_inverse(const ModulusTable& table, double eps = 1e-9);

struct PowerEnvelope {
  double C = 0.0;
  double a1 = 0.0;  // exponent for t <= 1
  double a2 = 0.0;  // exponent for t >= 1

  double eval(double t) const;
};

/// Envelope C t^{a1} (t<=1), C t^{a2} (t>=1) dominating the iterated step
/// bounds 2^{-k} at t = t1^k and L^k at t = 2^k: a1 = ln 2 / ln(1/t1),
/// a2 = log2 L, C = max(2, L).
PowerEnvelope power_envelope(double t1, double L);

/// f(x) = |x|^{b-1} x with f(0) = 0.
Eigen::VectorXd radial_map(double b, const Eigen::VectorXd& x);

/// Sorted endpoints of the depth-level intervals of the system.
std::vector<double> endpoints_at_depth(const CantorSystem& sys);

}  // namespace dyana
