#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace dyana {

using cd = std::complex<double>;

/// Half-open interval [j*2^-k, (j+1)*2^-k) inside [0,1); j+1 <= 2^k.
struct DyadicInterval {
  int k = 0;
  std::uint64_t j = 0;

  double length() const { return std::ldexp(1.0, -k); }
  double left() const { return static_cast<double>(j) * length(); }
  double right() const { return static_cast<double>(j + 1) * length(); }

  DyadicInterval parent() const;       // k must be positive
  DyadicInterval left_half() const { return {k + 1, 2 * j}; }
  DyadicInterval right_half() const { return {k + 1, 2 * j + 1}; }

  bool contains(const DyadicInterval& other) const;
  bool contains(double x) const { return x >= left() && x < right(); }

  auto operator<=>(const DyadicInterval&) const = default;
};

/// Any two dyadic intervals are nested or disjoint.
enum class IntervalRelation { Equal, FirstInsideSecond, SecondInsideFirst, Disjoint };
IntervalRelation compare(const DyadicInterval& a, const DyadicInterval& b);

/// The 2^k generation-k intervals, sorted left to right.
std::vector<DyadicInterval> dyadic_partition(int k);

/// Inclusion-maximal elements of a nonempty collection; pairwise disjoint,
/// same union. Throws std::invalid_argument on empty input.
std::vector<DyadicInterval> maximal_disjoint(std::vector<DyadicInterval> collection);

/// Function on [0,1) constant on the generation-m intervals.
class DyadicStepFn {
public:
  DyadicStepFn() : m_(0), values_(1, cd(0.0)) {}
  DyadicStepFn(int m, std::vector<cd> values);

  static DyadicStepFn constant(cd c) { return DyadicStepFn(0, {c}); }
  static DyadicStepFn indicator(const DyadicInterval& I, int m);
  static DyadicStepFn from_real(int m, const std::vector<double>& vals);

  int resolution() const { return m_; }
  std::size_t cells() const { return values_.size(); }
  const std::vector<cd>& values() const { return values_; }
  cd operator[](std::size_t i) const { return values_[i]; }
  cd value_at(double x) const;

  DyadicStepFn refined(int m2) const;  // m2 >= m; lossless
  cd integral() const;
  cd average_on(const DyadicInterval& I) const;  // exact
  bool is_real(double tol = 0.0) const;

  DyadicStepFn abs() const;                 // pointwise modulus
  DyadicStepFn pow_abs(double p) const;     // |f|^p

  DyadicStepFn& operator+=(const DyadicStepFn& g);
  DyadicStepFn& operator-=(const DyadicStepFn& g);
  DyadicStepFn& operator*=(const DyadicStepFn& g);
  DyadicStepFn& operator*=(cd c);

  friend DyadicStepFn operator+(DyadicStepFn f, const DyadicStepFn& g) { return f += g; }
  friend DyadicStepFn operator-(DyadicStepFn f, const DyadicStepFn& g) { return f -= g; }
  friend DyadicStepFn operator*(DyadicStepFn f, const DyadicStepFn& g) { return f *= g; }
  friend DyadicStepFn operator*(cd c, DyadicStepFn f) { return f *= c; }

private:
  int m_;
  std::vector<cd> values_;
};

/// Refine both operands to the finer resolution (lossless).
void align(DyadicStepFn& f, DyadicStepFn& g);

/// (Integral of |f|^p)^(1/p); sup norm for p = infinity. Throws for p <= 0.
double lp_norm(const DyadicStepFn& f, double p);

/// Average of f over the generation-k interval containing each point.
DyadicStepFn expectation(const DyadicStepFn& f, int k);

/// h0 == 1 represented at resolution m.
DyadicStepFn haar_unit(int m = 0);

/// Two-step Haar function for interval I: -|I|^{-1/2} on the left half,
/// +|I|^{-1/2} on the right, 0 elsewhere. Requires m >= I.k + 1.
DyadicStepFn haar(const DyadicInterval& I, int m);

struct HaarExpansion {
  cd c0 = 0.0;                            // coefficient of h0
  std::map<DyadicInterval, cd> coeffs;    // generations 0 .. m-1
  int resolution = 0;
};

HaarExpansion haar_analyze(const DyadicStepFn& f);
DyadicStepFn haar_synthesize(const HaarExpansion& e, int m);

}  // namespace dyana
