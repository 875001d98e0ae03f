#pragma once

#include <cstdint>
#include <vector>

#include "dyana/dyadic.hpp"
#include "dyana/linalg.hpp"
#include "dyana/rng.hpp"

namespace dyana {

/// Cyclic group Z_n under addition, or {-1,1}^l under coordinatewise
/// multiplication. Elements are indexed 0..order-1; index 0 is the identity.
/// For signs(l), coordinate i of element e is (-1)^(bit i of e).
struct FiniteAbelianGroup {
  enum class Kind { Cyclic, Signs };
  Kind kind = Kind::Cyclic;
  int n = 1;  // modulus for cyclic, tuple length for signs

  static FiniteAbelianGroup cyclic(int n);
  static FiniteAbelianGroup signs(int l);

  std::size_t order() const;
  std::size_t op(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t identity() const { return 0; }
};

using GroupFunction = std::vector<cd>;  // one value per element

/// j-th Rademacher function at resolution m >= j >= 1.
DyadicStepFn rademacher(int j, int m);

/// 1 if every index occurs an even number of times, otherwise 0.
int rademacher_product_integral(const std::vector<int>& indices);

struct KhintchineReport {
  double p_norm = 0.0;  // ||sum alpha_j r_j||_p, exact quadrature
  double l2 = 0.0;      // (sum alpha_j^2)^{1/2}
  double ratio = 0.0;
};

KhintchineReport khintchine_report(const std::vector<double>& alpha, double p);

struct LacunaryReport {
  double fourth_moment = 0.0;  // exact combinatorial value of int |phi|^4
  double bound = 0.0;          // 2 (sum |c_j|^2)^2
};

/// phi(x) = sum_j c_j exp(2 pi i 2^j x); the fourth moment is summed over
/// quadruples with 2^{j1}+2^{j2} = 2^{j3}+2^{j4}.
LacunaryReport lacunary_fourth(const std::vector<cd>& c);

enum class ConvolutionSide { Left, Right };

/// Matrix of f -> sum_h a(h) f(h^{-1} g) (left) or f -> sum_h a(h) f(g h)
/// (right) acting on functions on G.
Matrix group_convolution(const FiniteAbelianGroup& G, const GroupFunction& a,
                         ConvolutionSide side);

/// All multiplicative characters; count = order(G), pairwise orthogonal.
std::vector<GroupFunction> characters(const FiniteAbelianGroup& G);

/// max over characters of |sum_h a(h) chi(h^{-1})| = l2 operator norm of S_a.
double convolution_norm2(const FiniteAbelianGroup& G, const GroupFunction& a);

struct MomentReport {
  double gaussian = 0.0;        // closed form via the Gamma function
  double sphere = 0.0;          // Monte Carlo estimate of avg |x_1|^p on S^{n-1}
  double sphere_stderr = 0.0;
  double rotated = 0.0;         // same statistic for |<x,u>|^p, random unit u
  double rotated_stderr = 0.0;
};

MomentReport linear_moment_constants(int n, double p, std::size_t samples, Rng& rng);

}  // namespace dyana
