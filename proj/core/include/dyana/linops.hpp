#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyana/linalg.hpp"
#include "dyana/rng.hpp"

namespace dyana {

/// p-norm on C^n, p in [1,infinity]. Throws for p < 1.
double vector_pnorm(const Vector& v, double p);

/// Conjugate exponent; maps 1 <-> infinity, 2 <-> 2.
double conjugate_exponent(double p);

/// Vector v with |sum_j w_j v_j| = |w|_q |v|_p (q conjugate to p):
/// v_j = conj(w_j)|w_j|^{q-2} for p > 1, a single-coordinate phase for p = 1.
Vector dual_extremal(const Vector& w, double p);

struct OperatorNormResult {
  double value = 0.0;
  bool exact = false;
};

/// Operator norm from l^{p_in} to l^{p_out}. Exact for p_in = 1 (any
/// p_out), (inf,inf) and (2,2); otherwise a certified lower bound computed
/// by projected ascent with `budget` random restarts.
OperatorNormResult operator_norm(const Matrix& A, double p_in, double p_out,
                                 int budget = 8, Rng* rng = nullptr);

/// Truncated Neumann series for (I - A)^{-1}; requires |A|_2 < 1.
Matrix neumann_inverse(const Matrix& A, double tol);

struct SpectralRadiusReport {
  double gelfand = 0.0;       // |A^n|_2^{1/n} by scaled repeated squaring
  double eigen_radius = 0.0;  // max |eigenvalue| by dense solve
};

SpectralRadiusReport spectral_radius(const Matrix& A, int n_max);

Matrix adjoint(const Matrix& A);

struct CStarReport {
  double norm_ata = 0.0;   // |A* A|_2
  double norm_sq = 0.0;    // |A|_2^2
};

CStarReport c_star_report(const Matrix& A);

struct SchmidtDecomposition {
  std::vector<Vector> u;  // orthonormal basis of the domain
  std::vector<Vector> w;  // orthogonal images, possibly zero
};

/// A v = sum <v,u_j> w_j with u_j the eigenvectors of A*A and w_j = A u_j.
SchmidtDecomposition schmidt_decompose(const Matrix& A);

double hilbert_schmidt_norm(const Matrix& A);

/// Subspace of C^n given by a linearly independent basis (may be empty).
struct Subspace {
  int ambient = 0;
  std::vector<Vector> basis;

  Subspace(int ambient_dim, std::vector<Vector> basis_vectors);
  int dim() const { return static_cast<int>(basis.size()); }
  Matrix orthonormal() const;  // ambient x dim, orthonormal columns
};

Matrix orthogonal_projection(const Subspace& S);

/// Common orthonormal eigenbasis (columns) for a commuting family of normal
/// matrices. Throws if the inputs do not commute or are not normal.
Matrix simultaneous_diagonalize(const std::vector<Matrix>& family, Rng& rng,
                                double tol = 1e-10);

/// Points <A v, v> for random unit vectors v.
std::vector<cd> numerical_range(const Matrix& A, int sample_count, Rng& rng);

/// inf over w in W of |v + w|_p. Exact for p = 2.
double quotient_norm(const Subspace& W, const Vector& v, double p,
                     int budget = 4, Rng* rng = nullptr);

/// Norm-one Hahn-Banach extension of the functional on W with the given
/// basis values, with respect to |.|_p. Acts bilinearly: lambda(v) =
/// sum_j lambda_j v_j. Ambient dimension capped at 8.
Vector hahn_banach_extend(const Subspace& W, const std::vector<cd>& mu,
                          double p, int budget, Rng& rng);

}  // namespace dyana
