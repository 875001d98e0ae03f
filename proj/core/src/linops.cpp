#include "dyana/linops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dyana/optim.hpp"

namespace dyana {

namespace {

bool is_inf(double p) { return std::isinf(p); }

Vector realvec_to_complex(const optim::RealVec& x) {
  const Eigen::Index n = x.size() / 2;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = cd(x[i], x[n + i]);
  return v;
}

optim::RealVec complex_to_realvec(const Vector& v) {
  optim::RealVec x(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    x[i] = v[i].real();
    x[v.size() + i] = v[i].imag();
  }
  return x;
}

}  // namespace

double vector_pnorm(const Vector& v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("vector_pnorm: p must be >= 1");
  if (is_inf(p)) {
    double mx = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) mx = std::max(mx, std::abs(v[i]));
    return mx;
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]), p);
  return std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (is_inf(p)) return 1.0;
  return p / (p - 1.0);
}

Vector dual_extremal(const Vector& w, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("dual_extremal: p must be >= 1");
  if (w.norm() == 0.0) throw std::invalid_argument("dual_extremal: w must be nonzero");
  Vector v = Vector::Zero(w.size());
  if (p == 1.0) {
    Eigen::Index k = 0;
    for (Eigen::Index i = 1; i < w.size(); ++i)
      if (std::abs(w[i]) > std::abs(w[k])) k = i;
    v[k] = std::conj(w[k]) / std::abs(w[k]);
    return v;
  }
  const double q = conjugate_exponent(p);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double a = std::abs(w[i]);
    if (a > 0.0) v[i] = std::conj(w[i]) * std::pow(a, q - 2.0);
  }
  return v;
}

OperatorNormResult operator_norm(const Matrix& A, double p_in, double p_out,
                                 int budget, Rng* rng) {
  if (!(p_in >= 1.0) || !(p_out >= 1.0))
    throw std::invalid_argument("operator_norm: exponents must be >= 1");
  if (p_in == 1.0) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < A.cols(); ++k)
      best = std::max(best, vector_pnorm(A.col(k), p_out));
    return {best, true};
  }
  if (is_inf(p_in) && is_inf(p_out)) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < A.rows(); ++j)
      best = std::max(best, vector_pnorm(A.row(j).transpose(), 1.0));
    return {best, true};
  }
  if (p_in == 2.0 && p_out == 2.0) {
    Eigen::JacobiSVD<Matrix> svd(A);
    return {svd.singularValues().size() ? svd.singularValues()[0] : 0.0, true};
  }

  // lower bound by ascent over the input sphere
  Rng local(20240717);
  Rng& gen = rng ? *rng : local;
  auto ratio = [&](const optim::RealVec& raw) {
    const Vector x = realvec_to_complex(raw);
    const double nx = vector_pnorm(x, p_in);
    if (nx < 1e-12) return 0.0;
    return vector_pnorm(A * x, p_out) / nx;
  };
  const Eigen::Index n = A.cols();
  double best = 0.0;
  auto polish = [&](const Vector& start) {
    optim::MinimizeResult r = optim::pattern_search(
        [&](const optim::RealVec& raw) { return -ratio(raw); },
        complex_to_realvec(start), 0.5, 1e-9);
    best = std::max(best, -r.value);
  };
  for (Eigen::Index k = 0; k < n; ++k) polish(Vector::Unit(n, k));
  {
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinV);
    if (svd.matrixV().cols() > 0) polish(svd.matrixV().col(0));
  }
  for (int t = 0; t < budget; ++t) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = gen.complex_normal();
    polish(x);
  }
  return {best, false};
}

Matrix neumann_inverse(const Matrix& A, double tol) {
  if (A.rows() != A.cols()) throw std::invalid_argument("neumann_inverse: square input required");
  const double na = operator_norm(A, 2.0, 2.0).value;
  if (!(na < 1.0)) throw std::invalid_argument("neumann_inverse: operator norm must be < 1");
  const Eigen::Index n = A.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int it = 0; it < 100000; ++it) {
    term = term * A;
    const double tn = operator_norm(term, 2.0, 2.0).value;
    if (tn < tol) break;
    sum += term;
  }
  return sum;
}

SpectralRadiusReport spectral_radius(const Matrix& A, int n_max) {
  if (A.rows() != A.cols()) throw std::invalid_argument("spectral_radius: square input required");
  if (n_max < 1) throw std::invalid_argument("spectral_radius: n_max must be positive");
  SpectralRadiusReport rep;

  // |A^n|^{1/n} with per-step normalization so powers stay representable
  auto norm2 = [](const Matrix& M) {
    Eigen::JacobiSVD<Matrix> svd(M);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  };
  // binary exponentiation of the pair (B, logscale), A^k = e^L B
  const Eigen::Index n = A.rows();
  Matrix base = A;
  double base_log = 0.0;
  bool vanished = false;
  {
    const double s = norm2(base);
    if (s == 0.0) vanished = true;
    else {
      base /= s;
      base_log = std::log(s);
    }
  }
  Matrix acc = Matrix::Identity(n, n);
  double acc_log = 0.0;
  int e = vanished ? 0 : n_max;
  while (e > 0) {
    if (e & 1) {
      acc = acc * base;
      acc_log += base_log;
      const double s = norm2(acc);
      if (s == 0.0) {
        vanished = true;
        break;
      }
      acc /= s;
      acc_log += std::log(s);
    }
    e >>= 1;
    if (e) {
      base = base * base;
      base_log *= 2.0;
      const double s = norm2(base);
      if (s == 0.0) {
        // A^{2^k} vanished, so A^{n_max} does as well
        vanished = true;
        break;
      }
      base /= s;
      base_log += std::log(s);
    }
  }
  rep.gelfand = vanished ? 0.0 : std::exp(acc_log / n_max);

  Eigen::ComplexEigenSolver<Matrix> es(A, false);
  double r = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    r = std::max(r, std::abs(es.eigenvalues()[i]));
  rep.eigen_radius = r;
  return rep;
}

Matrix adjoint(const Matrix& A) { return A.adjoint(); }

CStarReport c_star_report(const Matrix& A) {
  CStarReport rep;
  rep.norm_ata = operator_norm(adjoint(A) * A, 2.0, 2.0).value;
  const double na = operator_norm(A, 2.0, 2.0).value;
  rep.norm_sq = na * na;
  return rep;
}

SchmidtDecomposition schmidt_decompose(const Matrix& A) {
  SchmidtDecomposition out;
  const Matrix gram = adjoint(A) * A;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const Matrix& U = es.eigenvectors();
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    out.u.push_back(U.col(j));
    out.w.push_back(A * U.col(j));
  }
  return out;
}

double hilbert_schmidt_norm(const Matrix& A) { return A.norm(); }

Subspace::Subspace(int ambient_dim, std::vector<Vector> basis_vectors)
    : ambient(ambient_dim), basis(std::move(basis_vectors)) {
  if (ambient < 0) throw std::invalid_argument("Subspace: bad ambient dimension");
  std::vector<Vector> ortho;
  for (const Vector& b : basis) {
    if (b.size() != ambient) throw std::invalid_argument("Subspace: dimension mismatch");
    Vector r = b;
    for (const Vector& q : ortho) r -= q.dot(r) * q;
    if (r.norm() <= 1e-10 * std::max(1.0, b.norm()))
      throw std::invalid_argument("Subspace: basis is not linearly independent");
    ortho.push_back(r / r.norm());
  }
}

Matrix Subspace::orthonormal() const {
  Matrix Q(ambient, dim());
  std::vector<Vector> ortho;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vector r = basis[i];
    for (const Vector& q : ortho) r -= q.dot(r) * q;
    r /= r.norm();
    ortho.push_back(r);
    Q.col(static_cast<Eigen::Index>(i)) = r;
  }
  return Q;
}

Matrix orthogonal_projection(const Subspace& S) {
  if (S.dim() == 0) return Matrix::Zero(S.ambient, S.ambient);
  const Matrix Q = S.orthonormal();
  return Q * Q.adjoint();
}

Matrix simultaneous_diagonalize(const std::vector<Matrix>& family, Rng& rng, double tol) {
  if (family.empty()) throw std::invalid_argument("simultaneous_diagonalize: empty family");
  const Eigen::Index n = family.front().rows();
  for (const Matrix& A : family) {
    if (A.rows() != n || A.cols() != n)
      throw std::invalid_argument("simultaneous_diagonalize: sizes differ");
    if ((A * adjoint(A) - adjoint(A) * A).norm() > tol)
      throw std::invalid_argument("simultaneous_diagonalize: matrix is not normal");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if ((family[i] * family[j] - family[j] * family[i]).norm() > tol)
        throw std::invalid_argument("simultaneous_diagonalize: family does not commute");

  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix R = Matrix::Zero(n, n);
    for (const Matrix& A : family) {
      const Matrix H = 0.5 * (A + adjoint(A));
      const Matrix K = cd(0.0, -0.5) * (A - adjoint(A));
      R += rng.uniform(0.25, 1.0) * H + rng.uniform(0.25, 1.0) * K;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(R);
    const Matrix V = es.eigenvectors();
    bool ok = true;
    for (const Matrix& A : family) {
      const Matrix D = V.adjoint() * A * V;
      double off = 0.0;
      for (Eigen::Index i = 0; i < n && ok; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if (i != j) off = std::max(off, std::abs(D(i, j)));
      if (off > 1e-8) {
        ok = false;
        break;
      }
    }
    if (ok) return V;
  }
  throw std::runtime_error("simultaneous_diagonalize: no separating combination found");
}

std::vector<cd> numerical_range(const Matrix& A, int sample_count, Rng& rng) {
  if (sample_count < 1) throw std::invalid_argument("numerical_range: need samples");
  if (A.rows() != A.cols()) throw std::invalid_argument("numerical_range: square input required");
  std::vector<cd> pts;
  pts.reserve(static_cast<std::size_t>(sample_count));
  const Eigen::Index n = A.rows();
  for (int s = 0; s < sample_count; ++s) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.complex_normal();
    v /= v.norm();
    pts.push_back(v.dot(A * v));  // <Av, v>
  }
  return pts;
}

double quotient_norm(const Subspace& W, const Vector& v, double p, int budget, Rng* rng) {
  if (!(p >= 1.0)) throw std::invalid_argument("quotient_norm: p must be >= 1");
  if (v.size() != W.ambient) throw std::invalid_argument("quotient_norm: dimension mismatch");
  if (W.dim() == 0) return vector_pnorm(v, p);
  const Matrix Q = W.orthonormal();
  if (p == 2.0) return (v - Q * (Q.adjoint() * v)).norm();

  // least-squares start, then convex descent over the coefficients
  Matrix B(W.ambient, W.dim());
  for (int i = 0; i < W.dim(); ++i) B.col(i) = W.basis[static_cast<std::size_t>(i)];
  const Vector t2 = -(Q.adjoint() * v);
  const Vector start_w = Q * t2;

  auto objective = [&](const optim::RealVec& raw) {
    const Vector t = realvec_to_complex(raw);
    return vector_pnorm(v + Q * t, p);
  };
  Rng local(20240718);
  Rng& gen = rng ? *rng : local;
  optim::MinimizeResult best = optim::multistart_minimize(
      objective, complex_to_realvec(t2), 1.0 + start_w.norm(), budget, gen, 0.5,
      1e-9);
  return std::min(best.value, vector_pnorm(v, p));
}

namespace {

// norm on the realified space: p-norm of the complex moduli
double realified_pnorm(const optim::RealVec& x, double p, Eigen::Index n) {
  if (std::isinf(p)) {
    double mx = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      mx = std::max(mx, std::hypot(x[i], x[n + i]));
    return mx;
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    s += std::pow(std::hypot(x[i], x[n + i]), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

Vector hahn_banach_extend(const Subspace& W, const std::vector<cd>& mu, double p,
                          int budget, Rng& rng) {
  if (!(p >= 1.0)) throw std::invalid_argument("hahn_banach_extend: p must be >= 1");
  if (static_cast<int>(mu.size()) != W.dim())
    throw std::invalid_argument("hahn_banach_extend: functional/basis size mismatch");
  const Eigen::Index n = W.ambient;
  if (n > 8) throw std::invalid_argument("hahn_banach_extend: ambient dimension capped at 8");

  // certify |mu| <= |.|_p on the basis and on random samples
  auto mu_of_coeffs = [&](const Vector& t) {
    cd s = 0.0;
    for (int i = 0; i < W.dim(); ++i) s += t[i] * mu[static_cast<std::size_t>(i)];
    return s;
  };
  auto vec_of_coeffs = [&](const Vector& t) {
    Vector w = Vector::Zero(n);
    for (int i = 0; i < W.dim(); ++i) w += t[i] * W.basis[static_cast<std::size_t>(i)];
    return w;
  };
  for (int trial = 0; trial < 256 + W.dim(); ++trial) {
    Vector t(W.dim());
    if (trial < W.dim()) {
      t.setZero();
      t[trial] = 1.0;
    } else {
      for (int i = 0; i < W.dim(); ++i) t[i] = rng.complex_normal();
    }
    const double rhs = vector_pnorm(vec_of_coeffs(t), p);
    if (std::abs(mu_of_coeffs(t)) > rhs * (1.0 + 1e-9) + 1e-15)
      throw std::invalid_argument("hahn_banach_extend: |mu(w)| <= |w| fails on W");
  }

  // realify: x in R^{2n} represents z with Re z = x[0..n), Im z = x[n..2n)
  const Eigen::Index N = 2 * n;
  auto norm_fn = [&](const optim::RealVec& x) { return realified_pnorm(x, p, n); };

  std::vector<optim::RealVec> span;     // orthonormalized (euclidean) real basis of W_j
  std::vector<double> h_values;         // h on the original spanning vectors
  std::vector<optim::RealVec> raw_span; // original spanning vectors
  auto add_span = [&](const Vector& z, double hval) {
    raw_span.push_back(complex_to_realvec(z));
    h_values.push_back(hval);
  };
  for (int i = 0; i < W.dim(); ++i) {
    const Vector b = W.basis[static_cast<std::size_t>(i)];
    add_span(b, mu[static_cast<std::size_t>(i)].real());
    add_span(cd(0.0, 1.0) * b, (cd(0.0, 1.0) * mu[static_cast<std::size_t>(i)]).real());
  }

  // orthonormal euclidean basis of the current subspace:
  Eigen::MatrixXd U(N, 0);
  for (const auto& rv : raw_span) {
    Eigen::VectorXd r = rv;
    for (Eigen::Index c = 0; c < U.cols(); ++c) r -= U.col(c).dot(r) * U.col(c);
    if (r.norm() > 1e-12) {
      U.conservativeResize(Eigen::NoChange, U.cols() + 1);
      U.col(U.cols() - 1) = r / r.norm();
    }
  }

  // minimum-norm representer g with g . x = h(x) on the current subspace
  Eigen::VectorXd g = Eigen::VectorXd::Zero(N);
  auto refresh_representer = [&]() {
    Eigen::MatrixXd St(static_cast<Eigen::Index>(raw_span.size()), N);
    Eigen::VectorXd hv(static_cast<Eigen::Index>(raw_span.size()));
    for (std::size_t i = 0; i < raw_span.size(); ++i) {
      St.row(static_cast<Eigen::Index>(i)) = raw_span[i].transpose();
      hv[static_cast<Eigen::Index>(i)] = h_values[i];
    }
    g = St.completeOrthogonalDecomposition().solve(hv);
  };
  refresh_representer();
  auto h_on_subspace = [&](const Eigen::VectorXd& x) { return g.dot(x); };

  while (U.cols() < N) {
    // pick z euclidean-orthogonal to the current subspace
    Eigen::VectorXd z = Eigen::VectorXd::Zero(N);
    for (Eigen::Index k = 0; k < N; ++k) {
      Eigen::VectorXd cand = Eigen::VectorXd::Unit(N, k);
      for (Eigen::Index c = 0; c < U.cols(); ++c) cand -= U.col(c).dot(cand) * U.col(c);
      if (cand.norm() > 1e-8) {
        z = cand / cand.norm();
        break;
      }
    }
    if (z.norm() == 0.0) throw std::logic_error("hahn_banach_extend: no orthogonal direction");

    const Eigen::Index d = U.cols();
    auto point = [&](const optim::RealVec& c) { return Eigen::VectorXd(U * c); };
    // alpha must satisfy sup_u(-h(u) - |u+z|) <= alpha <= inf_u(-h(u) + |u+z|)
    auto upper_obj = [&](const optim::RealVec& c) {
      const Eigen::VectorXd u = point(c);
      return -h_on_subspace(u) + norm_fn(u + z);
    };
    auto lower_obj = [&](const optim::RealVec& c) {
      const Eigen::VectorXd u = point(c);
      return h_on_subspace(u) + norm_fn(u + z);  // = -( -h(u) - |u+z| )
    };
    optim::RealVec c0 = optim::RealVec::Zero(d);
    // two radius scales guard against minimizers far from the subspace origin
    auto minimize2 = [&](const optim::Objective& obj) {
      optim::MinimizeResult m1 =
          optim::multistart_minimize(obj, c0, 3.0, std::max(1, budget), rng, 0.5, 1e-8);
      optim::MinimizeResult m2 = optim::multistart_minimize(
          obj, m1.x, 12.0, std::max(1, budget), rng, 2.0, 1e-8);
      return m2.value < m1.value ? m2 : m1;
    };
    const optim::MinimizeResult up = minimize2(upper_obj);
    const optim::MinimizeResult lo = minimize2(lower_obj);
    const double hi = up.value;
    const double lo_v = -lo.value;
    if (hi < lo_v - 1e-6)
      throw std::runtime_error("hahn_banach_extend: infeasible extension interval");
    const double alpha = 0.5 * (lo_v + hi);

    raw_span.push_back(z);
    h_values.push_back(alpha);
    U.conservativeResize(Eigen::NoChange, U.cols() + 1);
    U.col(U.cols() - 1) = z;
    refresh_representer();
  }

  auto h_full = [&](const Eigen::VectorXd& x) { return g.dot(x); };
  Vector lambda(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Vector ej = Vector::Unit(n, j);
    const double re = h_full(complex_to_realvec(ej));
    const double im = h_full(complex_to_realvec(cd(0.0, 1.0) * ej));
    lambda[j] = cd(re, -im);  // lambda(v) = h(v) - i h(iv)
  }
  // the dual norm of the p-norm pairing has a closed form; a bad alpha
  // interval (functional too close to critical) surfaces here
  if (vector_pnorm(lambda, conjugate_exponent(p)) > 1.0 + 1e-4)
    throw std::runtime_error("hahn_banach_extend: extension exceeds the unit dual ball "
                             "(optimization failure)");
  return lambda;
}

}  // namespace dyana
