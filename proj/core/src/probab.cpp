#include "dyana/probab.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace dyana {

FiniteAbelianGroup FiniteAbelianGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  return {Kind::Cyclic, n};
}

FiniteAbelianGroup FiniteAbelianGroup::signs(int l) {
  if (l < 0 || l > 20) throw std::invalid_argument("signs group needs 0 <= l <= 20");
  return {Kind::Signs, l};
}

std::size_t FiniteAbelianGroup::order() const {
  return kind == Kind::Cyclic ? static_cast<std::size_t>(n) : (std::size_t{1} << n);
}

std::size_t FiniteAbelianGroup::op(std::size_t a, std::size_t b) const {
  if (kind == Kind::Cyclic) return (a + b) % static_cast<std::size_t>(n);
  return a ^ b;
}

std::size_t FiniteAbelianGroup::inverse(std::size_t a) const {
  if (kind == Kind::Cyclic) return (static_cast<std::size_t>(n) - a) % static_cast<std::size_t>(n);
  return a;
}

DyadicStepFn rademacher(int j, int m) {
  if (j < 1 || m < j) throw std::invalid_argument("rademacher: need m >= j >= 1");
  std::vector<cd> vals(std::size_t{1} << m);
  for (std::size_t c = 0; c < vals.size(); ++c) {
    const std::size_t i = c >> (m - j);
    vals[c] = (i & 1) ? -1.0 : 1.0;
  }
  return DyadicStepFn(m, std::move(vals));
}

int rademacher_product_integral(const std::vector<int>& indices) {
  std::map<int, int> mult;
  for (int i : indices) {
    if (i < 1) throw std::invalid_argument("rademacher indices are positive");
    ++mult[i];
  }
  for (const auto& [idx, count] : mult)
    if (count % 2 != 0) return 0;
  return 1;
}

KhintchineReport khintchine_report(const std::vector<double>& alpha, double p) {
  if (alpha.empty()) throw std::invalid_argument("khintchine_report: empty coefficients");
  if (!(p > 0.0)) throw std::invalid_argument("khintchine_report: p must be positive");
  const int m = static_cast<int>(alpha.size());
  DyadicStepFn f = DyadicStepFn(m, std::vector<cd>(std::size_t{1} << m, cd(0.0)));
  for (int j = 1; j <= m; ++j) f += alpha[static_cast<std::size_t>(j - 1)] * rademacher(j, m);
  KhintchineReport rep;
  rep.p_norm = lp_norm(f, p);
  double s = 0.0;
  for (double a : alpha) s += a * a;
  rep.l2 = std::sqrt(s);
  rep.ratio = rep.l2 > 0.0 ? rep.p_norm / rep.l2 : 1.0;
  return rep;
}

LacunaryReport lacunary_fourth(const std::vector<cd>& c) {
  LacunaryReport rep;
  const std::size_t n = c.size();
  double l2 = 0.0;
  for (const cd& z : c) l2 += std::norm(z);
  rep.bound = 2.0 * l2 * l2;
  cd sum = 0.0;
  for (std::size_t j1 = 0; j1 < n; ++j1)
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t j3 = 0; j3 < n; ++j3)
        for (std::size_t j4 = 0; j4 < n; ++j4) {
          const auto lhs = (std::uint64_t{1} << j1) + (std::uint64_t{1} << j2);
          const auto rhs = (std::uint64_t{1} << j3) + (std::uint64_t{1} << j4);
          if (lhs == rhs) sum += c[j1] * c[j2] * std::conj(c[j3]) * std::conj(c[j4]);
        }
  rep.fourth_moment = sum.real();
  return rep;
}

Matrix group_convolution(const FiniteAbelianGroup& G, const GroupFunction& a,
                         ConvolutionSide side) {
  const std::size_t N = G.order();
  if (a.size() != N) throw std::invalid_argument("group_convolution: size mismatch");
  Matrix M = Matrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t g = 0; g < N; ++g)
    for (std::size_t gp = 0; gp < N; ++gp) {
      const std::size_t h = side == ConvolutionSide::Left ? G.op(g, G.inverse(gp))
                                                          : G.op(G.inverse(g), gp);
      M(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(gp)) = a[h];
    }
  return M;
}

std::vector<GroupFunction> characters(const FiniteAbelianGroup& G) {
  const std::size_t N = G.order();
  std::vector<GroupFunction> chars;
  chars.reserve(N);
  if (G.kind == FiniteAbelianGroup::Kind::Cyclic) {
    for (std::size_t aidx = 0; aidx < N; ++aidx) {
      GroupFunction chi(N);
      for (std::size_t j = 0; j < N; ++j) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(aidx * j % N) /
                           static_cast<double>(N);
        chi[j] = cd(std::cos(ang), std::sin(ang));
      }
      chars.push_back(std::move(chi));
    }
  } else {
    for (std::size_t mask = 0; mask < N; ++mask) {
      GroupFunction chi(N);
      for (std::size_t e = 0; e < N; ++e)
        chi[e] = (std::popcount(mask & e) & 1) ? -1.0 : 1.0;
      chars.push_back(std::move(chi));
    }
  }
  return chars;
}

double convolution_norm2(const FiniteAbelianGroup& G, const GroupFunction& a) {
  const std::size_t N = G.order();
  if (a.size() != N) throw std::invalid_argument("convolution_norm2: size mismatch");
  double best = 0.0;
  for (const GroupFunction& chi : characters(G)) {
    cd s = 0.0;
    for (std::size_t h = 0; h < N; ++h) s += a[h] * chi[G.inverse(h)];
    best = std::max(best, std::abs(s));
  }
  return best;
}

MomentReport linear_moment_constants(int n, double p, std::size_t samples, Rng& rng) {
  if (n < 1) throw std::invalid_argument("linear_moment_constants: n >= 1");
  if (p < 0.0) throw std::invalid_argument("linear_moment_constants: p >= 0");
  MomentReport rep;
  rep.gaussian = std::exp(std::lgamma(0.5 * (p + 1.0)) - std::lgamma(0.5));

  if (n == 1) {
    // S^0 = {1,-1}: |x_1|^p is identically 1
    rep.sphere = 1.0;
    rep.rotated = 1.0;
    return rep;
  }

  std::vector<double> u(static_cast<std::size_t>(n));
  {
    double nrm = 0.0;
    for (double& ui : u) {
      ui = rng.normal();
      nrm += ui * ui;
    }
    nrm = std::sqrt(nrm);
    for (double& ui : u) ui /= nrm;
  }

  double s1 = 0.0, s1sq = 0.0, s2 = 0.0, s2sq = 0.0;
  std::vector<double> g(static_cast<std::size_t>(n));
  for (std::size_t it = 0; it < samples; ++it) {
    double nrm = 0.0;
    for (double& gi : g) {
      gi = rng.normal();
      nrm += gi * gi;
    }
    nrm = std::sqrt(nrm);
    const double x1 = std::fabs(g[0]) / nrm;
    double xu = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) xu += g[i] * u[i];
    xu = std::fabs(xu) / nrm;
    const double a = std::pow(x1, p), b = std::pow(xu, p);
    s1 += a;
    s1sq += a * a;
    s2 += b;
    s2sq += b * b;
  }
  const double N = static_cast<double>(samples);
  rep.sphere = s1 / N;
  rep.rotated = s2 / N;
  rep.sphere_stderr = std::sqrt(std::max(0.0, s1sq / N - rep.sphere * rep.sphere) / N);
  rep.rotated_stderr = std::sqrt(std::max(0.0, s2sq / N - rep.rotated * rep.rotated) / N);
  return rep;
}

}  // namespace dyana
