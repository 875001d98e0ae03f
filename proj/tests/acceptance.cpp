// Acceptance runner: one pass/fail line per criterion, nonzero exit when
// anything fails. Every tolerance is pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyana/convex.hpp"
#include "dyana/dyadic.hpp"
#include "dyana/hardy.hpp"
#include "dyana/interp.hpp"
#include "dyana/linops.hpp"
#include "dyana/probab.hpp"
#include "dyana/quasisym.hpp"
#include "dyana/rng.hpp"
#include "dyana/varmin.hpp"

using namespace dyana;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  criterion-%02d  %s  (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

DyadicStepFn random_fn(Rng& rng, int m, bool complex_values = false) {
  std::vector<cd> vals(std::size_t{1} << m);
  for (auto& v : vals)
    v = complex_values ? rng.complex_normal() : cd(rng.normal(), 0.0);
  return DyadicStepFn(m, std::move(vals));
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void criterion_1_haar() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst_parseval = 0.0, worst_recon = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + static_cast<int>(rng.below(10));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    const HaarExpansion e = haar_analyze(f);
    double sumsq = std::norm(e.c0);
    for (const auto& [I, c] : e.coeffs) sumsq += std::norm(c);
    worst_parseval =
        std::max(worst_parseval, std::fabs(sumsq - std::pow(lp_norm(f, 2.0), 2.0)));
    worst_recon = std::max(worst_recon, lp_norm(haar_synthesize(e, m) - f, kInf));
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << "parseval " << worst_parseval << ", reconstruction " << worst_recon << ", " << secs
     << " s";
  report(1, "haar parseval + reconstruction", worst_parseval <= 1e-12 &&
             worst_recon <= 1e-12 && secs < 5.0, os.str());
}

void criterion_2_square_l2() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(102);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    worst = std::max(worst, std::fabs(std::pow(lp_norm(square(f), 2.0), 2.0) -
                                      std::pow(lp_norm(f, 2.0), 2.0)));
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << "worst defect " << worst << ", " << secs << " s";
  report(2, "square-function L2 identity", worst <= 1e-10 && secs < 5.0, os.str());
}

void criterion_3_weak_type_m() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(103);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    const int m = 2 + static_cast<int>(rng.below(5));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    for (int l = 1; l <= 20; ++l) {
      const double lam = 0.05 * l * (0.2 + lp_norm(f, kInf));
      const auto rep = maximal_level_set(f, lam);
      if (rep.measure > rep.bound + 1e-12) ++violations;
      if (rep.measure > rep.refined_bound + 1e-12) ++violations;
      if (rep.refined_bound > rep.bound + 1e-12) ++violations;
    }
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << violations << " violations over 500x20, " << secs << " s";
  report(3, "weak-type for M (constant 1, refined)", violations == 0 && secs < 10.0,
         os.str());
}

void criterion_4_lp_maximal() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(104);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    const int m = 2 + static_cast<int>(rng.below(5));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    for (double p : {1.5, 2.0, 3.0}) {
      const auto [lhs, rhs] = lp_maximal_report(f, p);
      if (lhs > rhs + 1e-10) ++violations;
    }
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << violations << " violations, " << secs << " s";
  report(4, "Lp maximal bound 2^p p/(p-1)", violations == 0 && secs < 10.0, os.str());
}

void criterion_5_weak_type_s() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(105);
  int violations = 0;
  for (int t = 0; t < 500; ++t) {
    const int m = 2 + static_cast<int>(rng.below(5));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    for (int l = 1; l <= 20; ++l) {
      const double lam = 0.05 * l * (0.2 + lp_norm(f, kInf));
      const auto rep = weak_type_s_report(f, lam);
      if (rep.level_measure > rep.bound + 1e-12) ++violations;
      if (rep.modified_measure > rep.modified_bound + 1e-12) ++violations;
    }
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << violations << " violations over 500x20, " << secs << " s";
  report(5, "weak-type for S (constant 3)", violations == 0, os.str());
}

void criterion_6_p4() {
  Rng rng(106);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const int m = 1 + static_cast<int>(rng.below(8));
    const DyadicStepFn f = random_fn(rng, m, t % 2 == 1);
    const auto rep = p4_decomposition(f);
    const double denom = std::max(1.0, std::fabs(rep.s4));
    worst = std::max(worst, std::fabs(rep.s4 - rep.a - 2.0 * rep.b) / denom);
  }
  std::ostringstream os;
  os << "worst relative defect " << worst;
  report(6, "p=4 identity S^4 = A + 2B", worst <= 1e-9, os.str());
}

void criterion_7_khintchine() {
  Rng rng(107);
  bool ok = true;
  std::ostringstream os;
  for (int t = 0; t < 200 && ok; ++t) {
    std::vector<double> alpha(1 + rng.below(8));
    for (auto& a : alpha) a = rng.normal();
    const auto r2 = khintchine_report(alpha, 2.0);
    if (std::fabs(r2.ratio - 1.0) > 1e-12) {
      ok = false;
      os << "p=2 ratio off: " << r2.ratio;
    }
    const auto r4 = khintchine_report(alpha, 4.0);
    double s2 = 0.0, s4 = 0.0;
    for (double a : alpha) {
      s2 += a * a;
      s4 += a * a * a * a;
    }
    if (std::fabs(std::pow(r4.p_norm, 4.0) - (3.0 * s2 * s2 - 2.0 * s4)) >
        1e-10 * std::max(1.0, s2 * s2)) {
      ok = false;
      os << "pairing formula off";
    }
    if (std::pow(r4.ratio, 4.0) > 3.0 + 1e-12) {
      ok = false;
      os << "ratio^4 exceeds 3";
    }
  }
  for (int t = 0; t < 100 && ok; ++t) {
    std::vector<cd> c(1 + rng.below(5));
    for (auto& z : c) z = rng.complex_normal();
    const auto rep = lacunary_fourth(c);
    if (rep.fourth_moment > rep.bound + 1e-9) {
      ok = false;
      os << "lacunary bound violated";
    }
    const int terms = static_cast<int>(c.size());
    const int N = 1 << (terms + 2);
    double quad = 0.0;
    for (int i = 0; i < N; ++i) {
      cd phi = 0.0;
      const double x = (i + 0.5) / N;
      for (int j = 0; j < terms; ++j) {
        const double ang = 6.283185307179586 * std::ldexp(1.0, j) * x;
        phi += c[static_cast<std::size_t>(j)] * cd(std::cos(ang), std::sin(ang));
      }
      quad += std::pow(std::abs(phi), 4.0);
    }
    quad /= N;
    if (std::fabs(rep.fourth_moment - quad) > 1e-6 * std::max(1.0, quad)) {
      ok = false;
      os << "lacunary quadrature mismatch";
    }
  }
  if (ok) os << "200 + 100 cases clean";
  report(7, "khintchine + lacunary p=4", ok, os.str());
}

void criterion_8_riesz() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(108);
  int violations = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = rng.complex_normal();

    // Schur formulas against brute force over basis vectors
    double m1 = 0.0, minf = 0.0;
    for (int k = 0; k < 4; ++k) m1 = std::max(m1, vector_pnorm(a.col(k), 1.0));
    for (int j = 0; j < 4; ++j) minf = std::max(minf, vector_pnorm(a.row(j).transpose(), 1.0));
    if (std::fabs(mp_norm(a, 1.0).value - m1) > 1e-12 * std::max(1.0, m1)) ++violations;
    if (std::fabs(mp_norm(a, kInf).value - minf) > 1e-12 * std::max(1.0, minf)) ++violations;

    for (const auto& [p, q] : std::vector<std::pair<double, double>>{
             {1.0, 2.0}, {2.0, kInf}, {1.0, kInf}}) {
      for (double tt : {0.25, 0.5, 0.75}) {
        const auto rep = riesz_convexity_report(a, p, q, tt, 4, &rng);
        if (rep.m_r_lower > rep.endpoint_product * (1.0 + 1e-9)) ++violations;
      }
    }
  }
  const double secs = elapsed_s(t0);
  std::ostringstream os;
  os << violations << " violations, " << secs << " s";
  report(8, "riesz log-convexity + schur endpoints", violations == 0 && secs < 30.0,
         os.str());
}

void criterion_9_gelfand() {
  Rng rng(109);
  double worst_rel = 0.0;
  bool ok = true;
  for (int t = 0; t < 50; ++t) {
    Matrix a(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = rng.complex_normal();
    const auto rep = spectral_radius(a, 64);
    if (rep.eigen_radius <= 1e-9) {
      if (std::fabs(rep.gelfand - rep.eigen_radius) > 1e-6) ok = false;
    } else {
      const double rel = std::fabs(rep.gelfand - rep.eigen_radius) / rep.eigen_radius;
      worst_rel = std::max(worst_rel, rel);
      if (rel > 0.05) ok = false;
    }
  }
  std::ostringstream os;
  os << "worst relative gap " << worst_rel;
  report(9, "gelfand limit at n = 64", ok, os.str());
}

void criterion_10_cstar() {
  Rng rng(110);
  bool ok = true;
  double worst_c = 0.0, worst_p = 0.0;
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + static_cast<int>(rng.below(3));
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.complex_normal();
    const auto rep = c_star_report(a);
    const double rel = std::fabs(rep.norm_ata - rep.norm_sq) / std::max(1e-300, rep.norm_sq);
    worst_c = std::max(worst_c, rel);
    if (rel > 1e-9) ok = false;

    // random normal matrix via a unitary conjugation of a diagonal
    Matrix h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = rng.complex_normal();
    h = 0.5 * (h + adjoint(h));
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Matrix d = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = rng.complex_normal();
    const Matrix nm = es.eigenvectors() * d * es.eigenvectors().adjoint();
    const double base = operator_norm(nm, 2.0, 2.0).value;
    Matrix power = Matrix::Identity(n, n);
    for (int l = 1; l <= 8; ++l) {
      power = power * nm;
      const double lhs = operator_norm(power, 2.0, 2.0).value;
      const double rhs = std::pow(base, l);
      const double prel = std::fabs(lhs - rhs) / std::max(1e-300, rhs);
      worst_p = std::max(worst_p, prel);
      if (prel > 1e-8) ok = false;
    }
  }
  std::ostringstream os;
  os << "worst C* defect " << worst_c << ", worst power defect " << worst_p;
  report(10, "C*-identity + normal power identity", ok, os.str());
}

GridDomain random_domain_acc(Rng& rng, int budget) {
  std::vector<GridPoint> pts{{0, 0}};
  std::map<GridPoint, bool> seen{{{0, 0}, true}};
  while (static_cast<int>(pts.size()) < budget) {
    const GridPoint base = pts[rng.below(pts.size())];
    GridPoint q = base;
    q[rng.below(2)] += rng.below(2) ? 1 : -1;
    if (!seen.count(q)) {
      seen[q] = true;
      pts.push_back(q);
    }
  }
  std::vector<GridPoint> extra;
  for (const auto& p : pts)
    for (int d = 0; d < 2; ++d)
      for (int s : {-1, 1}) {
        GridPoint q = p;
        q[static_cast<std::size_t>(d)] += s;
        if (!seen.count(q)) {
          seen[q] = true;
          extra.push_back(q);
        }
      }
  for (auto& q : extra) pts.push_back(std::move(q));
  return GridDomain(2, std::move(pts));
}

void criterion_11_vp() {
  Rng rng(111);
  bool ok = true;
  double worst_solve = 0.0, worst_unique = 0.0;
  int mp_failures = 0;
  for (int t = 0; t < 100; ++t) {
    const GridDomain U = random_domain_acc(rng, 8 + static_cast<int>(rng.below(40)));
    if (U.size() > 200) continue;
    std::map<std::size_t, cd> boundary;
    for (std::size_t b : U.boundary()) boundary[b] = cd(2.0 * rng.uniform() - 0.5, 0.0);

    // p = 2 solver against an independent dense least-squares route:
    // stack one row per directed edge and solve the rectangular system by QR
    const GridFn star = minimize_vp(U, boundary, 2.0);
    {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t x : U.interior())
        for (std::size_t y : U.neighbors_in(x)) edges.emplace_back(x, y);
      std::map<std::size_t, Eigen::Index> pos;
      for (std::size_t i = 0; i < U.interior().size(); ++i)
        pos[U.interior()[i]] = static_cast<Eigen::Index>(i);
      Eigen::MatrixXd D = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(edges.size()),
                                                static_cast<Eigen::Index>(U.interior().size()));
      Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(edges.size()));
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [x, y] = edges[e];
        D(static_cast<Eigen::Index>(e), pos.at(x)) += 1.0;
        if (U.is_interior(y))
          D(static_cast<Eigen::Index>(e), pos.at(y)) -= 1.0;
        else
          c[static_cast<Eigen::Index>(e)] = boundary.at(y).real();
      }
      const Eigen::VectorXd sol = D.colPivHouseholderQr().solve(c);
      for (std::size_t i = 0; i < U.interior().size(); ++i)
        worst_solve = std::max(worst_solve,
                               std::fabs(sol[static_cast<Eigen::Index>(i)] -
                                         star[U.interior()[i]].real()));
    }

    const auto mp = maximum_principle_report(U, boundary, star);
    if (!mp.holds) ++mp_failures;
    const GridFn star15 = minimize_vp(U, boundary, 1.5, {1e-12, false, 6000}, &rng);
    const auto mp15 = maximum_principle_report(U, boundary, star15);
    if (!mp15.holds) ++mp_failures;

    if (t % 10 == 0) {
      Rng ra = rng.fork(1), rb = rng.fork(2);
      const GridFn u1 = minimize_vp(U, boundary, 1.5, {1e-12, true, 8000}, &ra);
      const GridFn u2 = minimize_vp(U, boundary, 1.5, {1e-12, true, 8000}, &rb);
      for (std::size_t i = 0; i < U.size(); ++i)
        worst_unique = std::max(worst_unique, std::abs(u1[i] - u2[i]));
    }
  }
  if (worst_solve > 1e-8 || worst_unique > 1e-5 || mp_failures > 0) ok = false;
  std::ostringstream os;
  os << "solver gap " << worst_solve << ", uniqueness gap " << worst_unique << ", "
     << mp_failures << " maximum-principle failures";
  report(11, "V_p minimization (p=2 exact, max principle, uniqueness)", ok, os.str());
}

void criterion_12_quasisym() {
  Rng rng(112);
  bool ok = true;
  std::ostringstream os;

  const CantorSystem src = build_cantor(1.0 / 3.0, 10);
  const CantorSystem dst = build_cantor(0.5, 10);
  const auto se = endpoints_at_depth(src);
  const auto de = endpoints_at_depth(dst);
  int inversions = 0;
  for (std::size_t i = 1; i < de.size(); ++i)
    if (de[i] < de[i - 1]) ++inversions;
  if (inversions != 0) {
    ok = false;
    os << inversions << " inversions; ";
  }

  std::vector<Eigen::VectorXd> spts, dpts;
  for (std::size_t i = 0; i < se.size(); ++i) {
    if (!spts.empty() && se[i] == spts.back()[0]) continue;
    Eigen::VectorXd a(1), b(1);
    a[0] = se[i];
    b[0] = de[i];
    spts.push_back(a);
    dpts.push_back(b);
  }
  const ModulusTable table = eta_empirical(spts, dpts, 2000000, rng);
  bool finite = true, monotone = true;
  for (std::size_t i = 0; i < table.eta.size(); ++i) {
    if (!std::isfinite(table.eta[i])) finite = false;
    if (i > 0 && table.eta[i] < table.eta[i - 1]) monotone = false;
  }
  if (!finite || !monotone) {
    ok = false;
    os << "table not finite/monotone; ";
  }
  if (table.eta.front() > 2.0 * table.t.front()) {
    ok = false;
    os << "smallest bucket above twice the identity baseline; ";
  }

  // measured step constants: largest bucket with eta_hat <= 1/2 (clamped to
  // 1/2) and the regularized value at t = 2
  double t1 = 0.0;
  for (std::size_t i = 0; i < table.t.size(); ++i)
    if (table.eta[i] <= 0.5) t1 = std::max(t1, table.t[i]);
  t1 = std::min(t1, 0.5);
  double L = std::max(1.0, table.eval(2.0));
  if (t1 <= 0.0) {
    ok = false;
    os << "no half-contraction bucket; ";
  } else {
    const PowerEnvelope env = power_envelope(t1, L);
    int dominated_failures = 0;
    for (std::size_t i = 0; i < table.t.size(); ++i)
      if (table.eta[i] > env.eval(table.t[i]) * (1.0 + 1e-9)) ++dominated_failures;
    if (dominated_failures != 0) {
      ok = false;
      os << dominated_failures << " buckets above the envelope; ";
    }
    os << "t1 " << t1 << ", L " << L << "; ";
  }

  // identity map baseline: eta_hat within one bucket width of t
  std::vector<Eigen::VectorXd> pts;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd x(1);
    x[0] = rng.uniform();
    pts.push_back(x);
  }
  const ModulusTable idt = eta_empirical(pts, pts, 500000, rng);
  const double bucket = std::pow(10.0, 0.25);
  for (std::size_t i = 0; i < idt.t.size(); ++i) {
    if (idt.eta[i] > idt.t[i] * (1.0 + 1e-9) || idt.eta[i] < idt.t[i] / (bucket * bucket)) {
      ok = false;
      os << "identity bucket off at t = " << idt.t[i] << "; ";
      break;
    }
  }
  if (ok && os.str().empty()) os << "clean";
  report(12, "cantor h-map order + modulus envelope", ok, os.str());
}

void criterion_13_end_to_end() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string out1 = "acceptance_run1.txt";
  const std::string out2 = "acceptance_run2.txt";
  const std::string base = std::string(DYANA_CLI_PATH) +
                           " verify all --seed 1 --size small --format csv --out ";
  const int rc1 = std::system((base + out1).c_str());
  const int rc2 = std::system((base + out2).c_str());
  const double secs = elapsed_s(t0);

  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::string a = slurp(out1), b = slurp(out2);
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b && secs < 120.0;
  std::ostringstream os;
  os << "exit " << rc1 << "/" << rc2 << ", identical " << (a == b ? "yes" : "no") << ", "
     << secs << " s (two runs)";
  report(13, "run_suite all --size small", ok, os.str());
}

}  // namespace

int main() {
  criterion_1_haar();
  criterion_2_square_l2();
  criterion_3_weak_type_m();
  criterion_4_lp_maximal();
  criterion_5_weak_type_s();
  criterion_6_p4();
  criterion_7_khintchine();
  criterion_8_riesz();
  criterion_9_gelfand();
  criterion_10_cstar();
  criterion_11_vp();
  criterion_12_quasisym();
  criterion_13_end_to_end();
  if (failures == 0) {
    std::printf("all 13 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
