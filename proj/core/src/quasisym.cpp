#include "dyana/quasisym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace dyana {

std::vector<RealInterval> cantor_level(double r, int j) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("cantor_level: r must lie in (0,1)");
  if (j < 0) throw std::invalid_argument("cantor_level: depth must be nonnegative");
  std::vector<RealInterval> level{{0.0, 1.0}};
  const double child = (1.0 - r) / 2.0;
  for (int step = 0; step < j; ++step) {
    std::vector<RealInterval> next;
    next.reserve(level.size() * 2);
    for (const RealInterval& I : level) {
      const double w = I.length() * child;
      next.push_back({I.a, I.a + w});
      next.push_back({I.b - w, I.b});
    }
    level = std::move(next);
  }
  return level;
}

CantorSystem build_cantor(double r, int depth) {
  if (depth < 0 || depth > 24) throw std::invalid_argument("build_cantor: depth must be in [0,24]");
  CantorSystem sys;
  sys.r = r;
  sys.depth = depth;
  for (int j = 0; j <= depth; ++j) sys.levels.push_back(cantor_level(r, j));
  return sys;
}

RealInterval addressed_interval(const CantorSystem& sys, const std::string& address) {
  if (static_cast<int>(address.size()) > sys.depth)
    throw std::invalid_argument("addressed_interval: address longer than depth");
  std::size_t idx = 0;
  for (char c : address) {
    if (c != '0' && c != '1') throw std::invalid_argument("addressed_interval: bits only");
    idx = 2 * idx + (c == '1' ? 1 : 0);
  }
  return sys.levels[address.size()][idx];
}

double point_of_address(const CantorSystem& sys, const std::string& address) {
  return addressed_interval(sys, address).a;
}

std::pair<double, double> h_map(double r_src, double r_dst, const std::string& address,
                                IntervalEnd end, int depth_cap) {
  const int depth = std::min<int>(depth_cap, static_cast<int>(address.size()));
  if (static_cast<int>(address.size()) > depth)
    throw std::invalid_argument("h_map: address longer than the depth cap");
  const CantorSystem src = build_cantor(r_src, depth);
  const CantorSystem dst = build_cantor(r_dst, depth);
  const RealInterval is = addressed_interval(src, address);
  const RealInterval id = addressed_interval(dst, address);
  if (end == IntervalEnd::Left) return {is.a, id.a};
  return {is.b, id.b};
}

TwoFifthsMap two_fifths_map(int l) {
  if (l < 0 || l > 15) throw std::invalid_argument("two_fifths_map: level must be in [0,15]");
  TwoFifthsMap out;
  out.source_intervals = {{0.0, 1.0}};
  out.target_intervals = {{0.0, 1.0}};
  for (int step = 0; step < l; ++step) {
    std::vector<RealInterval> src, dst;
    src.reserve(out.source_intervals.size() * 3);
    dst.reserve(out.target_intervals.size() * 3);
    for (const RealInterval& I : out.source_intervals) {
      const double w = I.length();
      src.push_back({I.a, I.a + w / 3.0});
      src.push_back({I.a + 2.0 * w / 3.0, I.a + 7.0 * w / 9.0});
      src.push_back({I.a + 8.0 * w / 9.0, I.b});
    }
    for (const RealInterval& I : out.target_intervals) {
      const double w = I.length();
      dst.push_back({I.a, I.a + w / 5.0});
      dst.push_back({I.a + 2.0 * w / 5.0, I.a + 3.0 * w / 5.0});
      dst.push_back({I.a + 4.0 * w / 5.0, I.b});
    }
    out.source_intervals = std::move(src);
    out.target_intervals = std::move(dst);
  }
  out.endpoint_map.reserve(out.source_intervals.size() * 2);
  for (std::size_t i = 0; i < out.source_intervals.size(); ++i) {
    out.endpoint_map.emplace_back(out.source_intervals[i].a, out.target_intervals[i].a);
    out.endpoint_map.emplace_back(out.source_intervals[i].b, out.target_intervals[i].b);
  }
  return out;
}

double ModulusTable::eval(double tt) const {
  if (t.empty()) return std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(t.begin(), t.end(), tt);
  if (it == t.end()) return std::numeric_limits<double>::infinity();
  return eta[static_cast<std::size_t>(it - t.begin())];
}

namespace {

int bucket_of(double t) {
  // quarter-decade buckets
  return static_cast<int>(std::floor(4.0 * std::log10(t)));
}

double bucket_upper(int b) { return std::pow(10.0, (b + 1) / 4.0); }

}  // namespace

ModulusTable eta_empirical(const std::vector<Eigen::VectorXd>& source,
                           const std::vector<Eigen::VectorXd>& target,
                           std::size_t triple_budget, Rng& rng) {
  const std::size_t n = source.size();
  if (n < 3) throw std::invalid_argument("eta_empirical: need at least 3 points");
  if (target.size() != n) throw std::invalid_argument("eta_empirical: size mismatch");

  std::map<int, double> sup_by_bucket;
  auto visit = [&](std::size_t x, std::size_t y, std::size_t z) {
    if (x == y || x == z) return;
    const double dzx = (source[z] - source[x]).norm();
    const double dyx = (source[y] - source[x]).norm();
    if (dzx == 0.0 || dyx == 0.0)
      throw std::invalid_argument("eta_empirical: repeated source points");
    const double rzx = (target[z] - target[x]).norm();
    const double ryx = (target[y] - target[x]).norm();
    if (rzx == 0.0)
      throw std::invalid_argument("eta_empirical: target collision (map not injective)");
    const int b = bucket_of(dyx / dzx);
    double& s = sup_by_bucket[b];
    s = std::max(s, ryx / rzx);
  };

  const std::size_t total = n * (n - 1) * (n - 1);
  if (total <= triple_budget) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) visit(x, y, z);
  } else {
    for (std::size_t it = 0; it < triple_budget; ++it) {
      const std::size_t x = rng.below(n);
      std::size_t y = rng.below(n), z = rng.below(n);
      if (y == x || z == x) continue;
      visit(x, y, z);
    }
  }
  if (sup_by_bucket.empty()) throw std::invalid_argument("eta_empirical: no valid triples");

  ModulusTable table;
  for (const auto& [b, s] : sup_by_bucket) {
    table.t.push_back(bucket_upper(b));
    table.eta.push_back(s);
  }
  // regularization: eta_hat(t) = inf{eta(s) : s >= t} (suffix minimum)
  for (std::size_t i = table.eta.size() - 1; i-- > 0;)
    table.eta[i] = std::min(table.eta[i], table.eta[i + 1]);
  return table;
}

ModulusTable eta_inverse(const ModulusTable& table, double eps) {
  if (table.t.empty()) throw std::invalid_argument("eta_inverse: empty table");
  // strictly increasing bump theta = eta + eps t, then invert pointwise
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(table.t.size());
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    const double theta = table.eta[i] + eps * table.t[i];
    if (theta <= 0.0) continue;
    pairs.emplace_back(1.0 / theta, 1.0 / table.t[i]);  // t' = 1/theta, alpha = 1/t
  }
  if (pairs.empty()) throw std::invalid_argument("eta_inverse: table not invertible");
  std::sort(pairs.begin(), pairs.end());
  ModulusTable out;
  for (const auto& [tt, aa] : pairs) {
    out.t.push_back(tt);
    out.eta.push_back(aa);
  }
  for (std::size_t i = 1; i < out.eta.size(); ++i)
    if (out.eta[i] < out.eta[i - 1])
      throw std::logic_error("eta_inverse: inversion lost monotonicity");
  return out;
}

double PowerEnvelope::eval(double t) const {
  if (!(t > 0.0)) return 0.0;
  return t <= 1.0 ? C * std::pow(t, a1) : C * std::pow(t, a2);
}

PowerEnvelope power_envelope(double t1, double L) {
  if (!(t1 > 0.0 && t1 <= 1.0)) throw std::invalid_argument("power_envelope: t1 in (0,1]");
  if (!(L >= 1.0)) throw std::invalid_argument("power_envelope: L >= 1");
  PowerEnvelope env;
  env.a1 = t1 < 1.0 ? std::log(2.0) / std::log(1.0 / t1) : 1.0;
  env.a2 = std::max(1.0, std::log2(L));
  env.C = std::max(2.0, L);
  return env;
}

Eigen::VectorXd radial_map(double b, const Eigen::VectorXd& x) {
  if (!(b > 0.0)) throw std::invalid_argument("radial_map: b must be positive");
  const double r = x.norm();
  if (r == 0.0) return Eigen::VectorXd::Zero(x.size());
  return std::pow(r, b - 1.0) * x;
}

std::vector<double> endpoints_at_depth(const CantorSystem& sys) {
  std::vector<double> pts;
  pts.reserve(sys.levels.back().size() * 2);
  for (const RealInterval& I : sys.levels.back()) {
    pts.push_back(I.a);
    pts.push_back(I.b);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace dyana
