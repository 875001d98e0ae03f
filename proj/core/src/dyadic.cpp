#include "dyana/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dyana {

DyadicInterval DyadicInterval::parent() const {
  if (k == 0) throw std::invalid_argument("the unit interval has no parent");
  return {k - 1, j / 2};
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  if (other.k < k) return false;
  return (other.j >> (other.k - k)) == j;
}

IntervalRelation compare(const DyadicInterval& a, const DyadicInterval& b) {
  if (a == b) return IntervalRelation::Equal;
  if (b.contains(a)) return IntervalRelation::FirstInsideSecond;
  if (a.contains(b)) return IntervalRelation::SecondInsideFirst;
  return IntervalRelation::Disjoint;
}

std::vector<DyadicInterval> dyadic_partition(int k) {
  if (k < 0) throw std::invalid_argument("generation must be nonnegative");
  std::vector<DyadicInterval> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) out.push_back({k, j});
  return out;
}

std::vector<DyadicInterval> maximal_disjoint(std::vector<DyadicInterval> collection) {
  if (collection.empty())
    throw std::invalid_argument("maximal_disjoint: empty collection");
  std::set<DyadicInterval> all(collection.begin(), collection.end());
  std::vector<DyadicInterval> out;
  for (const auto& I : all) {
    bool dominated = false;
    DyadicInterval a = I;
    while (a.k > 0) {
      a = a.parent();
      if (all.count(a)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
    return a.left() < b.left();
  });
  return out;
}

DyadicStepFn::DyadicStepFn(int m, std::vector<cd> values) : m_(m), values_(std::move(values)) {
  if (m < 0) throw std::invalid_argument("resolution must be nonnegative");
  if (values_.size() != (std::size_t{1} << m))
    throw std::invalid_argument("value count must be 2^m");
}

DyadicStepFn DyadicStepFn::indicator(const DyadicInterval& I, int m) {
  if (m < I.k) throw std::invalid_argument("resolution too coarse for indicator");
  std::vector<cd> vals(std::size_t{1} << m, cd(0.0));
  const std::uint64_t lo = I.j << (m - I.k);
  const std::uint64_t hi = (I.j + 1) << (m - I.k);
  for (std::uint64_t i = lo; i < hi; ++i) vals[i] = 1.0;
  return DyadicStepFn(m, std::move(vals));
}

DyadicStepFn DyadicStepFn::from_real(int m, const std::vector<double>& vals) {
  std::vector<cd> v(vals.begin(), vals.end());
  return DyadicStepFn(m, std::move(v));
}

cd DyadicStepFn::value_at(double x) const {
  if (x < 0.0 || x >= 1.0) throw std::domain_error("point outside [0,1)");
  auto i = static_cast<std::size_t>(std::floor(x * static_cast<double>(cells())));
  if (i >= cells()) i = cells() - 1;
  return values_[i];
}

DyadicStepFn DyadicStepFn::refined(int m2) const {
  if (m2 < m_) throw std::invalid_argument("refinement must not lose resolution");
  if (m2 == m_) return *this;
  const std::size_t rep = std::size_t{1} << (m2 - m_);
  std::vector<cd> vals;
  vals.reserve(values_.size() * rep);
  for (const cd& v : values_)
    vals.insert(vals.end(), rep, v);
  return DyadicStepFn(m2, std::move(vals));
}

cd DyadicStepFn::integral() const {
  cd s = 0.0;
  for (const cd& v : values_) s += v;
  return s * std::ldexp(1.0, -m_);
}

cd DyadicStepFn::average_on(const DyadicInterval& I) const {
  if (I.k >= m_) {
    // f is constant on I
    const std::uint64_t cell = I.j >> (I.k - m_);
    return values_[cell];
  }
  const std::uint64_t lo = I.j << (m_ - I.k);
  const std::uint64_t hi = (I.j + 1) << (m_ - I.k);
  cd s = 0.0;
  for (std::uint64_t i = lo; i < hi; ++i) s += values_[i];
  return s / static_cast<double>(hi - lo);
}

bool DyadicStepFn::is_real(double tol) const {
  for (const cd& v : values_)
    if (std::fabs(v.imag()) > tol) return false;
  return true;
}

DyadicStepFn DyadicStepFn::abs() const {
  std::vector<cd> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = std::abs(values_[i]);
  return DyadicStepFn(m_, std::move(vals));
}

DyadicStepFn DyadicStepFn::pow_abs(double p) const {
  std::vector<cd> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals[i] = std::pow(std::abs(values_[i]), p);
  return DyadicStepFn(m_, std::move(vals));
}

void align(DyadicStepFn& f, DyadicStepFn& g) {
  const int m = std::max(f.resolution(), g.resolution());
  if (f.resolution() < m) f = f.refined(m);
  if (g.resolution() < m) g = g.refined(m);
}

DyadicStepFn& DyadicStepFn::operator+=(const DyadicStepFn& g) {
  DyadicStepFn rhs = g;
  align(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

DyadicStepFn& DyadicStepFn::operator-=(const DyadicStepFn& g) {
  DyadicStepFn rhs = g;
  align(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

DyadicStepFn& DyadicStepFn::operator*=(const DyadicStepFn& g) {
  DyadicStepFn rhs = g;
  align(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= rhs.values_[i];
  return *this;
}

DyadicStepFn& DyadicStepFn::operator*=(cd c) {
  for (cd& v : values_) v *= c;
  return *this;
}

double lp_norm(const DyadicStepFn& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const cd& v : f.values()) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double s = 0.0;
  for (const cd& v : f.values()) s += std::pow(std::abs(v), p);
  s *= std::ldexp(1.0, -f.resolution());
  return std::pow(s, 1.0 / p);
}

DyadicStepFn expectation(const DyadicStepFn& f, int k) {
  if (k < 0) throw std::invalid_argument("generation must be nonnegative");
  if (k >= f.resolution()) return f;
  const std::size_t block = std::size_t{1} << (f.resolution() - k);
  std::vector<cd> vals(std::size_t{1} << k);
  for (std::size_t c = 0; c < vals.size(); ++c) {
    cd s = 0.0;
    for (std::size_t i = c * block; i < (c + 1) * block; ++i) s += f.values()[i];
    vals[c] = s / static_cast<double>(block);
  }
  return DyadicStepFn(k, std::move(vals));
}

DyadicStepFn haar_unit(int m) {
  return DyadicStepFn(m, std::vector<cd>(std::size_t{1} << m, cd(1.0)));
}

DyadicStepFn haar(const DyadicInterval& I, int m) {
  if (m < I.k + 1)
    throw std::invalid_argument("haar: resolution too coarse for this interval");
  const double h = std::pow(2.0, 0.5 * I.k);  // |I|^{-1/2}
  std::vector<cd> vals(std::size_t{1} << m, cd(0.0));
  const std::uint64_t lo = I.j << (m - I.k);
  const std::uint64_t mid = lo + (std::uint64_t{1} << (m - I.k - 1));
  const std::uint64_t hi = (I.j + 1) << (m - I.k);
  for (std::uint64_t i = lo; i < mid; ++i) vals[i] = -h;
  for (std::uint64_t i = mid; i < hi; ++i) vals[i] = h;
  return DyadicStepFn(m, std::move(vals));
}

HaarExpansion haar_analyze(const DyadicStepFn& f) {
  HaarExpansion e;
  e.resolution = f.resolution();
  // cascade of pairwise averages; at generation k the coefficient is
  // <f, h_I> = 2^{-k/2-1} (avg over right half - avg over left half)
  std::vector<cd> avg = f.values();
  for (int k = f.resolution() - 1; k >= 0; --k) {
    std::vector<cd> up(std::size_t{1} << k);
    const double w = std::pow(2.0, -0.5 * k - 1.0);
    for (std::uint64_t j = 0; j < up.size(); ++j) {
      const cd l = avg[2 * j], r = avg[2 * j + 1];
      up[j] = 0.5 * (l + r);
      e.coeffs[{k, j}] = w * (r - l);
    }
    avg = std::move(up);
  }
  e.c0 = avg[0];
  return e;
}

DyadicStepFn haar_synthesize(const HaarExpansion& e, int m) {
  std::vector<cd> avg(1, e.c0);
  for (int k = 0; k < m; ++k) {
    std::vector<cd> down(std::size_t{1} << (k + 1), cd(0.0));
    const double h = std::pow(2.0, 0.5 * k);
    for (std::uint64_t j = 0; j < avg.size(); ++j) {
      cd c = 0.0;
      if (auto it = e.coeffs.find({k, j}); it != e.coeffs.end()) c = it->second;
      down[2 * j] = avg[j] - c * h;
      down[2 * j + 1] = avg[j] + c * h;
    }
    avg = std::move(down);
  }
  return DyadicStepFn(m, std::move(avg));
}

}  // namespace dyana
