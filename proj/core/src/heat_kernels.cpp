// Copyright 2026 The gutzmer Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gutzmer/heat_kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <unordered_map>

#include "gutzmer/quadrature.hpp"
#include "gutzmer/special_functions.hpp"

namespace gutzmer {
namespace {

constexpr double kPi = std::numbers::pi;

// Values P_0..P_mmax at u = 1/tau, where d^m/dtau^m of
// tau^{-k} e^{-beta tau - c/tau} equals that function times P_m(1/tau).
// P_{m+1} = P_m q - u^2 dP_m/du with q = c u^2 - k u - beta.
void deriv_factors(double k, double beta, double c, double u, int mmax,
                   double* out) {
  std::vector<double> p{1.0};
  out[0] = 1.0;
  for (int m = 0; m < mmax; ++m) {
    std::vector<double> next(p.size() + 2, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += -beta * p[i];
      next[i + 1] += -k * p[i];
      next[i + 2] += c * p[i];
      if (i > 0) next[i + 1] -= static_cast<double>(i) * p[i];
    }
    p.swap(next);
    double v = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * u + p[i];
    out[m + 1] = v;
  }
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct CacheKey {
  int kind;
  int mmax;
  double tau;
  double r;
  bool operator==(const CacheKey& o) const {
    return kind == o.kind && mmax == o.mmax &&
           std::memcmp(&tau, &o.tau, sizeof tau) == 0 &&
           std::memcmp(&r, &o.r, sizeof r) == 0;
  }
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    std::uint64_t a, b;
    std::memcpy(&a, &k.tau, sizeof a);
    std::memcpy(&b, &k.r, sizeof b);
    std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
    h ^= b + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.kind * 131 + k.mmax);
    return static_cast<std::size_t>(h);
  }
};

class KernelCache {
 public:
  bool lookup(const CacheKey& key, std::vector<double>& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const CacheKey& key, const std::vector<double>& value) {
    std::unique_lock lock(mu_);
    if (map_.size() > kMaxEntries) map_.clear();
    map_.emplace(key, value);
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  static constexpr std::size_t kMaxEntries = 1u << 20;
  mutable std::shared_mutex mu_;
  std::unordered_map<CacheKey, std::vector<double>, CacheKeyHash> map_;
};

KernelCache& cache() {
  static KernelCache c;
  return c;
}

std::atomic<bool> g_cache_enabled{true};

// H^2 descent integral with derivatives taken under the integral sign;
// s = r + v^2 and cosh s - cosh r = 2 sinh(r + v^2/2) sinh(v^2/2).
std::vector<double> sphere_kernel_scaled(double tau, double r, int mmax) {
  const double u = 1.0 / tau;
  const double smax = std::sqrt(r * r + 240.0 * tau);
  const double vmax = std::sqrt(smax - r);
  const double pre = std::numbers::sqrt2 * std::pow(4.0 * kPi, -1.5) *
                     std::pow(tau, -1.5) * std::exp(-0.25 * tau);
  std::vector<double> pm(mmax + 1);
  auto eval = [&](int n, std::vector<double>& val, std::vector<double>& mag) {
    val.assign(mmax + 1, 0.0);
    mag.assign(mmax + 1, 0.0);
    const QuadratureRule rule = gauss_legendre(n, 0.0, vmax);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = rule.nodes[i];
      const double v2 = v * v;
      const double s = r + v2;
      const double h = 0.5 * v2;
      const double hc = h < 1e-5 ? 1.0 + h * h / 6.0 : std::sinh(h) / h;
      const double jac = 2.0 / std::sqrt(std::sinh(r + h) * hc);
      const double g = rule.weights[i] * s * std::exp(-v2 * (2.0 * r + v2) * 0.25 * u) * jac;
      deriv_factors(1.5, 0.25, 0.25 * s * s, u, mmax, pm.data());
      for (int m = 0; m <= mmax; ++m) {
        val[m] += g * pm[m];
        mag[m] += std::abs(g * pm[m]);
      }
    }
    for (int m = 0; m <= mmax; ++m) {
      val[m] *= pre;
      mag[m] *= pre;
    }
  };
  std::vector<double> prev, prev_mag, cur, cur_mag;
  int n = 32;
  eval(n, prev, prev_mag);
  const int cap = max_nodes();
  while (2 * n <= cap) {
    n *= 2;
    eval(n, cur, cur_mag);
    bool done = true;
    for (int m = 0; m <= mmax; ++m) {
      if (std::abs(cur[m] - prev[m]) > 1e-13 * std::max(std::abs(cur[m]), cur_mag[m] * 1e-3)) {
        done = false;
      }
    }
    prev.swap(cur);
    prev_mag.swap(cur_mag);
    if (done) break;
  }
  return prev;
}

}  // namespace

void set_kernel_cache_enabled(bool enabled) { g_cache_enabled = enabled; }
void clear_kernel_cache() { cache().clear(); }

std::vector<double> dual_heat_kernel_scaled(const SpaceModel& space, double tau,
                                            double r, int mmax) {
  if (!(tau > 0.0)) throw std::invalid_argument("dual heat kernel: tau must be > 0");
  if (mmax < 0) throw std::invalid_argument("dual heat kernel: m must be >= 0");
  r = std::abs(r);
  std::vector<double> out(mmax + 1);
  const double u = 1.0 / tau;
  switch (space.kind) {
    case SpaceKind::Circle: {
      const double base = 1.0 / std::sqrt(4.0 * kPi * tau);
      deriv_factors(0.5, 0.0, 0.25 * r * r, u, mmax, out.data());
      for (double& v : out) v *= base;
      return out;
    }
    case SpaceKind::Su2Zonal: {
      const double ratio = r < 1e-5 ? 1.0 - r * r / 6.0 : r / std::sinh(r);
      const double base = std::pow(4.0 * kPi * tau, -1.5) * ratio * std::exp(-tau);
      deriv_factors(1.5, 1.0, 0.25 * r * r, u, mmax, out.data());
      for (double& v : out) v *= base;
      return out;
    }
    case SpaceKind::Sphere2: {
      const CacheKey key{static_cast<int>(space.kind), mmax, tau, r};
      if (g_cache_enabled && cache().lookup(key, out)) return out;
      out = sphere_kernel_scaled(tau, r, mmax);
      if (g_cache_enabled) cache().insert(key, out);
      return out;
    }
  }
  return out;
}

double dual_heat_kernel(const SpaceModel& space, double tau, double r) {
  return dual_heat_kernel_dt(space, tau, r, 0);
}

double dual_heat_kernel_dt(const SpaceModel& space, double tau, double r, int m) {
  const std::vector<double> v = dual_heat_kernel_scaled(space, tau, r, m);
  return v[m] * std::exp(-r * r / (4.0 * tau));
}

double shifted_dt_scaled(const SpaceModel& space, double tau, double r, int m) {
  const std::vector<double> d = dual_heat_kernel_scaled(space, tau, r, m);
  const double rho2 = space.rho * space.rho;
  double acc = 0.0;
  for (int k = 0; k <= m; ++k) acc += binom(m, k) * std::pow(rho2, m - k) * d[k];
  return acc;
}

SeriesValue compact_heat_kernel(const SpaceModel& space, double t,
                                const ComplexPoint& z, int lmax) {
  if (!(t > 0.0)) throw std::invalid_argument("compact heat kernel: t must be > 0");
  std::complex<double> w;
  const auto e = embed_point(space, z);
  switch (space.kind) {
    case SpaceKind::Circle:
      w = std::cos(e[0]);
      break;
    case SpaceKind::Sphere2:
      w = e[2];
      break;
    case SpaceKind::Su2Zonal:
      w = e[0];
      break;
  }
  std::complex<double> sum = 0.0;
  double mag = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    const double c = zonal_weight(space, l) * dimension(space, l) *
                     std::exp(-t * eigenvalue(space, l));
    const std::complex<double> term = c * zonal_spherical(space, l, w);
    sum += term;
    mag += std::abs(term);
  }
  const double h = std::abs(z.h);
  double tail = 0.0;
  for (int l = lmax + 1; l < lmax + 100000; ++l) {
    const double logterm = std::log(zonal_weight(space, l) * dimension(space, l)) -
                           t * eigenvalue(space, l) + l * h;
    const double term = std::exp(logterm);
    tail += term;
    if (l > lmax + 2 && term < 1e-18 * (tail + mag) && 2.0 * t * (l + space.rho) > h) break;
  }
  if (tail > 1e-10 * mag) {
    throw TruncationInsufficient("heat kernel tail bound " + std::to_string(tail) +
                                 " exceeds 1e-10 of partial sum at lmax " +
                                 std::to_string(lmax));
  }
  return {sum, tail};
}

std::string_view to_string(WeightFamily family) {
  switch (family) {
    case WeightFamily::PT:
      return "PT";
    case WeightFamily::WM:
      return "WM";
    case WeightFamily::WM_DELTA:
      return "WM_DELTA";
    case WeightFamily::WM_BIG:
      return "WM_BIG";
    case WeightFamily::W_NEG:
      return "W_NEG";
  }
  return "PT";
}

namespace {

// Riemann-Liouville integral in the kernel time, scaled by e^{H^2/(2t)}.
WeightValue w_neg_scaled(const WeightFunction& w, double h) {
  const SpaceModel& sp = w.space;
  const double s = w.m_or_s;
  const double t2 = 2.0 * w.t;
  if (!(s > 0.0)) throw std::invalid_argument("W_NEG requires s > 0");
  h = std::abs(h);
  if (h == 0.0 && sp.kind != SpaceKind::Circle) {
    return {std::numeric_limits<double>::infinity(), false};
  }
  const double shift = 1.0 + sp.rho * sp.rho;
  const double r = 2.0 * h;
  auto integrand = [&](double tau) {
    const double k = dual_heat_kernel_scaled(sp, tau, r, 0)[0];
    return std::exp(tau * shift - h * h * (1.0 / tau - 1.0 / t2)) * k;
  };
  // [0, t]: tau = v^2, geometric panels in v toward 0.
  const double vtop = std::sqrt(w.t);
  std::vector<double> breaks{vtop};
  while (breaks.size() < 60) {
    const double next = breaks.back() * 0.5;
    if (h > 0.0 && next < h / 25.0) break;
    breaks.push_back(next);
  }
  const bool include_zero = h == 0.0 || breaks.back() >= h / 25.0;
  auto eval = [&](int n) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      const QuadratureRule q = gauss_legendre(n, breaks[i + 1], breaks[i]);
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double v = q.nodes[j];
        acc += q.weights[j] * 2.0 * v * std::pow(t2 - v * v, s - 1.0) * integrand(v * v);
      }
    }
    if (include_zero) {
      const QuadratureRule q = gauss_legendre(n, 0.0, breaks.back());
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double v = q.nodes[j];
        acc += q.weights[j] * 2.0 * v * std::pow(t2 - v * v, s - 1.0) * integrand(v * v);
      }
    }
    const QuadratureRule gj = gauss_jacobi(n, s - 1.0, 0.0, w.t, t2);
    for (std::size_t j = 0; j < gj.size(); ++j) acc += gj.weights[j] * integrand(gj.nodes[j]);
    return acc;
  };
  const Converged c = converge_by_doubling(eval, 16, 1e-12, 1e-300);
  return {c.value / std::tgamma(s), c.low_confidence};
}

}  // namespace

WeightValue weight_eval_scaled(const WeightFunction& w, double h) {
  if (!(w.t > 0.0)) throw std::invalid_argument("weight: t must be > 0");
  const double tau = 2.0 * w.t;
  const double r = 2.0 * std::abs(h);
  if (w.family == WeightFamily::W_NEG) return w_neg_scaled(w, h);
  const int m = static_cast<int>(std::lround(w.m_or_s));
  if (m < 0) throw std::invalid_argument("weight: m must be >= 0");
  const double rho2 = w.space.rho * w.space.rho;
  const std::vector<double> d = dual_heat_kernel_scaled(w.space, tau, r, m);
  switch (w.family) {
    case WeightFamily::PT:
      return {d[0], false};
    case WeightFamily::WM: {
      double acc = 0.0;
      for (int k = 0; k <= m; ++k) acc += binom(m, k) * std::pow(1.0 + rho2, m - k) * d[k];
      return {acc, false};
    }
    case WeightFamily::WM_DELTA:
    case WeightFamily::WM_BIG: {
      double acc = 0.0;
      for (int k = 0; k <= m; ++k) acc += binom(m, k) * std::pow(rho2, m - k) * d[k];
      const double base = w.family == WeightFamily::WM_BIG ? 1.0 + w.delta : w.delta;
      return {base * d[0] + acc, false};
    }
    case WeightFamily::W_NEG:
      break;
  }
  return {0.0, false};
}

WeightValue weight_eval(const WeightFunction& w, double h) {
  WeightValue v = weight_eval_scaled(w, h);
  v.value *= std::exp(-h * h / (2.0 * w.t));
  return v;
}

DeltaStar find_delta_star(const SpaceModel& space, double t, int m) {
  if (!(t > 0.0) || m < 1) throw std::invalid_argument("find_delta_star: need t > 0, m >= 1");
  const double tau = 2.0 * t;
  const double extent = 12.0 * std::sqrt(2.0 * t);
  auto deficit = [&](double h) {
    const double p = dual_heat_kernel_scaled(space, tau, 2.0 * h, 0)[0];
    return -shifted_dt_scaled(space, tau, 2.0 * h, m) / p;
  };
  const int n = 2000;
  std::vector<double> vals(n + 1);
  int best = 0;
  for (int i = 0; i <= n; ++i) {
    vals[i] = deficit(extent * i / n);
    if (vals[i] > vals[best]) best = i;
  }
  // Golden-section refinement of the grid maximum.
  double lo = extent * std::max(0, best - 1) / n;
  double hi = extent * std::min(n, best + 1) / n;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = deficit(x1), f2 = deficit(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = deficit(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = deficit(x1);
    }
  }
  double fmax = vals[best], argmax = extent * best / n;
  const double mid = 0.5 * (lo + hi);
  const double fmid = deficit(mid);
  if (fmid > fmax) {
    fmax = fmid;
    argmax = mid;
  }
  if (fmax > 1e6) throw NotFound("no delta <= 1e6 makes the weight nonnegative");
  DeltaStar out;
  out.delta = std::max(0.0, fmax);
  out.argmax_h = argmax;
  out.grid_extent = extent;
  double margin = std::numeric_limits<double>::infinity();
  for (double v : vals) margin = std::min(margin, out.delta - v);
  out.margin = margin;
  return out;
}

VerificationReport ao_envelope_check(const SpaceModel& space, double t,
                                     const std::vector<double>& grid) {
  VerificationReport rep;
  rep.check_name = "ao_envelope";
  rep.space = space.kind;
  rep.params["t"] = t;
  rep.params["grid_points"] = static_cast<double>(grid.size());
  rep.params["grid_max"] = grid.empty() ? 0.0 : *std::max_element(grid.begin(), grid.end());
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double r : grid) {
    const double k = dual_heat_kernel_scaled(space, t, r, 0)[0];
    const double env = std::sqrt(phi_factor(space, r)) * std::exp(-t * space.rho * space.rho);
    const double ratio = k / env;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.lhs = {lo};
  rep.rhs = {hi};
  rep.fitted_constants["c_lower"] = lo;
  rep.fitted_constants["c_upper"] = hi;
  const double spread = hi / lo;
  rep.fitted_constants["spread"] = spread;
  bool ok = std::isfinite(lo) && std::isfinite(hi) && lo > 0.0;
  switch (space.kind) {
    case SpaceKind::Circle: {
      const double exact = 1.0 / std::sqrt(4.0 * kPi * t);
      rep.rel_error = std::max(rel_diff(lo, exact), rel_diff(hi, exact));
      rep.tolerance = 1e-12;
      break;
    }
    case SpaceKind::Su2Zonal: {
      // closed form: the ratio is the flat constant
      const double exact = std::pow(4.0 * kPi * t, -1.5);
      rep.rel_error = std::max(rel_diff(lo, exact), rel_diff(hi, exact));
      rep.tolerance = 1e-12;
      break;
    }
    case SpaceKind::Sphere2:
      rep.rel_error = spread - 1.0;
      rep.tolerance = std::numeric_limits<double>::max();
      rep.note = "spread reported; no bound asserted";
      break;
  }
  rep.verdict = ok ? judge(rep.rel_error, rep.tolerance, false) : Verdict::Fail;
  return rep;
}

}  // namespace gutzmer
