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

#include "gutzmer/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace gutzmer {
namespace {

constexpr double kPi = std::numbers::pi;

struct LegendreNodes {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

// Newton iteration on P_n from the Tricomi initial guesses. Accurate to a few
// ulp for the sizes used here.
LegendreNodes compute_legendre(int n) {
  LegendreNodes out;
  out.x.resize(n);
  out.w.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      const double pn = n == 0 ? 1.0 : p1;
      dp = n * (x * pn - p0) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.x[i] = -x;
    out.x[n - 1 - i] = x;
    out.w[i] = w;
    out.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) out.x[n / 2] = 0.0;
  return out;
}

const LegendreNodes& legendre_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LegendreNodes>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<LegendreNodes>(compute_legendre(n))).first;
  }
  return *it->second;
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (n == 1) return {{0.5 * (a + b)}, {b - a}, DomainTag::Interval};
  const LegendreNodes& ref = legendre_cached(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.x[i];
    rule.weights[i] = half * ref.w[i];
  }
  return rule;
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0) {
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  }
  const double ab = alpha + beta;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    jac(k, k) = (k == 0) ? (beta - alpha) / (ab + 2.0)
                         : (beta * beta - alpha * alpha) / den;
    if (k + 1 < n) {
      const double j = k + 1.0;
      double bk;
      if (k == 0) {
        bk = 4.0 * (1.0 + alpha) * (1.0 + beta) /
             ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      } else {
        const double s = 2.0 * j + ab;
        bk = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) /
             (s * s * (s + 1.0) * (s - 1.0));
      }
      jac(k, k + 1) = jac(k + 1, k) = std::sqrt(bk);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  const double scale = std::exp(log_mu0 + (ab + 1.0) * std::log(half));
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.nodes[i] = mid + half * eig.eigenvalues()(i);
    rule.weights[i] = scale * v0 * v0;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) throw std::invalid_argument("periodic_trapezoid: n must be >= 1");
  QuadratureRule rule;
  rule.domain = DomainTag::Periodic;
  rule.nodes.resize(n);
  rule.weights.assign(n, 2.0 * kPi / n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = 2.0 * kPi * i / n;
  return rule;
}

QuadratureRule halfline_gaussian(double t, double sigma_mult, int n) {
  if (!(t > 0.0)) throw std::invalid_argument("halfline_gaussian: t must be > 0");
  QuadratureRule rule = gauss_legendre(n, 0.0, sigma_mult * std::sqrt(2.0 * t));
  rule.domain = DomainTag::HalflineGaussian;
  return rule;
}

double radial_extent(const SpaceModel& space, double t, int lmax) {
  const double base = 12.0 * std::sqrt(2.0 * t);
  const double band = 2.0 * t * (lmax + space.rho) + 10.0 * std::sqrt(t);
  return std::max(base, band);
}

int max_nodes() {
  if (const char* env = std::getenv("GUTZMER_MAX_NODES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 2) return static_cast<int>(std::min<long>(v, 1L << 24));
  }
  return 16384;
}

Converged converge_by_doubling(const std::function<double(int)>& eval, int n0,
                               double rtol, double atol) {
  const int cap = max_nodes();
  int n = std::max(1, std::min(n0, cap));
  double prev = eval(n);
  while (2 * n <= cap) {
    n *= 2;
    const double cur = eval(n);
    if (std::abs(cur - prev) <= std::max(rtol * std::abs(cur), atol)) {
      return {cur, n, false};
    }
    prev = cur;
  }
  return {prev, n, true};
}

ConvergedComplex converge_by_doubling_complex(
    const std::function<std::complex<double>(int)>& eval, int n0, double rtol,
    double atol) {
  const int cap = max_nodes();
  int n = std::max(1, std::min(n0, cap));
  std::complex<double> prev = eval(n);
  while (2 * n <= cap) {
    n *= 2;
    const std::complex<double> cur = eval(n);
    if (std::abs(cur - prev) <= std::max(rtol * std::abs(cur), atol)) {
      return {cur, n, false};
    }
    prev = cur;
  }
  return {prev, n, true};
}

OrbitRule euler_grid(int n_alpha, int n_beta, int n_gamma) {
  OrbitRule rule;
  const QuadratureRule beta = gauss_legendre(n_beta, -1.0, 1.0);
  rule.points.reserve(static_cast<std::size_t>(n_alpha) * n_beta * n_gamma);
  rule.weights.reserve(rule.points.capacity());
  const double w0 = 1.0 / (n_alpha * 2.0 * n_gamma);
  for (int i = 0; i < n_alpha; ++i) {
    const double a = 2.0 * kPi * i / n_alpha;
    for (int j = 0; j < n_beta; ++j) {
      const double b = std::acos(beta.nodes[j]);
      for (int k = 0; k < n_gamma; ++k) {
        const double g = 2.0 * kPi * k / n_gamma;
        rule.points.push_back({a, b, g});
        rule.weights.push_back(w0 * beta.weights[j]);
      }
    }
  }
  return rule;
}

OrbitRule orbit_rule(const SpaceModel& space, int lmax) {
  OrbitRule rule;
  switch (space.kind) {
    case SpaceKind::Circle: {
      const int n = 2 * lmax + 2;
      for (int i = 0; i < n; ++i) {
        rule.points.push_back({2.0 * kPi * i / n, 0.0, 0.0});
        rule.weights.push_back(1.0 / n);
      }
      return rule;
    }
    case SpaceKind::Sphere2:
      return euler_grid(2 * lmax + 2, lmax + 2, 2 * lmax + 2);
    case SpaceKind::Su2Zonal: {
      // Hopf coordinates: s = cos^2(eta) is uniform under Haar measure, and
      // zonal integrands do not depend on xi2.
      const QuadratureRule s = gauss_legendre(lmax + 2, 0.0, 1.0);
      const int n_xi = 2 * lmax + 2;
      for (std::size_t j = 0; j < s.size(); ++j) {
        const double eta = std::acos(std::sqrt(s.nodes[j]));
        for (int i = 0; i < n_xi; ++i) {
          rule.points.push_back({eta, 2.0 * kPi * i / n_xi, 0.0});
          rule.weights.push_back(s.weights[j] / n_xi);
        }
      }
      return rule;
    }
  }
  return rule;
}

double integrate_class_su2(const std::function<double(double)>& f, int n) {
  // Midpoint rule: a class function is a cosine series in theta, and the
  // midpoint sum of cos(k theta) over [0, pi] vanishes for 0 < k < 2n.
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double th = (i + 0.5) * kPi / n;
    const double s = std::sin(th);
    acc += s * s * f(th);
  }
  return 2.0 / n * acc;
}

std::vector<std::array<double, 3>> halton_points(std::size_t count) {
  auto radical_inverse = [](std::size_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
      f /= base;
      r += f * static_cast<double>(i % base);
      i /= base;
    }
    return r;
  };
  std::vector<std::array<double, 3>> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = {radical_inverse(i + 1, 2), radical_inverse(i + 1, 3),
              radical_inverse(i + 1, 5)};
  }
  return pts;
}

}  // namespace gutzmer
