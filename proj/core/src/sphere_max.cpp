// Copyright 2026 The conexp Authors.
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

#include "conexp/sphere_max.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace conexp {
namespace {

// |x(lam)| for x(lam) = sum_i gamma_i / (lam - d_i) v_i, together with
// d|x|/dlam.
struct SecularEval {
  double norm;
  double dnorm;
};

SecularEval secular(const Vec& d, const Vec& gamma, double lam) {
  double s2 = 0.0;
  double s3 = 0.0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const double w = 1.0 / (lam - d(i));
    const double t = gamma(i) * gamma(i) * w * w;
    s2 += t;
    s3 += t * w;
  }
  const double norm = std::sqrt(s2);
  return {norm, norm > 0.0 ? -s3 / norm : 0.0};
}

// Root of |x(lam)| = 1 to the right of lmax, by Newton on 1/|x| - 1 (which
// is nearly linear in lam) safeguarded by bisection. Returns false when no
// sign change can be bracketed, i.e. |x| < 1 arbitrarily close to lmax.
bool solve_secular(const Vec& d, const Vec& gamma, double lmax,
                   double gnorm, const Tolerances& tol, double* root) {
  double lo = lmax + tol.rank_tol * (1.0 + lmax);
  double hi = lmax + gnorm + 1.0;
  // Walk the lower end towards the pole until |x(lo)| > 1.
  for (int i = 0; secular(d, gamma, lo).norm <= 1.0; ++i) {
    const double next = lmax + 0.5 * (lo - lmax);
    if (i > 200 || next <= lmax || next == lo) return false;
    lo = next;
  }
  double lam = hi;
  for (int it = 0; it < 500; ++it) {
    const SecularEval e = secular(d, gamma, lam);
    const double resid = e.norm - 1.0;
    if (std::abs(resid) <= tol.root_tol) break;
    if (resid > 0.0) {
      lo = lam;
    } else {
      hi = lam;
    }
    // psi = 1/|x| - 1, psi' = -|x|'/|x|^2.
    const double psi = 1.0 / e.norm - 1.0;
    const double dpsi = -e.dnorm / (e.norm * e.norm);
    double next = dpsi > 0.0 ? lam - psi / dpsi : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == lam || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                                         std::max(1.0, std::abs(lam))) {
      break;
    }
    lam = next;
  }
  *root = lam;
  return true;
}

}  // namespace

SphereMaxResult sphere_max(const AffineBallMap& phi, const Tolerances& tol) {
  const int n = phi.dim();
  const Mat& a = phi.linear();
  const Vec& b = phi.offset();
  const Mat h = a.transpose() * a;
  const Vec g = a.transpose() * b;

  Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  const Vec& d = eig.eigenvalues();  // ascending
  const Mat& v = eig.eigenvectors();
  const double lmax = d(n - 1);

  // Top eigenspace: eigenvalues within rank_tol * lmax of lmax.
  const double cluster = tol.rank_tol * std::max(lmax, 0.0);
  int top = 0;
  while (top < n && lmax - d(n - 1 - top) <= cluster) ++top;
  const Mat vtop = v.rightCols(top);
  const Vec gamma = v.transpose() * g;
  const double gnorm = g.norm();
  const double gtop = gamma.tail(top).norm();

  auto evaluate = [&](const Vec& x) { return (a * x + b).norm(); };

  auto hard_case = [&]() -> SphereMaxResult {
    Vec xhat = Vec::Zero(n);
    for (int i = 0; i < n - top; ++i) {
      xhat += gamma(i) / (lmax - d(i)) * v.col(i);
    }
    const double r2 = 1.0 - xhat.squaredNorm();
    if (r2 <= tol.rank_tol) {
      const Vec x = xhat.normalized();
      return {evaluate(x), lmax, Subsphere::point(x), true};
    }
    const double radius = std::sqrt(r2);
    Subsphere argmax = Subsphere::make(xhat, radius, vtop, 1e-6);
    // The top eigenvector attains the largest value within the cluster.
    return {evaluate(xhat + radius * v.col(n - 1)), lmax, std::move(argmax),
            true};
  };

  // Hard case: the linear term misses the top eigenspace. The test is
  // taken at ball scale so rounding-level offsets (b ~ 1e-16) count as 0.
  if (gtop <= tol.rank_tol * std::max(gnorm, 1.0)) {
    Vec xhat = Vec::Zero(n);
    for (int i = 0; i < n - top; ++i) {
      xhat += gamma(i) / (lmax - d(i)) * v.col(i);
    }
    if (xhat.squaredNorm() <= 1.0) return hard_case();
  }

  double lam = 0.0;
  if (!solve_secular(d, gamma, lmax, gnorm, tol, &lam)) return hard_case();
  Vec x = Vec::Zero(n);
  for (int i = 0; i < n; ++i) x += gamma(i) / (lam - d(i)) * v.col(i);
  x.normalize();
  return {evaluate(x), lam, Subsphere::point(x), false};
}

}  // namespace conexp
