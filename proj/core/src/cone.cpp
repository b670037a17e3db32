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

#include "conexp/cone.hpp"

#include <algorithm>
#include <cmath>

#include "conexp/error.hpp"

namespace conexp {
namespace {

Vec lorentz_signature(int m) {
  Vec j = Vec::Constant(m, -1.0);
  j(m - 1) = 1.0;
  return j;
}

double min_eigenvalue(const Mat& sym) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

}  // namespace

ConeLinearMap homogenize(const AffineBallMap& phi) {
  const int n = phi.dim();
  Mat m = Mat::Zero(n + 1, n + 1);
  m.topLeftCorner(n, n) = phi.linear();
  m.topRightCorner(n, 1) = phi.offset();
  m(n, n) = 1.0;
  return ConeLinearMap(std::move(m));
}

PerronPair power_iteration(const Mat& m, double rq_tol, int max_iter) {
  const auto dim = m.rows();
  Vec v = Vec::Unit(dim, dim - 1);
  double rq = 0.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    Vec w = m * v;
    const double next = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) return {0.0, v, it + 1};
    v = w / norm;
    if (it > 0 && std::abs(next - rq) < rq_tol) {
      rq = next;
      ++it;
      break;
    }
    rq = next;
  }
  if (v(dim - 1) < 0.0) v = -v;
  return {rq, v, it};
}

Mat lorentz_boost(const Vec& u) {
  const auto m = u.size();
  const auto n = m - 1;
  const Vec p = u.head(n);
  const double gamma = u(n);
  Mat b = Mat::Identity(m, m);
  // |p|^2 = gamma^2 - 1, so (gamma - 1)/|p|^2 = 1/(gamma + 1).
  b.topLeftCorner(n, n) += p * p.transpose() / (gamma + 1.0);
  b.topRightCorner(n, 1) = p;
  b.bottomLeftCorner(1, n) = p.transpose();
  b(n, n) = gamma;
  return b;
}

Dehomogenized dehomogenize(const ConeLinearMap& psi, const Tolerances& tol) {
  tol.validate();
  const Mat& m = psi.matrix();
  const int dim = psi.dim();
  const double scale = std::max(1.0, m.norm());

  const PerronPair primal = power_iteration(m);
  if (!(std::abs(primal.value) > tol.rank_tol * scale)) {
    throw Error(ErrorKind::SpectralRadiusZero,
                "power iteration found spectral radius ~ 0");
  }
  const double rho = std::abs(primal.value);

  Vec f = power_iteration(m.transpose()).vector;
  f.normalize();
  if (f(dim - 1) < 0.0) f = -f;
  if (!(f(dim - 1) - f.head(dim - 1).norm() > tol.rank_tol)) {
    throw Error(ErrorKind::BoundaryEigenvector,
                "adjoint Perron vector is not interior to the cone");
  }

  // u = J f / sqrt(f^T J f) lies in int(L) with u^T J u = 1; the boost B
  // with B e_m = u satisfies e_m^T B^{-1} proportional to f^T.
  const Vec j = lorentz_signature(dim);
  const Vec jf = j.cwiseProduct(f);
  const Vec u = jf / std::sqrt(f.dot(jf));
  const Mat boost = lorentz_boost(u);
  const Mat inv = j.asDiagonal() * boost * j.asDiagonal();
  const Mat reduced = inv * (m / rho) * boost;

  const int n = dim - 1;
  AffineBallMap map(reduced.topLeftCorner(n, n), reduced.topRightCorner(n, 1));
  return {std::move(map), inv, rho, f};
}

LorentzPositivity lorentz_positivity(const ConeLinearMap& psi,
                                     const Tolerances& tol) {
  tol.validate();
  const Mat& m = psi.matrix();
  const int dim = psi.dim();
  const Vec j = lorentz_signature(dim);
  const Mat q = m.transpose() * j.asDiagonal() * m;
  const Mat jm = j.asDiagonal();
  const double scale = std::max(1.0, m.squaredNorm());

  // lambda_min(Q - mu J) is concave in mu; feasibility needs Q_mm >= mu.
  auto margin_at = [&](double mu) { return min_eigenvalue(q - mu * jm); };
  double lo = 0.0;
  double hi = std::max(0.0, q(dim - 1, dim - 1));
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = margin_at(x1);
  double f2 = margin_at(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = margin_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = margin_at(x1);
    }
  }
  double best_mu = f1 > f2 ? x1 : x2;
  double best = std::max(f1, f2);
  for (double mu : {0.0, std::max(0.0, q(dim - 1, dim - 1))}) {
    const double val = margin_at(mu);
    if (val > best) {
      best = val;
      best_mu = mu;
    }
  }

  const double band = tol.positivity_tol * scale;
  const bool oriented = m(dim - 1, dim - 1) >= -band;
  LorentzPositivity out;
  out.margin = best;
  out.multiplier = best_mu;
  out.positive = oriented && best >= -band;
  out.indeterminate = std::abs(best) <= band;
  return out;
}

bool is_lorentz_positive(const ConeLinearMap& psi, const Tolerances& tol) {
  return lorentz_positivity(psi, tol).positive;
}

}  // namespace conexp
