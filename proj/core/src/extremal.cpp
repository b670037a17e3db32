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

#include "conexp/extremal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conexp/error.hpp"

namespace conexp {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::WitnessViolation, what);
}

}  // namespace

Mat build_gram(int n, double c) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (!(c > 0.0 && c < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "c must lie in (0, 1)");
  }
  Mat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = i == j ? 1.0 : 1.0 - std::pow(c, std::min(i, j) + 1);
    }
  }
  return a;
}

double choose_c(int n, double margin) {
  double c = 0.5;
  for (int step = 0; step <= 60; ++step) {
    const Mat shifted = build_gram(n, c) - margin * Mat::Identity(n, n);
    if (Eigen::LLT<Mat>(shifted).info() == Eigen::Success) return c;
    c = 0.5 * (1.0 + c);
  }
  throw Error(ErrorKind::SearchExhausted,
              "no c with the requested Gram margin for n = " + std::to_string(n));
}

LatitudePoints gram_to_latitude(const Mat& gram) {
  const auto n = gram.rows();
  if (n < 1 || gram.cols() != n) {
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square");
  }
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be symmetric");
  }
  if ((gram.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::NotUnitDiagonal, "Gram diagonal must be 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(gram, Eigen::EigenvaluesOnly);
  Eigen::LLT<Mat> llt(gram);
  if (llt.info() != Eigen::Success || !(eig.eigenvalues()(0) > 1e-12)) {
    throw Error(ErrorKind::NotPD, "Gram matrix is not positive definite");
  }
  // gram = Y^T Y with Y = L^T; the hyperplane {z : <z, h> = 1} holds every
  // column of Y when Y^T h = 1, and its distance to 0 is 1/|h|.
  const Mat lower = llt.matrixL();
  const Mat y = lower.transpose();
  const Vec h = lower.triangularView<Eigen::Lower>().solve(Vec::Ones(n));
  const double hn = h.norm();
  const double alpha = std::asin(std::min(1.0, 1.0 / hn));

  // Householder reflection sending h/|h| to e_n.
  Vec v = h / hn;
  v(n - 1) -= 1.0;
  Mat q = Mat::Identity(n, n);
  if (v.norm() > 1e-15) q -= 2.0 * v * v.transpose() / v.squaredNorm();
  return {alpha, q * y};
}

LatitudeLift::LatitudeLift(int n, double alpha, double beta)
    : n_(n), alpha_(alpha), beta_(beta) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (!(0.0 < alpha && alpha < beta && beta < std::numbers::pi / 2)) {
    throw Error(ErrorKind::BadAngles, "need 0 < alpha < beta < pi/2");
  }
  lambda_ = std::cos(beta) / std::cos(alpha);
  mu_ = std::tan(alpha) / std::tan(beta);
  shift_ = std::sqrt((1.0 - lambda_ * lambda_) * (1.0 - mu_ * mu_));
}

AffineBallMap LatitudeLift::as_map() const {
  Vec diag = Vec::Constant(n_, lambda_);
  diag(n_ - 1) = lambda_ * mu_;
  return {Mat(diag.asDiagonal()), shift_ * Vec::Unit(n_, n_ - 1)};
}

Vec LatitudeLift::operator()(const Vec& x) const {
  Vec y = lambda_ * x;
  y(n_ - 1) = lambda_ * mu_ * x(n_ - 1) + shift_;
  return y;
}

LatitudeLift latitude_lift(int n, double alpha, double beta) {
  return {n, alpha, beta};
}

Mat procrustes_rotation(const Mat& sources, const Mat& targets) {
  const auto n = sources.rows();
  const auto k = sources.cols();
  if (targets.rows() != n || targets.cols() != k || k > n) {
    throw Error(ErrorKind::InvalidArgument, "source/target shape mismatch");
  }
  constexpr double kDistTol = 1e-8;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(sources.col(i).norm() - targets.col(i).norm()) > kDistTol) {
      throw Error(ErrorKind::DistanceMismatch,
                  "norm mismatch at point " + std::to_string(i));
    }
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double ds = (sources.col(i) - sources.col(j)).norm();
      const double dt = (targets.col(i) - targets.col(j)).norm();
      if (std::abs(ds - dt) > kDistTol) {
        throw Error(ErrorKind::DistanceMismatch,
                    "distance mismatch at pair (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
    }
  }

  // Orthonormal basis of span(sources) as sources * coeffs; the same
  // combination of targets is orthonormal because the Gram matrices agree.
  Mat qs(n, 0);
  Mat qt(n, 0);
  if (k > 0) {
    Eigen::ColPivHouseholderQR<Mat> qr(sources);
    qr.setThreshold(1e-10);
    const auto r = qr.rank();
    const Mat r11 = qr.matrixR().topLeftCorner(r, r).triangularView<Eigen::Upper>();
    Mat padded = Mat::Zero(k, r);
    padded.topRows(r) =
        r11.triangularView<Eigen::Upper>().solve(Mat::Identity(r, r));
    const Mat coeffs = qr.colsPermutation() * padded;
    qs = sources * coeffs;
    qt = targets * coeffs;
  }
  const auto r = qs.cols();

  auto complete = [n, r](const Mat& basis) {
    if (r == 0) return Mat(Mat::Identity(n, n));
    Mat full = Eigen::HouseholderQR<Mat>(basis).householderQ() *
               Mat::Identity(n, n);
    full.leftCols(r) = basis;
    return full;
  };
  Mat from = complete(qs);
  Mat to = complete(qt);
  Mat rot = to * from.transpose();
  if (r < n && rot.determinant() < 0.0) {
    to.col(n - 1) *= -1.0;
    rot = to * from.transpose();
  }
  return rot;
}

ExtremalWitness synthesize(int n, std::optional<double> c_opt,
                           const Tolerances& tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  tol.validate();
  const double c = c_opt ? *c_opt : choose_c(n);
  if (!(c > 0.0 && c < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "c must lie in (0, 1)");
  }

  std::optional<LatitudeLift> lift;
  Mat x(n, n + 2);
  double alpha = std::numbers::pi / 2;
  double beta = std::numbers::pi / 2;
  Mat rotation;
  Mat psi_linear;
  Vec psi_offset;

  if (n == 1) {
    // S^0 = {-1, 1} has no circle of latitude below the pole; the limiting
    // lift x -> c x + (1 - c) fixes x_1 = 1 and R = -1 sends it to -1.
    x(0, 1) = 1.0;
    psi_linear = Mat::Constant(1, 1, c);
    psi_offset = Vec::Constant(1, 1.0 - c);
    rotation = Mat::Constant(1, 1, -1.0);
  } else {
    const Mat gram = build_gram(n, c);
    const LatitudePoints lat = gram_to_latitude(gram);
    alpha = lat.alpha;
    // cos^2(beta) / cos^2(alpha) = c.
    beta = std::acos(std::sqrt(c) * std::cos(alpha));
    lift.emplace(n, alpha, beta);
    x.middleCols(1, n) = lat.points;
    Mat y(n, n);
    for (int i = 0; i < n; ++i) y.col(i) = (*lift)(lat.points.col(i));
    // R y_i = x_{i+1} for 1 <= i <= n-1.
    rotation = procrustes_rotation(y.leftCols(n - 1), lat.points.rightCols(n - 1));
    const AffineBallMap psi_map = lift->as_map();
    psi_linear = psi_map.linear();
    psi_offset = psi_map.offset();
  }

  AffineBallMap psi(psi_linear, psi_offset);
  AffineBallMap phi(rotation * psi_linear, rotation * psi_offset);
  x.col(n + 1) = phi(x.col(n));
  x.col(0) = phi.preimage(x.col(1));

  ExtremalWitness w{n,      c,   alpha,      beta, std::move(x), lift,
                    psi,    rotation, phi, {}};

  constexpr double kGramTol = 1e-10;
  constexpr double kOrbitTol = 1e-8;
  if (n >= 2) {
    const Mat inner = w.points.middleCols(1, n).transpose() *
                      w.points.middleCols(1, n);
    require((inner - build_gram(n, c)).cwiseAbs().maxCoeff() < kGramTol,
            "Gram matrix of x_1..x_n does not match");
    for (int i = 1; i <= n; ++i) {
      require(std::abs(w.points(n - 1, i) - std::sin(alpha)) < kGramTol,
              "x_" + std::to_string(i) + " is off the latitude circle");
    }
  }
  const Mat rtr = rotation.transpose() * rotation;
  require((rtr - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < kGramTol,
          "R is not orthogonal");
  for (int i = 1; i <= n + 1; ++i) {
    require(std::abs(w.points.col(i).norm() - 1.0) < kGramTol,
            "x_" + std::to_string(i) + " is off the sphere");
  }
  for (int i = 0; i <= n; ++i) {
    require((phi(w.points.col(i)) - w.points.col(i + 1)).norm() < kOrbitTol,
            "orbit relation fails at x_" + std::to_string(i));
  }
  require(w.points.col(0).norm() > 1.0, "x_0 lies in the ball");

  CertifyOptions opts;
  opts.witnesses.push_back(w.contact_witness());
  w.certificate = primitivity_index(phi, tol, opts);
  require(w.certificate.verdict == Verdict::Primitive &&
              w.certificate.index == n + 1,
          "certified index is " + std::to_string(w.certificate.index) +
              ", expected " + std::to_string(n + 1));
  for (int k = 0; k <= n + 1; ++k) {
    require(w.certificate.chain[k].aff_dim() == n - k,
            "contact chain dimension mismatch at k = " + std::to_string(k));
  }
  return w;
}

}  // namespace conexp
