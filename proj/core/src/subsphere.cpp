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

#include "conexp/subsphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conexp/error.hpp"

namespace conexp {

Subsphere Subsphere::empty(int ambient_dim) {
  return {true, Vec::Zero(ambient_dim), 0.0, Mat(ambient_dim, 0)};
}

Subsphere Subsphere::point(const Vec& p) {
  return {false, p, 0.0, Mat(p.size(), 0)};
}

Subsphere Subsphere::full(int ambient_dim) {
  return {false, Vec::Zero(ambient_dim), 1.0,
          Mat::Identity(ambient_dim, ambient_dim)};
}

Subsphere Subsphere::make(Vec center, double radius, Mat basis, double tol) {
  if (basis.rows() != center.size()) {
    throw Error(ErrorKind::InvalidArgument, "basis/center size mismatch");
  }
  if (radius < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "negative radius");
  }
  if (radius == 0.0 && basis.cols() != 0) {
    throw Error(ErrorKind::InvalidArgument, "a point carries no basis");
  }
  Subsphere s{false, std::move(center), radius, std::move(basis)};
  if (s.invariant_residual() > tol) {
    throw Error(ErrorKind::InvalidArgument, "subsphere invariants violated");
  }
  return s;
}

Subsphere Subsphere::from_affine(const Vec& p0, const Mat& directions,
                                 double rank_tol) {
  Mat basis = orthonormal_span(directions, rank_tol);
  Vec center = p0 - basis * (basis.transpose() * p0);
  const double r2 = 1.0 - center.squaredNorm();
  if (basis.cols() == 0 || r2 <= rank_tol) {
    const double norm = center.norm();
    return point(norm > 0.0 ? Vec(center / norm) : center);
  }
  return {false, std::move(center), std::sqrt(r2), std::move(basis)};
}

int Subsphere::aff_dim() const noexcept {
  if (empty_) return -1;
  if (radius_ == 0.0) return 0;
  return static_cast<int>(basis_.cols());
}

Vec Subsphere::at(const Vec& coords) const {
  if (empty_) throw Error(ErrorKind::InvalidArgument, "empty subsphere");
  if (basis_.cols() == 0) return center_;
  return center_ + radius_ * (basis_ * coords.normalized());
}

Vec Subsphere::sample(std::mt19937_64& rng) const {
  if (empty_) throw Error(ErrorKind::InvalidArgument, "empty subsphere");
  if (basis_.cols() == 0) return center_;
  return at(random_unit(static_cast<int>(basis_.cols()), rng));
}

std::vector<Vec> Subsphere::sample(std::mt19937_64& rng, int count) const {
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample(rng));
  return out;
}

double Subsphere::distance(const Vec& x) const {
  if (empty_) return std::numeric_limits<double>::infinity();
  const Vec v = x - center_;
  if (basis_.cols() == 0) return v.norm();
  const Vec in_plane = basis_.transpose() * v;
  const double perp2 = (v - basis_ * in_plane).squaredNorm();
  const double radial = in_plane.norm() - radius_;
  return std::sqrt(std::max(0.0, perp2) + radial * radial);
}

bool Subsphere::same_set(const Subsphere& other, double tol) const {
  if (empty_ || other.empty_) return empty_ == other.empty_;
  if (aff_dim() != other.aff_dim()) return false;
  if ((center_ - other.center_).norm() > tol) return false;
  if (std::abs(radius_ - other.radius_) > tol) return false;
  const Mat p = basis_ * basis_.transpose();
  const Mat q = other.basis_ * other.basis_.transpose();
  return (p - q).cwiseAbs().maxCoeff() <= tol || basis_.cols() == 0;
}

bool Subsphere::subset_of(const Subsphere& other, double tol) const {
  if (empty_) return true;
  if (other.empty_) return false;
  if (basis_.cols() == 0) return other.distance(center_) <= tol;
  // The points center +- radius * b_i affinely span this subsphere's hull.
  for (Eigen::Index i = 0; i < basis_.cols(); ++i) {
    for (double s : {1.0, -1.0}) {
      if (other.distance(center_ + s * radius_ * basis_.col(i)) > tol) {
        return false;
      }
    }
  }
  return true;
}

double Subsphere::invariant_residual() const {
  if (empty_) return 0.0;
  double r = std::abs(center_.squaredNorm() + radius_ * radius_ - 1.0);
  if (basis_.cols() > 0) {
    r = std::max(r, (basis_.transpose() * center_).cwiseAbs().maxCoeff());
    const Mat gram = basis_.transpose() * basis_;
    r = std::max(
        r, (gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff());
  }
  return r;
}

Mat orthonormal_span(const Mat& m, double rank_tol) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Vec random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
  } while (v.norm() == 0.0);
  return v.normalized();
}

}  // namespace conexp
