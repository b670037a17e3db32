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

#ifndef CONEXP_TYPES_HPP_
#define CONEXP_TYPES_HPP_

#include <Eigen/Dense>

namespace conexp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Numerical thresholds shared by every certification routine.
struct Tolerances {
  // Half-width of the "contact" band around 1 for norm comparisons.
  double positivity_tol = 1e-8;
  // Relative cutoff for eigenvalue clustering and rank decisions.
  double rank_tol = 1e-9;
  // Residual bound for the secular equation and exact-contact detection.
  double root_tol = 1e-12;

  // Throws InvalidArgument unless all fields are positive and
  // positivity_tol < 1e-3.
  void validate() const;
};

// x -> A x + b on R^n; the unit ball B_n is the body of interest.
class AffineBallMap {
 public:
  AffineBallMap(Mat linear, Vec offset);

  static AffineBallMap identity(int n);
  static AffineBallMap constant(const Vec& value);

  int dim() const noexcept { return static_cast<int>(offset_.size()); }
  const Mat& linear() const noexcept { return linear_; }
  const Vec& offset() const noexcept { return offset_; }

  Vec operator()(const Vec& x) const { return linear_ * x + offset_; }

  // (*this) o inner, i.e. x -> A (A' x + b') + b.
  AffineBallMap compose(const AffineBallMap& inner) const;
  // k-fold self composition; power(0) is the identity.
  AffineBallMap power(int k) const;
  // Throws InvalidArgument when the linear part is singular.
  Vec preimage(const Vec& y) const;

  bool is_constant() const { return linear_.isZero(0.0); }

 private:
  Mat linear_;
  Vec offset_;
};

// Linear map on R^m meant to act on the Lorentz cone L_m; the last
// coordinate is the height.
class ConeLinearMap {
 public:
  explicit ConeLinearMap(Mat matrix);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Mat& matrix() const noexcept { return matrix_; }

 private:
  Mat matrix_;
};

// True if x lies in L_m with margin `slack` (x_m - |x'| >= -slack).
bool in_lorentz_cone(const Vec& x, double slack = 0.0);

}  // namespace conexp

#endif  // CONEXP_TYPES_HPP_
