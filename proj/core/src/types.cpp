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

#include "conexp/types.hpp"

#include <string>

#include "conexp/error.hpp"

namespace conexp {

void Tolerances::validate() const {
  if (!(positivity_tol > 0.0) || !(rank_tol > 0.0) || !(root_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (!(positivity_tol < 1e-3)) {
    throw Error(ErrorKind::InvalidArgument, "positivity_tol must be < 1e-3");
  }
}

AffineBallMap::AffineBallMap(Mat linear, Vec offset)
    : linear_(std::move(linear)), offset_(std::move(offset)) {
  const auto n = offset_.size();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  if (linear_.rows() != n || linear_.cols() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "linear part must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  if (!linear_.allFinite() || !offset_.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "non-finite entry");
  }
}

AffineBallMap AffineBallMap::identity(int n) {
  return {Mat::Identity(n, n), Vec::Zero(n)};
}

AffineBallMap AffineBallMap::constant(const Vec& value) {
  const auto n = value.size();
  return {Mat::Zero(n, n), value};
}

AffineBallMap AffineBallMap::compose(const AffineBallMap& inner) const {
  if (inner.dim() != dim()) {
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch in compose");
  }
  return {linear_ * inner.linear_, linear_ * inner.offset_ + offset_};
}

AffineBallMap AffineBallMap::power(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  // Accumulate from the original (A, b) each step: A_k = A A_{k-1},
  // b_k = A b_{k-1} + b.
  AffineBallMap result = identity(dim());
  for (int i = 0; i < k; ++i) result = compose(result);
  return result;
}

Vec AffineBallMap::preimage(const Vec& y) const {
  Eigen::FullPivLU<Mat> lu(linear_);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::InvalidArgument, "linear part is singular");
  }
  return lu.solve(y - offset_);
}

ConeLinearMap::ConeLinearMap(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorKind::InvalidArgument, "cone map must be square");
  }
  if (!matrix_.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "non-finite entry");
  }
}

bool in_lorentz_cone(const Vec& x, double slack) {
  const auto m = x.size();
  return x(m - 1) - x.head(m - 1).norm() >= -slack;
}

}  // namespace conexp
