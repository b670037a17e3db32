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

#ifndef CONEXP_SPHERE_MAX_HPP_
#define CONEXP_SPHERE_MAX_HPP_

#include "conexp/subsphere.hpp"
#include "conexp/types.hpp"

namespace conexp {

struct SphereMaxResult {
  // max over |x| = 1 of |A x + b|.
  double value;
  // Stationarity multiplier: (lambda I - A^T A) x = A^T b, lambda >= lambda_max.
  double multiplier;
  // Every maximizer on S^{n-1}.
  Subsphere argmax;
  bool hard_case;
};

// Exact global maximum of |A x + b| over the unit sphere together with the
// complete maximizer set. This is the trust-region subproblem turned
// around: the quadratic is convex, so the maximizer sits at the largest
// Lagrange multiplier.
SphereMaxResult sphere_max(const AffineBallMap& phi, const Tolerances& tol);

}  // namespace conexp

#endif  // CONEXP_SPHERE_MAX_HPP_
