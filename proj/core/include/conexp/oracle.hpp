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

#ifndef CONEXP_ORACLE_HPP_
#define CONEXP_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "conexp/subsphere.hpp"
#include "conexp/types.hpp"

// Sampling baselines. Nothing here calls the exact solvers.
namespace conexp::oracle {

// Sampled maximum of |A x + b| on the sphere, refined by projected
// gradient ascent from the 10 best samples. A lower bound on the true max.
double brute_sphere_max(const AffineBallMap& phi, int samples,
                        std::uint64_t seed, int refine_steps = 100);

// Affine hull dimension of the sampled contact set of Phi^k
// (-1 when no sample reaches the sphere within 1e-6).
int brute_contact_dim(const AffineBallMap& phi, int k, int samples,
                      std::uint64_t seed);

struct SubsphereFit {
  Subsphere sphere;
  // Largest distance from an input point to the fitted subsphere.
  double max_residual;
};

// Least-squares subsphere through points on S^{n-1}. Throws FitViolation
// when some point is farther than 1e-4 from the fit.
SubsphereFit subsphere_fit(const std::vector<Vec>& points,
                           double rank_tol = 1e-6);

}  // namespace conexp::oracle

#endif  // CONEXP_ORACLE_HPP_
