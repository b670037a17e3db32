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

#ifndef CONEXP_CONE_HPP_
#define CONEXP_CONE_HPP_

#include "conexp/types.hpp"

namespace conexp {

// Extends x -> A x + b on the sole {x_{n+1} = 1} of L_{n+1} to the linear
// map [[A, b], [0, 1]].
ConeLinearMap homogenize(const AffineBallMap& phi);

struct Dehomogenized {
  AffineBallMap map;
  // T with homogenize(map) = T (psi / rho) T^{-1}; T preserves L_m.
  Mat basis_change;
  double spectral_radius;
  // Perron eigenvector of the adjoint, unit norm, in int(L_m).
  Vec dual_eigenvector;
};

// Restricts a primitive cone map to the sole cut out by the Perron
// eigenvector of its adjoint, after rescaling by the spectral radius and a
// Lorentz boost that moves that sole onto {x_m = 1}.
// Throws SpectralRadiusZero or BoundaryEigenvector.
Dehomogenized dehomogenize(const ConeLinearMap& psi, const Tolerances& tol);

// Perron pair by power iteration started at the cone's axis e_m.
struct PerronPair {
  double value;
  Vec vector;
  int iterations;
};
PerronPair power_iteration(const Mat& m, double rq_tol = 1e-12,
                           int max_iter = 100000);

struct LorentzPositivity {
  bool positive;
  // Set when the best S-procedure margin lies within tolerance of zero.
  bool indeterminate;
  // max over mu >= 0 of lambda_min(M^T J M - mu J).
  double margin;
  double multiplier;
};

// psi(L_m) subset of L_m, decided through the S-procedure: some mu >= 0
// makes M^T J M - mu J positive semidefinite, and M e_m has nonnegative
// height.
LorentzPositivity lorentz_positivity(const ConeLinearMap& psi,
                                     const Tolerances& tol);
bool is_lorentz_positive(const ConeLinearMap& psi, const Tolerances& tol);

// The boost B in SO^+(1, m-1) with B e_m = u for u in int(L_m) with
// u^T J u = 1 (J = diag(-1, ..., -1, 1)).
Mat lorentz_boost(const Vec& u);

}  // namespace conexp

#endif  // CONEXP_CONE_HPP_
