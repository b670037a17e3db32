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

#ifndef CONEXP_EXTREMAL_HPP_
#define CONEXP_EXTREMAL_HPP_

#include <optional>
#include <vector>

#include "conexp/certify.hpp"
#include "conexp/types.hpp"

namespace conexp {

// a_ii = 1, a_ij = 1 - c^min(i,j) (1-based indices).
Mat build_gram(int n, double c);

// First c in the sequence 1/2, 3/4, 7/8, ... for which build_gram(n, c)
// has minimum eigenvalue at least `margin`. Throws SearchExhausted.
double choose_c(int n, double margin = 1e-4);

struct LatitudePoints {
  // Latitude: every point has last coordinate sin(alpha).
  double alpha;
  // Columns x_1..x_n on E_{n,alpha}.
  Mat points;
};

// Unit vectors with the prescribed Gram matrix, all placed on one circle of
// latitude. Throws NotUnitDiagonal or NotPD.
LatitudePoints gram_to_latitude(const Mat& gram);

// x -> (lam x_1, ..., lam x_{n-1}, lam mu x_n + shift), lam = cos b / cos a,
// mu = tan a / tan b. Sends E_{n,alpha} onto E_{n,beta} and touches the
// sphere nowhere else.
class LatitudeLift {
 public:
  // Throws BadAngles unless 0 < alpha < beta < pi/2.
  LatitudeLift(int n, double alpha, double beta);

  int dim() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }
  double shift() const noexcept { return shift_; }

  AffineBallMap as_map() const;
  Vec operator()(const Vec& x) const;

 private:
  int n_;
  double alpha_, beta_, lambda_, mu_, shift_;
};

LatitudeLift latitude_lift(int n, double alpha, double beta);

// Orthogonal R with R sources_i = targets_i, built from matched orthonormal
// bases of the two spans and extended to the complements with det(R) = +1
// when the complement is nontrivial. Columns are the points.
// Throws DistanceMismatch when pairwise distances differ by > 1e-8.
Mat procrustes_rotation(const Mat& sources, const Mat& targets);

struct ExtremalWitness {
  int n;
  double c;
  double alpha;
  double beta;
  // Columns x_0, x_1, ..., x_{n+1}.
  Mat points;
  // The lift; absent for n = 1 where latitude circles degenerate.
  std::optional<LatitudeLift> lift;
  // The positive factor (the lift as a map, or its n = 1 analogue).
  AffineBallMap psi;
  Mat rotation;
  AffineBallMap map;
  PrimitivityCertificate certificate;

  Vec point(int i) const { return points.col(i); }
  // Orbit witness usable with primitivity_index.
  ContactWitness contact_witness() const { return {point(1), n}; }
};

// Extremal primitive map Phi = R o Psi with index n + 1, all witnesses
// verified. Throws WitnessViolation when a numerical check fails.
ExtremalWitness synthesize(int n, std::optional<double> c = std::nullopt,
                           const Tolerances& tol = {});

}  // namespace conexp

#endif  // CONEXP_EXTREMAL_HPP_
