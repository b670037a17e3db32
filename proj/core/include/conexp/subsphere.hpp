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

#ifndef CONEXP_SUBSPHERE_HPP_
#define CONEXP_SUBSPHERE_HPP_

#include <random>
#include <vector>

#include "conexp/types.hpp"

namespace conexp {

// Intersection of S^{n-1} with an affine subspace, stored as
//   { center + radius * u : u unit vector in span(basis) }
// where center is the point of the affine hull closest to the origin.
// A point (radius == 0) has an empty basis. aff_dim() is the dimension of
// the affine hull and is -1 for the empty set.
class Subsphere {
 public:
  static Subsphere empty(int ambient_dim);
  static Subsphere point(const Vec& p);
  static Subsphere full(int ambient_dim);
  // `basis` columns must be orthonormal and orthogonal to `center`;
  // throws InvalidArgument when the invariants fail at tolerance `tol`.
  static Subsphere make(Vec center, double radius, Mat basis,
                        double tol = 1e-8);
  // Renormalizes an arbitrary affine parametrization p0 + span(directions)
  // of a subsphere: directions are orthonormalized with rank cutoff
  // `rank_tol`, the center is re-projected and the radius recomputed from
  // |center|. Collapses to a point when 1 - |center|^2 <= rank_tol.
  static Subsphere from_affine(const Vec& p0, const Mat& directions,
                               double rank_tol);

  bool is_empty() const noexcept { return empty_; }
  int ambient_dim() const noexcept { return static_cast<int>(center_.size()); }
  int aff_dim() const noexcept;
  const Vec& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  const Mat& basis() const noexcept { return basis_; }

  // Point center + radius * u for u in span(basis) given in basis
  // coordinates (coords need not be normalized; it is normalized here).
  Vec at(const Vec& coords) const;
  // Uniform random point; requires !is_empty().
  Vec sample(std::mt19937_64& rng) const;
  std::vector<Vec> sample(std::mt19937_64& rng, int count) const;
  // Euclidean distance from x to the set (infinity when empty).
  double distance(const Vec& x) const;
  bool contains(const Vec& x, double tol) const { return distance(x) <= tol; }
  // Point-set equality up to tol (same affine hull, same center).
  bool same_set(const Subsphere& other, double tol) const;
  // Every point of *this lies within tol of `other`.
  bool subset_of(const Subsphere& other, double tol) const;
  // Largest violation of the representation invariants.
  double invariant_residual() const;

 private:
  Subsphere(bool empty, Vec center, double radius, Mat basis)
      : empty_(empty),
        center_(std::move(center)),
        radius_(radius),
        basis_(std::move(basis)) {}

  bool empty_;
  Vec center_;
  double radius_;
  Mat basis_;
};

// Orthonormal basis (columns) of span(columns of m) via SVD with the
// relative singular value cutoff `rank_tol`.
Mat orthonormal_span(const Mat& m, double rank_tol);

// Unit vector drawn uniformly from S^{n-1} via Gaussian normalization.
Vec random_unit(int n, std::mt19937_64& rng);

}  // namespace conexp

#endif  // CONEXP_SUBSPHERE_HPP_
