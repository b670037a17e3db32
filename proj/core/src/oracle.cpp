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

#include "conexp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "conexp/error.hpp"

namespace conexp::oracle {
namespace {

struct Candidate {
  double value;  // |A x + b|^2
  Vec x;
};

double objective(const AffineBallMap& phi, const Vec& x) {
  return phi(x).squaredNorm();
}

// Projected gradient ascent on the sphere: unit-length tangent steps of
// size `step`, halved whenever a step fails to improve.
Candidate ascend(const AffineBallMap& phi, Candidate c, int steps,
                 double step = 0.1) {
  for (int s = 0; s < steps && step > 1e-16; ++s) {
    const Vec grad = phi.linear().transpose() * phi(c.x);
    const Vec tangent = grad - grad.dot(c.x) * c.x;
    const double tn = tangent.norm();
    if (tn == 0.0) break;
    const Vec trial = (c.x + step * tangent / tn).normalized();
    const double val = objective(phi, trial);
    if (val > c.value) {
      c.x = trial;
      c.value = val;
    } else {
      step *= 0.5;
    }
  }
  return c;
}

// The `keep` best of `samples` uniform sphere points.
std::vector<Candidate> best_samples(const AffineBallMap& phi, int samples,
                                    std::uint64_t seed, int keep) {
  std::mt19937_64 rng(seed);
  std::vector<Candidate> best;
  best.reserve(keep + 1);
  auto worse = [](const Candidate& a, const Candidate& b) {
    return a.value > b.value;
  };
  for (int i = 0; i < samples; ++i) {
    Vec x = random_unit(phi.dim(), rng);
    const double val = objective(phi, x);
    if (static_cast<int>(best.size()) < keep) {
      best.push_back({val, std::move(x)});
      std::push_heap(best.begin(), best.end(), worse);
    } else if (val > best.front().value) {
      std::pop_heap(best.begin(), best.end(), worse);
      best.back() = {val, std::move(x)};
      std::push_heap(best.begin(), best.end(), worse);
    }
  }
  return best;
}

}  // namespace

double brute_sphere_max(const AffineBallMap& phi, int samples,
                        std::uint64_t seed, int refine_steps) {
  if (samples < 1000) {
    throw Error(ErrorKind::InvalidArgument, "need at least 1000 samples");
  }
  double best = 0.0;
  for (auto& c : best_samples(phi, samples, seed, 10)) {
    best = std::max(best, ascend(phi, std::move(c), refine_steps).value);
  }
  return std::sqrt(best);
}

int brute_contact_dim(const AffineBallMap& phi, int k, int samples,
                      std::uint64_t seed) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 0");
  const AffineBallMap iterate = phi.power(k);
  // Raw samples only hit full-dimensional contact sets, so the best ones
  // are pushed onto the maximizer set before the sphere test.
  const int keep = std::min(samples, 200);
  std::vector<Vec> images;
  for (auto& c : best_samples(iterate, samples, seed, keep)) {
    const Candidate r = ascend(iterate, std::move(c), 600);
    if (std::abs(std::sqrt(r.value) - 1.0) <= 1e-6) {
      images.push_back(iterate(r.x));
    }
  }
  if (images.empty()) return -1;
  const auto n = phi.dim();
  const auto count = static_cast<Eigen::Index>(images.size());
  Vec mean = Vec::Zero(n);
  for (const auto& p : images) mean += p;
  mean /= static_cast<double>(count);
  Mat centered(n, count);
  for (Eigen::Index i = 0; i < count; ++i) centered.col(i) = images[i] - mean;
  Eigen::JacobiSVD<Mat> svd(centered);
  const Vec spread = svd.singularValues() / std::sqrt(double(count));
  int dim = 0;
  while (dim < spread.size() && spread(dim) > 1e-4) ++dim;
  return dim;
}

SubsphereFit subsphere_fit(const std::vector<Vec>& points, double rank_tol) {
  if (points.empty()) {
    throw Error(ErrorKind::InvalidArgument, "no points to fit");
  }
  constexpr double kViolation = 1e-4;
  const auto n = points.front().size();
  const auto count = static_cast<Eigen::Index>(points.size());
  Vec mean = Vec::Zero(n);
  for (const auto& p : points) {
    if (std::abs(p.norm() - 1.0) > kViolation) {
      throw Error(ErrorKind::FitViolation, "point is off the unit sphere");
    }
    mean += p;
  }
  mean /= static_cast<double>(count);
  Mat centered(n, count);
  for (Eigen::Index i = 0; i < count; ++i) centered.col(i) = points[i] - mean;

  Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeThinU);
  const Vec spread = svd.singularValues() / std::sqrt(double(count));
  Eigen::Index rank = 0;
  while (rank < spread.size() && spread(rank) > rank_tol) ++rank;
  const Mat basis = svd.matrixU().leftCols(rank);
  const Vec center = mean - basis * (basis.transpose() * mean);
  const double r2 = 1.0 - center.squaredNorm();

  Subsphere sphere = rank == 0 || r2 <= 1e-12
                         ? Subsphere::point(center)
                         : Subsphere::make(center, std::sqrt(r2), basis, 1e-6);
  double residual = 0.0;
  for (const auto& p : points) residual = std::max(residual, sphere.distance(p));
  if (residual > kViolation) {
    throw Error(ErrorKind::FitViolation,
                "point deviates from the fitted subsphere by " +
                    std::to_string(residual));
  }
  return {std::move(sphere), residual};
}

}  // namespace conexp::oracle
