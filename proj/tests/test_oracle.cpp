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

#include <cmath>
#include <numbers>
#include <random>

#include "conexp/certify.hpp"
#include "conexp/error.hpp"
#include "conexp/extremal.hpp"
#include "conexp/oracle.hpp"
#include "conexp/sphere_max.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace conexp;

TEST_CASE("brute_sphere_max examples") {
  const AffineBallMap half(0.5 * Mat::Identity(3, 3), Vec::Zero(3));
  CHECK(std::abs(oracle::brute_sphere_max(half, 1000, 1) - 0.5) < 1e-12);
  CHECK(std::abs(oracle::brute_sphere_max(half, 1000, 99) - 0.5) < 1e-12);
  Vec b(2);
  b << 0.3, 0.0;
  CHECK(oracle::brute_sphere_max(AffineBallMap(Mat::Zero(2, 2), b), 1000, 1) == 0.3);
}

TEST_CASE("brute_sphere_max brackets the exact value from below") {
  std::mt19937_64 rng(7);
  const AffineBallMap phi(testing::random_gaussian(16, rng).reshaped(4, 4),
                          testing::random_gaussian(4, rng));
  const double brute = oracle::brute_sphere_max(phi, 20000, 7);
  const double exact = sphere_max(phi, {}).value;
  CHECK(brute <= exact * (1.0 + 1e-14));
  CHECK(exact <= brute + 1e-6);
}

TEST_CASE("brute_sphere_max rejects tiny sample counts") {
  CHECK_THROWS_AS(oracle::brute_sphere_max(AffineBallMap::identity(2), 10, 1), Error);
}

TEST_CASE("brute_contact_dim examples") {
  const AffineBallMap half(0.5 * Mat::Identity(3, 3), Vec::Zero(3));
  CHECK(oracle::brute_contact_dim(half, 1, 2000, 3) == -1);
  std::mt19937_64 rng(3);
  const AffineBallMap rot(testing::random_orthogonal(3, rng), Vec::Zero(3));
  CHECK(oracle::brute_contact_dim(rot, 1, 2000, 3) == 3);
  const ExtremalWitness w = synthesize(3);
  CHECK(oracle::brute_contact_dim(w.map, 1, 20000, 3) == 2);
}

TEST_CASE("brute_contact_dim agrees with the certified chain") {
  for (int n = 2; n <= 4; ++n) {
    const ExtremalWitness w = synthesize(n);
    for (int k = 1; k <= n + 1; ++k) {
      CHECK(oracle::brute_contact_dim(w.map, k, 20000, 100u + k) ==
            w.certificate.chain[k].aff_dim());
    }
  }
}

TEST_CASE("subsphere_fit examples") {
  Vec p(3);
  p << 0.0, 0.6, 0.8;
  const oracle::SubsphereFit single = oracle::subsphere_fit({p});
  CHECK(single.sphere.aff_dim() == 0);
  CHECK((single.sphere.center() - p).norm() < 1e-14);
  CHECK(single.sphere.radius() == 0.0);

  const oracle::SubsphereFit pair = oracle::subsphere_fit({p, Vec(-p)});
  CHECK(pair.sphere.aff_dim() == 1);
  CHECK(pair.sphere.center().norm() < 1e-12);
  CHECK(pair.sphere.radius() == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<Vec> circle;
  for (int i = 0; i < 12; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 12.0;
    Vec x(3);
    x << std::sqrt(3.0) / 2 * std::cos(t), std::sqrt(3.0) / 2 * std::sin(t), 0.5;
    circle.push_back(x);
  }
  const oracle::SubsphereFit lat = oracle::subsphere_fit(circle);
  Vec center(3);
  center << 0, 0, 0.5;
  CHECK(lat.sphere.aff_dim() == 2);
  CHECK((lat.sphere.center() - center).norm() < 1e-12);
  CHECK(lat.sphere.radius() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(lat.max_residual < 1e-12);
}

TEST_CASE("subsphere_fit flags points off the sphere") {
  Vec a(2), b(2), c(2);
  a << 1, 0;
  b << 0, 1;
  c << 0.5, 0.5;
  try {
    oracle::subsphere_fit({a, b, c});
    FAIL("expected FitViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FitViolation);
  }
}

TEST_CASE("subsphere_fit recovers certified contact sets") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 4;
    const AffineBallMap phi = testing::random_positive_map(n, rng, 1 + t % 3);
    const Subsphere s = sphere_max(phi, {}).argmax;
    if (s.is_empty() || s.aff_dim() == 0) continue;
    const oracle::SubsphereFit fit = oracle::subsphere_fit(s.sample(rng, 4 * n + 4));
    CHECK(fit.max_residual < 1e-5);
    CHECK((fit.sphere.center() - s.center()).norm() < 1e-5);
    CHECK(std::abs(fit.sphere.radius() - s.radius()) < 1e-5);
    CHECK(fit.sphere.aff_dim() == s.aff_dim());
  }
}
