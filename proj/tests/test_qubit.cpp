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
#include "conexp/cone.hpp"
#include "conexp/error.hpp"
#include "conexp/extremal.hpp"
#include "conexp/qubit.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace conexp;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

Eigen::Vector2d eigenvalues(const Mat2c& m) {
  return Eigen::SelfAdjointEigenSolver<Mat2c>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

AffineBallMap linear3(double a, double b, double c) {
  return {Eigen::Vector3d(a, b, c).asDiagonal().toDenseMatrix(), Vec::Zero(3)};
}

}  // namespace

TEST_CASE("Pauli coordinates round trip") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Mat2c h = Mat2c::Random();
    h = (h + h.adjoint()).eval();
    CHECK((from_pauli_coordinates(pauli_coordinates(h)) - h).norm() < 1e-14);
    const Vec2c psi = random_pure_state(rng);
    const Eigen::Vector3d r = bloch_vector(projector(psi));
    CHECK(r.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((density_from_bloch(r) - projector(psi)).norm() < 1e-12);
  }
}

TEST_CASE("wielandt_kraus at (pi/6, pi/3)") {
  const KrausChannel ch = wielandt_kraus(kPi / 6, kPi / 3);
  const Mat2c& a = ch.kraus()[0];
  const Mat2c& b = ch.kraus()[1];
  const double r3 = std::sqrt(3.0) / 2;
  CHECK(std::abs(a(0, 0) - r3) < 1e-15);
  CHECK(std::abs(a(1, 1) - 0.5) < 1e-15);
  CHECK(std::abs(a(0, 1)) == 0.0);
  CHECK(std::abs(b(0, 1) - r3) < 1e-15);
  CHECK(std::abs(b(1, 0) - 0.5) < 1e-15);
  CHECK((a.adjoint() * a + b.adjoint() * b - Mat2c::Identity()).norm() < 1e-15);
  CHECK(choi_cp_check(transfer_matrix(ch)).is_cp);
}

TEST_CASE("wielandt_params at (pi/6, pi/3)") {
  const WielandtParams p = wielandt_params(kPi / 6, kPi / 3);
  CHECK(p.theta == doctest::Approx(kPi / 4).epsilon(1e-14));
  CHECK(p.delta == doctest::Approx(kPi / 6).epsilon(1e-14));
  CHECK(std::abs(p.psi_plus.dot(p.psi_minus)) < 1e-15);
  const double overlap = std::abs(p.phi_plus.dot(p.phi_minus));
  CHECK(overlap > 0.0);
  CHECK(overlap < 1.0);
}

TEST_CASE("equal or out-of-range angles are rejected") {
  CHECK(kind_of([] { wielandt_kraus(0.4, 0.4); }) == ErrorKind::EqualAngles);
  CHECK(kind_of([] { wielandt_channel(0.4, 0.4); }) == ErrorKind::EqualAngles);
  CHECK(kind_of([] { wielandt_params(0.0, 0.4); }) == ErrorKind::BadAngles);
  CHECK(kind_of([] { wielandt_params(0.4, kPi / 2); }) == ErrorKind::BadAngles);
}

TEST_CASE("only psi+ and psi- have pure outputs") {
  const WielandtParams p = wielandt_params(kPi / 6, kPi / 3);
  const PureContactStates s = pure_contact_states(p);
  const Eigen::Vector2d ev = eigenvalues(s.out_plus);
  CHECK(std::abs(ev(1) - 1.0) < 1e-10);
  CHECK(std::abs(ev(0)) < 1e-10);
  CHECK(std::abs(s.out_plus_top - 1.0) < 1e-10);
  CHECK(std::abs(s.out_minus_top - 1.0) < 1e-10);
  CHECK((s.out_plus - projector(p.phi_plus)).norm() < 1e-10);
  CHECK((s.out_minus - projector(p.phi_minus)).norm() < 1e-10);
  CHECK(s.spurious == 0);
  CHECK(s.max_other_purity < 1.0 - 1e-6);
}

TEST_CASE("pure output iff the Kraus images are proportional") {
  const WielandtParams p = wielandt_params(0.3, 1.2);
  const KrausChannel ch = wielandt_kraus(0.3, 1.2);
  const Mat2c& a = ch.kraus()[0];
  const Mat2c& b = ch.kraus()[1];
  CHECK(kraus_outputs_proportional(a, b, p.psi_plus));
  CHECK(kraus_outputs_proportional(a, b, p.psi_minus));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    const Vec2c psi = random_pure_state(rng);
    const bool pure = purity(ch(projector(psi))) > 1.0 - 1e-9;
    CHECK(pure == kraus_outputs_proportional(a, b, psi, 1e-4));
  }
}

TEST_CASE("generic_unitary") {
  const WielandtParams p = wielandt_params(kPi / 6, kPi / 3);
  const Mat2c u = generic_unitary(p.phi_plus, p.phi_minus, p.psi_plus, p.psi_minus);
  CHECK((u.adjoint() * u - Mat2c::Identity()).norm() < 1e-12);
  CHECK((u * p.phi_plus - p.psi_minus).norm() < 1e-10);
  const Vec2c img = u * p.phi_minus;
  CHECK(1.0 - std::abs(p.psi_plus.dot(img)) >= 1e-3);
  CHECK(1.0 - std::abs(p.psi_minus.dot(img)) >= 1e-3);

  // phi+ already equal to psi-.
  Vec2c other(std::cos(0.3), std::sin(0.3));
  const Mat2c v = generic_unitary(p.psi_minus, other, p.psi_plus, p.psi_minus);
  CHECK((v * p.psi_minus - p.psi_minus).norm() < 1e-10);
  CHECK(1.0 - std::abs(p.psi_plus.dot(v * other)) >= 1e-3);
  CHECK(1.0 - std::abs(p.psi_minus.dot(v * other)) >= 1e-3);

  const Vec2c e0(1.0, 0.0);
  const Vec2c e1(0.0, 1.0);
  CHECK(kind_of([&] { generic_unitary(e0, e1, p.psi_plus, p.psi_minus); }) ==
        ErrorKind::DegenerateOverlap);
  CHECK(kind_of([&] { generic_unitary(e0, e0, p.psi_plus, p.psi_minus); }) ==
        ErrorKind::DegenerateOverlap);
}

TEST_CASE("wielandt_channel orbit of the contact states") {
  for (auto [a, b] : {std::pair{kPi / 6, kPi / 3}, std::pair{kPi / 8, kPi / 3},
                      std::pair{1.2, 0.3}}) {
    const WielandtParams p = wielandt_params(a, b);
    const KrausChannel ch = wielandt_channel(a, b);
    const Mat2c rp = projector(p.psi_plus);
    const Mat2c rm = projector(p.psi_minus);
    CHECK((ch(rp) - rm).norm() < 1e-10);
    const Mat2c next = ch(rm);
    CHECK(purity(next) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((next - rp).norm() > 1e-3);
    CHECK((next - rm).norm() > 1e-3);
    const Mat2c third = ch(next);
    CHECK((third - ch(ch(ch(rp)))).norm() < 1e-10);
    CHECK(purity(third) < 1.0 - 1e-6);
  }
}

TEST_CASE("wielandt channels certify index 3") {
  for (auto [a, b] : {std::pair{kPi / 6, kPi / 3}, std::pair{kPi / 8, kPi / 3},
                      std::pair{0.3, 1.2}, std::pair{1.2, 0.3}}) {
    const KrausChannel ch = wielandt_channel(a, b);
    CHECK(ch.trace_preservation_residual() <= 1e-10);
    CHECK(choi_cp_check(transfer_matrix(ch)).min_eigenvalue >= -1e-9);
    const PrimitivityCertificate cert = channel_index(ch);
    CHECK(cert.verdict == Verdict::Primitive);
    CHECK(cert.index == 3);
  }
}

TEST_CASE("the first contact set of the Wielandt channel is the pair psi+-") {
  const WielandtParams p = wielandt_params(kPi / 6, kPi / 3);
  const PrimitivityCertificate cert = channel_index(wielandt_channel(kPi / 6, kPi / 3));
  REQUIRE(cert.chain.size() == 4);
  const Subsphere& pre = cert.chain[1].preimage;
  CHECK(pre.aff_dim() == 1);
  CHECK(pre.contains(bloch_vector(projector(p.psi_plus)), 1e-6));
  CHECK(pre.contains(bloch_vector(projector(p.psi_minus)), 1e-6));
  CHECK(cert.chain[2].aff_dim() == 0);
}

TEST_CASE("channel_to_bloch examples") {
  const KrausChannel id({Mat2c::Identity()});
  const AffineBallMap bid = channel_to_bloch(id);
  CHECK((bid.linear() - Mat::Identity(3, 3)).norm() < 1e-14);
  CHECK(bid.offset().norm() < 1e-14);

  std::vector<Mat2c> dep;
  for (int i = 0; i < 4; ++i) dep.push_back(0.5 * pauli(i));
  const AffineBallMap bdep = channel_to_bloch(KrausChannel(dep));
  CHECK(bdep.linear().norm() < 1e-14);
  CHECK(bdep.offset().norm() < 1e-14);
  CHECK(channel_index(KrausChannel(dep)).index == 1);

  const AffineBallMap bx = channel_to_bloch(KrausChannel({pauli(1)}));
  CHECK((bx.linear() - linear3(1, -1, -1).linear()).norm() < 1e-14);
  CHECK(channel_index(KrausChannel({pauli(1)})).verdict == Verdict::NotPrimitive);
}

TEST_CASE("non trace-preserving Kraus lists are rejected") {
  CHECK(kind_of([] { KrausChannel({Mat2c::Identity() * 0.9}); }) ==
        ErrorKind::NotTracePreserving);
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 1) = 0.2;
  CHECK(kind_of([&] { hermitian_to_bloch(HermitianMapMatrix(m)); }) ==
        ErrorKind::NotTracePreserving);
}

TEST_CASE("bloch_to_qubit_map examples") {
  const HermitianMapMatrix id = bloch_to_qubit_map(AffineBallMap::identity(3));
  CHECK((id.matrix() - Eigen::Matrix4d::Identity()).norm() < 1e-15);
  const ChoiCheck cid = choi_cp_check(id);
  CHECK(cid.is_cp);
  CHECK((cid.eigenvalues - Eigen::Vector4d(0, 0, 0, 2)).norm() < 1e-12);

  // Transposition flips the sign of r2.
  const HermitianMapMatrix tr = bloch_to_qubit_map(linear3(1, -1, 1));
  Mat2c x;
  x << Complex(0.3, 0), Complex(0.1, 0.4), Complex(0.1, -0.4), Complex(0.7, 0);
  CHECK((tr(x) - x.transpose()).norm() < 1e-14);
  const ChoiCheck ctr = choi_cp_check(tr);
  CHECK_FALSE(ctr.is_cp);
  CHECK(ctr.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));

  // A single reflection in another axis is a rotated transpose.
  const ChoiCheck cz = choi_cp_check(bloch_to_qubit_map(linear3(1, 1, -1)));
  CHECK_FALSE(cz.is_cp);
  CHECK(cz.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("the extremal ball map gives a positive non-CP qubit map of index 4") {
  const ExtremalWitness w = synthesize(3);
  const HermitianMapMatrix m = bloch_to_qubit_map(w.map);
  CHECK(m.is_trace_preserving());
  const ChoiCheck c = choi_cp_check(m);
  CHECK_FALSE(c.is_cp);
  CHECK(c.min_eigenvalue < -1e-3);
  const AffineBallMap back = hermitian_to_bloch(m);
  CHECK((back.linear() - w.map.linear()).norm() < 1e-14);
  CHECK((back.offset() - w.map.offset()).norm() < 1e-14);
  const ConeLinearMap cone = hermitian_to_cone(m);
  CHECK(is_lorentz_positive(cone, {}));
  CHECK((cone_to_hermitian(cone).matrix() - m.matrix()).norm() < 1e-15);
  const auto cert = primitivity_index(back, {}, {{}, {w.contact_witness()}});
  CHECK(cert.index == 4);
}

TEST_CASE("random channels stay CPTP and match their Bloch action") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const KrausChannel ch = random_channel(1 + t % 4, rng);
    CHECK(ch.trace_preservation_residual() <= 1e-10);
    const HermitianMapMatrix ptm = transfer_matrix(ch);
    CHECK(ptm.is_trace_preserving());
    CHECK(choi_cp_check(ptm).min_eigenvalue >= -1e-9);
    const AffineBallMap bloch = channel_to_bloch(ch);
    CHECK((bloch_to_qubit_map(bloch).matrix() - ptm.matrix()).norm() < 1e-12);
    for (int s = 0; s < 50; ++s) {
      const Mat2c rho = projector(random_pure_state(rng));
      const Eigen::Vector3d expected = bloch_vector(ch(rho));
      CHECK((bloch(bloch_vector(rho)) - expected).norm() < 1e-10);
      CHECK((ptm(rho) - ch(rho)).norm() < 1e-12);
    }
  }
}

TEST_CASE("composition of Kraus channels matches composition of maps") {
  std::mt19937_64 rng(13);
  const KrausChannel a = random_channel(2, rng);
  const KrausChannel b = random_channel(3, rng);
  const AffineBallMap ab = channel_to_bloch(a.compose(b));
  const AffineBallMap ref = channel_to_bloch(a).compose(channel_to_bloch(b));
  CHECK((ab.linear() - ref.linear()).norm() < 1e-12);
  CHECK((ab.offset() - ref.offset()).norm() < 1e-12);
}

TEST_CASE("random CPTP channels: no circular contact and index at most 3") {
  std::mt19937_64 rng(14);
  int primitive = 0;
  for (int t = 0; t < 150; ++t) {
    const KrausChannel ch = random_channel(1 + t % 3, rng);
    PrimitivityCertificate cert;
    try {
      cert = channel_index(ch);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AmbiguousMargin);
      continue;
    }
    for (const ChainRecord& r : cert.chain) CHECK(r.aff_dim() != 2);
    if (cert.verdict == Verdict::Primitive) {
      ++primitive;
      CHECK(cert.index <= 3);
    }
  }
  CHECK(primitive > 50);
}
