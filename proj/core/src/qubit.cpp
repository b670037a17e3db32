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

#include "conexp/qubit.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "conexp/error.hpp"

namespace conexp {
namespace {

constexpr Complex kI{0.0, 1.0};

Complex inner(const Vec2c& u, const Vec2c& v) { return u.dot(v); }

Eigen::Matrix4d cone_permutation() {
  // (t, r1, r2, r3) -> (r1, r2, r3, t)
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p(0, 1) = p(1, 2) = p(2, 3) = p(3, 0) = 1.0;
  return p;
}

}  // namespace

const Mat2c& pauli(int i) {
  static const std::array<Mat2c, 4> sigma = [] {
    std::array<Mat2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(i));
}

Eigen::Vector4cd pauli_coordinates(const Mat2c& x) {
  Eigen::Vector4cd c;
  for (int i = 0; i < 4; ++i) c(i) = (pauli(i) * x).trace();
  return c;
}

Mat2c from_pauli_coordinates(const Eigen::Vector4cd& coords) {
  Mat2c x = Mat2c::Zero();
  for (int i = 0; i < 4; ++i) x += coords(i) * pauli(i);
  return 0.5 * x;
}

Eigen::Vector3d bloch_vector(const Mat2c& rho) {
  return pauli_coordinates(rho).tail<3>().real();
}

Mat2c density_from_bloch(const Eigen::Vector3d& r) {
  Eigen::Vector4cd c;
  c << 1.0, r(0), r(1), r(2);
  return from_pauli_coordinates(c);
}

Mat2c projector(const Vec2c& psi) { return psi * psi.adjoint(); }

double purity(const Mat2c& rho) { return (rho * rho).trace().real(); }

KrausChannel::KrausChannel(std::vector<Mat2c> kraus, double tp_tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "channel needs a Kraus operator");
  }
  const double resid = trace_preservation_residual();
  if (!(resid <= tp_tol)) {
    throw Error(ErrorKind::NotTracePreserving,
                "sum K^* K deviates from I by " + std::to_string(resid));
  }
}

Mat2c KrausChannel::operator()(const Mat2c& x) const {
  Mat2c out = Mat2c::Zero();
  for (const auto& k : kraus_) out += k * x * k.adjoint();
  return out;
}

double KrausChannel::trace_preservation_residual() const {
  Mat2c sum = Mat2c::Zero();
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - Mat2c::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel KrausChannel::compose(const KrausChannel& inner) const {
  std::vector<Mat2c> out;
  out.reserve(kraus_.size() * inner.kraus_.size());
  for (const auto& k : kraus_) {
    for (const auto& l : inner.kraus_) out.push_back(k * l);
  }
  return KrausChannel(std::move(out), 1e-9);
}

Mat2c HermitianMapMatrix::operator()(const Mat2c& x) const {
  const Eigen::Vector4cd out = m_.cast<Complex>() * pauli_coordinates(x);
  return from_pauli_coordinates(out);
}

bool HermitianMapMatrix::is_trace_preserving(double tol) const {
  Eigen::RowVector4d first = m_.row(0);
  first(0) -= 1.0;
  return first.cwiseAbs().maxCoeff() <= tol;
}

WielandtParams wielandt_params(double alpha, double beta) {
  const double half = std::numbers::pi / 2;
  if (!(alpha > 0.0 && alpha < half && beta > 0.0 && beta < half)) {
    throw Error(ErrorKind::BadAngles, "angles must lie in (0, pi/2)");
  }
  if (std::abs(alpha - beta) <= 1e-12) {
    throw Error(ErrorKind::EqualAngles, "alpha and beta must differ");
  }
  WielandtParams p{};
  p.alpha = alpha;
  p.beta = beta;
  p.theta = std::atan(std::sqrt(std::sin(2 * alpha) / std::sin(2 * beta)));
  p.delta = std::atan(std::sqrt(std::tan(alpha) / std::tan(beta)));
  p.psi_plus << std::cos(p.theta), std::sin(p.theta);
  p.psi_minus << std::cos(p.theta), -std::sin(p.theta);
  p.phi_plus << std::cos(p.delta), std::sin(p.delta);
  p.phi_minus << std::cos(p.delta), -std::sin(p.delta);
  return p;
}

KrausChannel wielandt_kraus(double alpha, double beta) {
  wielandt_params(alpha, beta);
  Mat2c a;
  Mat2c b;
  a << std::cos(alpha), 0, 0, std::cos(beta);
  b << 0, std::sin(beta), std::sin(alpha), 0;
  return KrausChannel({a, b});
}

bool kraus_outputs_proportional(const Mat2c& a, const Mat2c& b,
                                const Vec2c& psi, double tol) {
  const Vec2c u = a * psi;
  const Vec2c v = b * psi;
  const double scale = u.norm() * v.norm();
  if (scale == 0.0) return true;
  return std::abs(u(0) * v(1) - u(1) * v(0)) <= tol * scale;
}

PureContactStates pure_contact_states(const WielandtParams& params,
                                      std::uint64_t seed) {
  const KrausChannel psi = wielandt_kraus(params.alpha, params.beta);
  PureContactStates out{};
  out.rho_plus = projector(params.psi_plus);
  out.rho_minus = projector(params.psi_minus);
  out.out_plus = psi(out.rho_plus);
  out.out_minus = psi(out.rho_minus);
  auto top = [](const Mat2c& m) {
    Eigen::SelfAdjointEigenSolver<Mat2c> eig(m, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(1);
  };
  out.out_plus_top = top(out.out_plus);
  out.out_minus_top = top(out.out_minus);

  auto probe = [&](const Vec2c& state) {
    const double fp = std::norm(inner(params.psi_plus, state));
    const double fm = std::norm(inner(params.psi_minus, state));
    if (std::max(fp, fm) > 1.0 - 1e-3) return;
    const double pur = purity(psi(projector(state)));
    out.max_other_purity = std::max(out.max_other_purity, pur);
    if (pur > 1.0 - 1e-6) ++out.spurious;
  };
  // Real amplitudes (cos t, sin t) cover the real projective line.
  constexpr int kCircle = 3600;
  for (int i = 0; i < kCircle; ++i) {
    const double t = std::numbers::pi * i / kCircle;
    probe(Vec2c(std::cos(t), std::sin(t)));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20000; ++i) probe(random_pure_state(rng));
  return out;
}

Mat2c generic_unitary(const Vec2c& phi_plus, const Vec2c& phi_minus,
                      const Vec2c& psi_plus, const Vec2c& psi_minus) {
  const Complex a = inner(phi_plus, phi_minus);
  if (!(std::abs(a) > 1e-12 && std::abs(a) < 1.0 - 1e-12)) {
    throw Error(ErrorKind::DegenerateOverlap,
                "|<phi+, phi->| must lie strictly between 0 and 1");
  }
  const Vec2c rest = phi_minus - a * phi_plus;
  const double b = rest.norm();
  const Vec2c chi = rest / b;
  const Vec2c omega(-std::conj(psi_minus(1)), std::conj(psi_minus(0)));

  constexpr int kPhases = 64;
  constexpr double kMargin = 1e-3;
  double best_margin = -1.0;
  Complex best_phase = 1.0;
  for (int j = 0; j < kPhases; ++j) {
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * j / kPhases);
    const Vec2c image = a * psi_minus + b * phase * omega;
    const double margin =
        1.0 - std::max(std::abs(inner(psi_plus, image)),
                       std::abs(inner(psi_minus, image)));
    if (margin > best_margin) {
      best_margin = margin;
      best_phase = phase;
    }
  }
  if (best_margin < kMargin) {
    throw Error(ErrorKind::DegenerateOverlap,
                "no phase separates U phi- from psi+ and psi-");
  }
  Mat2c from;
  Mat2c to;
  from << phi_plus, chi;
  to << psi_minus, best_phase * omega;
  return to * from.adjoint();
}

KrausChannel wielandt_channel(double alpha, double beta) {
  const WielandtParams p = wielandt_params(alpha, beta);
  const KrausChannel psi = wielandt_kraus(alpha, beta);
  const Mat2c u = generic_unitary(p.phi_plus, p.phi_minus, p.psi_plus,
                                  p.psi_minus);
  std::vector<Mat2c> kraus;
  for (const auto& k : psi.kraus()) kraus.push_back(u * k);
  return KrausChannel(std::move(kraus));
}

HermitianMapMatrix transfer_matrix(const KrausChannel& ch) {
  Eigen::Matrix4d t;
  for (int j = 0; j < 4; ++j) {
    const Mat2c image = ch(pauli(j));
    for (int i = 0; i < 4; ++i) {
      t(i, j) = 0.5 * (pauli(i) * image).trace().real();
    }
  }
  return HermitianMapMatrix(t);
}

AffineBallMap hermitian_to_bloch(const HermitianMapMatrix& m) {
  if (!m.is_trace_preserving()) {
    throw Error(ErrorKind::NotTracePreserving,
                "transfer matrix first row is not (1, 0, 0, 0)");
  }
  return {m.matrix().bottomRightCorner<3, 3>(), m.matrix().bottomLeftCorner<3, 1>()};
}

AffineBallMap channel_to_bloch(const KrausChannel& ch) {
  return hermitian_to_bloch(transfer_matrix(ch));
}

HermitianMapMatrix bloch_to_qubit_map(const AffineBallMap& phi) {
  if (phi.dim() != 3) {
    throw Error(ErrorKind::InvalidArgument, "Bloch maps act on R^3");
  }
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  t(0, 0) = 1.0;
  t.bottomLeftCorner<3, 1>() = phi.offset();
  t.bottomRightCorner<3, 3>() = phi.linear();
  return HermitianMapMatrix(t);
}

ConeLinearMap hermitian_to_cone(const HermitianMapMatrix& m) {
  const Eigen::Matrix4d p = cone_permutation();
  return ConeLinearMap(Mat(p * m.matrix() * p.transpose()));
}

HermitianMapMatrix cone_to_hermitian(const ConeLinearMap& m) {
  if (m.dim() != 4) throw Error(ErrorKind::InvalidArgument, "need a 4x4 map");
  const Eigen::Matrix4d p = cone_permutation();
  return HermitianMapMatrix(p.transpose() * Eigen::Matrix4d(m.matrix()) * p);
}

Mat4c choi_matrix(const HermitianMapMatrix& map) {
  Mat4c choi = Mat4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Mat2c e = Mat2c::Zero();
      e(i, j) = 1.0;
      choi.block<2, 2>(2 * i, 2 * j) = map(e);
    }
  }
  return choi;
}

ChoiCheck choi_cp_check(const HermitianMapMatrix& map, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat4c> eig(choi_matrix(map),
                                           Eigen::EigenvaluesOnly);
  ChoiCheck out{};
  out.eigenvalues = eig.eigenvalues();
  out.min_eigenvalue = out.eigenvalues(0);
  out.is_cp = out.min_eigenvalue >= -tol;
  return out;
}

PrimitivityCertificate channel_index(const KrausChannel& ch,
                                     const Tolerances& tol) {
  return primitivity_index(channel_to_bloch(ch), tol);
}

KrausChannel random_channel(int kraus_count, std::mt19937_64& rng) {
  if (kraus_count < 1) {
    throw Error(ErrorKind::InvalidArgument, "need at least one Kraus operator");
  }
  std::normal_distribution<double> gauss;
  const int rows = 2 * kraus_count;
  Eigen::MatrixXcd g(rows, 2);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  const Eigen::MatrixXcd v = Eigen::HouseholderQR<Eigen::MatrixXcd>(g)
                                 .householderQ() *
                             Eigen::MatrixXcd::Identity(rows, 2);
  std::vector<Mat2c> kraus;
  for (int k = 0; k < kraus_count; ++k) kraus.push_back(v.block<2, 2>(2 * k, 0));
  return KrausChannel(std::move(kraus));
}

Vec2c random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec2c v;
  do {
    v << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
  } while (v.norm() == 0.0);
  return v.normalized();
}

}  // namespace conexp
