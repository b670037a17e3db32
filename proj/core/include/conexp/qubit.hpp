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

#ifndef CONEXP_QUBIT_HPP_
#define CONEXP_QUBIT_HPP_

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "conexp/certify.hpp"
#include "conexp/types.hpp"

namespace conexp {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using Mat4c = Eigen::Matrix4cd;

// Qubit channel X -> sum_k K_k X K_k^*.
class KrausChannel {
 public:
  // Throws InvalidArgument when empty, NotTracePreserving when
  // |sum K^* K - I| > tp_tol.
  explicit KrausChannel(std::vector<Mat2c> kraus, double tp_tol = 1e-10);

  const std::vector<Mat2c>& kraus() const noexcept { return kraus_; }
  Mat2c operator()(const Mat2c& x) const;
  // Largest entry of |sum K^* K - I|.
  double trace_preservation_residual() const;
  // The channel applied after `inner` (Kraus products).
  KrausChannel compose(const KrausChannel& inner) const;

 private:
  std::vector<Mat2c> kraus_;
};

// Real 4x4 action on Pauli coordinates (t; r1, r2, r3) of X = (t I + r.sigma)/2.
// Trace preserving iff the first row is (1, 0, 0, 0).
class HermitianMapMatrix {
 public:
  explicit HermitianMapMatrix(Eigen::Matrix4d m) : m_(std::move(m)) {}

  const Eigen::Matrix4d& matrix() const noexcept { return m_; }
  // Complex-linear extension to all of M_2.
  Mat2c operator()(const Mat2c& x) const;
  bool is_trace_preserving(double tol = 1e-10) const;

 private:
  Eigen::Matrix4d m_;
};

const Mat2c& pauli(int i);  // 0 -> I, 1 -> X, 2 -> Y, 3 -> Z
Eigen::Vector4cd pauli_coordinates(const Mat2c& x);
Mat2c from_pauli_coordinates(const Eigen::Vector4cd& coords);
Eigen::Vector3d bloch_vector(const Mat2c& rho);
Mat2c density_from_bloch(const Eigen::Vector3d& r);
Mat2c projector(const Vec2c& psi);
double purity(const Mat2c& rho);

struct WielandtParams {
  double alpha, beta;
  // tan theta = sqrt(sin 2a / sin 2b); tan delta = sqrt(tan a / tan b).
  double theta, delta;
  Vec2c psi_plus, psi_minus, phi_plus, phi_minus;
};

// Throws BadAngles outside (0, pi/2), EqualAngles when alpha == beta.
WielandtParams wielandt_params(double alpha, double beta);

// A = diag(cos a, cos b), B = [[0, sin b], [sin a, 0]].
KrausChannel wielandt_kraus(double alpha, double beta);

// Psi(|psi><psi|) is pure iff A psi and B psi are proportional.
bool kraus_outputs_proportional(const Mat2c& a, const Mat2c& b,
                                const Vec2c& psi, double tol = 1e-10);

struct PureContactStates {
  Mat2c rho_plus, rho_minus;
  Mat2c out_plus, out_minus;
  // Largest eigenvalues of the two outputs.
  double out_plus_top, out_minus_top;
  // Sampled pure states away from psi_+- whose output purity exceeds
  // 1 - 1e-6; zero when the two states are the only pure-output inputs.
  int spurious;
  // Highest output purity among those sampled states.
  double max_other_purity;
};

PureContactStates pure_contact_states(const WielandtParams& params,
                                      std::uint64_t seed = 0x5eed);

// U with U phi_+ = psi_- and U phi_- proportional to neither psi_+ nor
// psi_- (overlap moduli at most 1 - 1e-3), phase chosen on a 64 point grid.
// Throws DegenerateOverlap.
Mat2c generic_unitary(const Vec2c& phi_plus, const Vec2c& phi_minus,
                      const Vec2c& psi_plus, const Vec2c& psi_minus);

// {U A, U B}: primitive with index 3.
KrausChannel wielandt_channel(double alpha, double beta);

// Pauli transfer matrix of the channel.
HermitianMapMatrix transfer_matrix(const KrausChannel& ch);

// Bloch action r -> A r + b. Throws NotTracePreserving.
AffineBallMap channel_to_bloch(const KrausChannel& ch);
AffineBallMap hermitian_to_bloch(const HermitianMapMatrix& m);

// Trace preserving Hermitian map with Bloch action phi (n must be 3).
HermitianMapMatrix bloch_to_qubit_map(const AffineBallMap& phi);

// M_2^+ and L_4 in matching coordinates: (t; r) <-> (r1, r2, r3, t).
ConeLinearMap hermitian_to_cone(const HermitianMapMatrix& m);
HermitianMapMatrix cone_to_hermitian(const ConeLinearMap& m);

struct ChoiCheck {
  bool is_cp;
  double min_eigenvalue;
  Eigen::Vector4d eigenvalues;
};

// Unnormalized Choi matrix sum_ij E_ij (x) map(E_ij).
Mat4c choi_matrix(const HermitianMapMatrix& map);
ChoiCheck choi_cp_check(const HermitianMapMatrix& map, double tol = 1e-9);

PrimitivityCertificate channel_index(const KrausChannel& ch,
                                     const Tolerances& tol = {});

// Kraus operators of an isometry C^2 -> C^2 (x) C^k drawn from complex
// Gaussians; k >= 1.
KrausChannel random_channel(int kraus_count, std::mt19937_64& rng);
Vec2c random_pure_state(std::mt19937_64& rng);

}  // namespace conexp

#endif  // CONEXP_QUBIT_HPP_
