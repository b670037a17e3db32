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

#include "conexp/certify.hpp"

#include <cmath>
#include <string>

#include "conexp/error.hpp"

namespace conexp {
namespace {

// An in-band value within this many root_tol of 1 is a rounding-level
// contact and needs no registered witness.
constexpr double kExactContactFactor = 100.0;
constexpr double kSameSetTol = 1e-6;

bool witnessed(const AffineBallMap& iterate, int k, const Tolerances& tol,
               const std::vector<ContactWitness>& witnesses) {
  for (const auto& w : witnesses) {
    if (k > w.last_iterate || w.point.size() != iterate.dim()) continue;
    if (std::abs(w.point.norm() - 1.0) > tol.positivity_tol) continue;
    if (std::abs(iterate(w.point).norm() - 1.0) <= tol.positivity_tol) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Primitive: return "Primitive";
    case Verdict::NotPositive: return "NotPositive";
    case Verdict::NotPrimitive: return "NotPrimitive";
  }
  return "Unknown";
}

ChainRecord certify_iterate(const AffineBallMap& iterate, int k,
                            const Tolerances& tol,
                            const std::vector<ContactWitness>& witnesses) {
  const int n = iterate.dim();
  SphereMaxResult sm = sphere_max(iterate, tol);
  const double v = sm.value;
  if (v > 1.0 + tol.positivity_tol) {
    return {k, v, Subsphere::empty(n), std::move(sm.argmax), Contact::Exceeds};
  }
  if (v < 1.0 - tol.positivity_tol) {
    return {k, v, Subsphere::empty(n), std::move(sm.argmax), Contact::Strict};
  }
  const bool exact = std::abs(v - 1.0) <= kExactContactFactor * tol.root_tol;
  if (!exact && !witnessed(iterate, k, tol, witnesses)) {
    throw Error(ErrorKind::AmbiguousMargin,
                "iterate " + std::to_string(k) + " has max norm " +
                    std::to_string(v) + " inside the contact band");
  }
  // C(Phi^k) is the image of the maximizer subsphere.
  const Subsphere& pre = sm.argmax;
  Subsphere contact =
      pre.basis().cols() == 0
          ? Subsphere::point(iterate(pre.center()).normalized())
          : Subsphere::from_affine(iterate(pre.center()),
                                   pre.radius() * iterate.linear() * pre.basis(),
                                   tol.rank_tol);
  return {k, v, std::move(contact), std::move(sm.argmax), Contact::Exact};
}

Subsphere contact_set(const AffineBallMap& phi, const Tolerances& tol,
                      const std::vector<ContactWitness>& witnesses) {
  tol.validate();
  ChainRecord rec = certify_iterate(phi, 1, tol, witnesses);
  if (rec.kind == Contact::Exceeds) {
    throw Error(ErrorKind::NotPositive,
                "max norm " + std::to_string(rec.max_norm) + " exceeds 1");
  }
  return std::move(rec.contact);
}

PrimitivityCertificate primitivity_index(const AffineBallMap& phi,
                                         const Tolerances& tol,
                                         const CertifyOptions& options) {
  tol.validate();
  const int n = phi.dim();
  const int cap = options.max_iter.value_or(n + 1);
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");

  PrimitivityCertificate cert;
  cert.chain.push_back({0, 1.0, Subsphere::full(n), Subsphere::full(n),
                        Contact::Exact});
  AffineBallMap iterate = phi;
  for (int k = 1; k <= cap; ++k) {
    if (k > 1) iterate = phi.compose(iterate);
    ChainRecord rec = certify_iterate(iterate, k, tol, options.witnesses);
    if (rec.kind == Contact::Exceeds) {
      if (k == 1) {
        cert.verdict = Verdict::NotPositive;
        cert.chain.push_back(std::move(rec));
        return cert;
      }
      throw Error(ErrorKind::AmbiguousMargin,
                  "iterate " + std::to_string(k) +
                      " leaves the ball although the map is positive");
    }
    if (rec.kind == Contact::Strict) {
      cert.verdict = Verdict::Primitive;
      cert.index = k;
      cert.margin = 1.0 - rec.max_norm;
      cert.chain.push_back(std::move(rec));
      return cert;
    }
    const Subsphere& prev = cert.chain.back().contact;
    const int dim = rec.aff_dim();
    const bool stalled = dim == prev.aff_dim();
    if (dim > prev.aff_dim() ||
        (stalled && !rec.contact.same_set(prev, kSameSetTol))) {
      throw Error(ErrorKind::AmbiguousMargin,
                  "contact chain is not nested at iterate " +
                      std::to_string(k));
    }
    cert.chain.push_back(std::move(rec));
    if (stalled) {
      // A_k = A_{k-1} forces A_l = A_k for all l >= k.
      cert.verdict = Verdict::NotPrimitive;
      return cert;
    }
  }
  if (cap >= n + 1) {
    cert.verdict = Verdict::NotPrimitive;
    return cert;
  }
  throw Error(ErrorKind::InvalidArgument,
              "undecided after max_iter = " + std::to_string(cap) +
                  " iterates; at most " + std::to_string(n + 1) + " are needed");
}

bool is_primitive(const AffineBallMap& phi, const Tolerances& tol,
                  const CertifyOptions& options) {
  return primitivity_index(phi, tol, options).verdict == Verdict::Primitive;
}

}  // namespace conexp
