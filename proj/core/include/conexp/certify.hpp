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

#ifndef CONEXP_CERTIFY_HPP_
#define CONEXP_CERTIFY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "conexp/sphere_max.hpp"
#include "conexp/subsphere.hpp"
#include "conexp/types.hpp"

namespace conexp {

enum class Verdict { Primitive, NotPositive, NotPrimitive };

std::string_view to_string(Verdict v);

// How an iterate was classified.
enum class Contact {
  // max_norm < 1 - positivity_tol.
  Strict,
  // max_norm inside the band, confirmed by the solver (|max_norm - 1| at
  // rounding level) or by a registered witness point.
  Exact,
  // max_norm > 1 + positivity_tol.
  Exceeds,
};

struct ChainRecord {
  int k;
  double max_norm;
  // C(Phi^k) = S^{n-1} cap Phi^k(S^{n-1}).
  Subsphere contact;
  // Maximizers of |Phi^k(x)| on the sphere, i.e. the preimage of contact.
  Subsphere preimage;
  Contact kind;

  int aff_dim() const { return contact.aff_dim(); }
};

struct PrimitivityCertificate {
  // gamma_aff(B_n, Phi); meaningful only for Verdict::Primitive.
  int index = 0;
  Verdict verdict = Verdict::NotPrimitive;
  // Records for k = 0, 1, ...; k = 0 is the whole sphere.
  std::vector<ChainRecord> chain;
  // 1 - max_norm at the first strictly positive iterate.
  double margin = 0.0;
};

// A sphere point known to stay on the sphere for iterates 1..last_iterate.
struct ContactWitness {
  Vec point;
  int last_iterate;
};

struct CertifyOptions {
  // Highest iterate examined; defaults to n + 1, which suffices for every
  // primitive map of B_n.
  std::optional<int> max_iter;
  std::vector<ContactWitness> witnesses;
};

// C(Phi) as a subsphere; Empty when Phi is strictly positive.
// Throws NotPositive when max_norm > 1 + positivity_tol and
// AmbiguousMargin for an unconfirmed value inside the band.
Subsphere contact_set(const AffineBallMap& phi, const Tolerances& tol,
                      const std::vector<ContactWitness>& witnesses = {});

// Classification of one iterate; `k` selects which witnesses apply.
ChainRecord certify_iterate(const AffineBallMap& iterate, int k,
                            const Tolerances& tol,
                            const std::vector<ContactWitness>& witnesses);

// Walks A_k = C(Phi^k) until it empties. Throws AmbiguousMargin, and
// InvalidArgument if max_iter is below n + 1 and the walk is undecided.
PrimitivityCertificate primitivity_index(const AffineBallMap& phi,
                                         const Tolerances& tol,
                                         const CertifyOptions& options = {});

bool is_primitive(const AffineBallMap& phi, const Tolerances& tol,
                  const CertifyOptions& options = {});

}  // namespace conexp

#endif  // CONEXP_CERTIFY_HPP_
