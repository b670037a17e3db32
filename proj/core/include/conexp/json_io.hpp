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

#ifndef CONEXP_JSON_IO_HPP_
#define CONEXP_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include "conexp/certify.hpp"
#include "conexp/extremal.hpp"
#include "conexp/qubit.hpp"
#include "conexp/types.hpp"

namespace conexp {

using json = nlohmann::json;

// {"n": int, "A": [[...]], "b": [...]}
json to_json(const AffineBallMap& phi);
AffineBallMap affine_map_from_json(const json& j);

// {"m": int, "M": [[...]]}
json to_json(const ConeLinearMap& psi);
ConeLinearMap cone_map_from_json(const json& j);

json to_json(const Subsphere& s);
json to_json(const PrimitivityCertificate& cert);
json to_json(const ExtremalWitness& w);
std::vector<ContactWitness> witnesses_from_json(const json& j);

// {"kraus": [ [[[re, im], [re, im]], [[re, im], [re, im]]], ... ]}
json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);

json to_json(const HermitianMapMatrix& m);
HermitianMapMatrix hermitian_map_from_json(const json& j);

}  // namespace conexp

#endif  // CONEXP_JSON_IO_HPP_
