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

#include "conexp/json_io.hpp"

#include <string>

#include "conexp/error.hpp"

namespace conexp {
namespace {

json vec_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json mat_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Vec parse_vec(const json& j, Eigen::Index size, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size) {
    throw Error(ErrorKind::Parse, std::string(what) + " must be an array of " +
                                      std::to_string(size) + " numbers");
  }
  Vec v(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    if (!j[i].is_number()) {
      throw Error(ErrorKind::Parse, std::string(what) + " has a non-number");
    }
    v(i) = j[i].get<double>();
  }
  return v;
}

Mat parse_mat(const json& j, Eigen::Index size, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size) {
    throw Error(ErrorKind::Parse, std::string(what) + " must have " +
                                      std::to_string(size) + " rows");
  }
  Mat m(size, size);
  for (Eigen::Index i = 0; i < size; ++i) m.row(i) = parse_vec(j[i], size, what);
  return m;
}

int parse_dim(const json& j, const char* key) {
  const json& d = field(j, key);
  if (!d.is_number_integer() || d.get<int>() < 1) {
    throw Error(ErrorKind::Parse, std::string(key) + " must be a positive integer");
  }
  return d.get<int>();
}

std::string_view contact_name(Contact c) {
  switch (c) {
    case Contact::Strict: return "strict";
    case Contact::Exact: return "contact";
    case Contact::Exceeds: return "exceeds";
  }
  return "unknown";
}

}  // namespace

json to_json(const AffineBallMap& phi) {
  return {{"n", phi.dim()}, {"A", mat_json(phi.linear())}, {"b", vec_json(phi.offset())}};
}

AffineBallMap affine_map_from_json(const json& j) {
  const int n = parse_dim(j, "n");
  try {
    return {parse_mat(field(j, "A"), n, "A"), parse_vec(field(j, "b"), n, "b")};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::Parse, e.what());
    throw;
  }
}

json to_json(const ConeLinearMap& psi) {
  return {{"m", psi.dim()}, {"M", mat_json(psi.matrix())}};
}

ConeLinearMap cone_map_from_json(const json& j) {
  const int m = parse_dim(j, "m");
  return ConeLinearMap(parse_mat(field(j, "M"), m, "M"));
}

json to_json(const Subsphere& s) {
  json out = {{"aff_dim", s.aff_dim()}};
  if (s.is_empty()) {
    out["empty"] = true;
    return out;
  }
  out["empty"] = false;
  out["center"] = vec_json(s.center());
  out["radius"] = s.radius();
  json basis = json::array();
  for (Eigen::Index i = 0; i < s.basis().cols(); ++i) {
    basis.push_back(vec_json(s.basis().col(i)));
  }
  out["basis"] = std::move(basis);
  return out;
}

json to_json(const PrimitivityCertificate& cert) {
  json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  if (cert.verdict == Verdict::Primitive) {
    out["index"] = cert.index;
    out["margin"] = cert.margin;
  } else {
    out["index"] = nullptr;
  }
  json chain = json::array();
  for (const auto& rec : cert.chain) {
    chain.push_back({{"k", rec.k},
                     {"max_norm", rec.max_norm},
                     {"aff_dim", rec.aff_dim()},
                     {"kind", std::string(contact_name(rec.kind))},
                     {"contact", to_json(rec.contact)}});
  }
  out["chain"] = std::move(chain);
  return out;
}

json to_json(const ExtremalWitness& w) {
  json points = json::array();
  for (Eigen::Index i = 0; i < w.points.cols(); ++i) {
    points.push_back(vec_json(w.points.col(i)));
  }
  json lift = nullptr;
  if (w.lift) {
    lift = {{"lambda", w.lift->lambda()},
            {"mu", w.lift->mu()},
            {"shift", w.lift->shift()}};
  }
  return {{"n", w.n},
          {"c", w.c},
          {"alpha", w.alpha},
          {"beta", w.beta},
          {"lift", std::move(lift)},
          {"psi", to_json(w.psi)},
          {"rotation", mat_json(w.rotation)},
          {"points", std::move(points)},
          {"map", to_json(w.map)},
          {"index", w.certificate.index},
          {"certificate", to_json(w.certificate)}};
}

std::vector<ContactWitness> witnesses_from_json(const json& j) {
  std::vector<ContactWitness> out;
  if (!j.is_object() || !j.contains("points") || !j.contains("n")) return out;
  const int n = parse_dim(j, "n");
  const json& pts = j.at("points");
  if (!pts.is_array() || pts.size() < 2) {
    throw Error(ErrorKind::Parse, "points must list x_0, x_1, ...");
  }
  out.push_back({parse_vec(pts[1], n, "points"), n});
  return out;
}

json to_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (const auto& k : ch.kraus()) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) {
      json row = json::array();
      for (int j = 0; j < 2; ++j) row.push_back({k(i, j).real(), k(i, j).imag()});
      rows.push_back(std::move(row));
    }
    kraus.push_back(std::move(rows));
  }
  return {{"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  const json& kraus = field(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) {
    throw Error(ErrorKind::Parse, "kraus must be a non-empty array");
  }
  std::vector<Mat2c> ops;
  for (const auto& op : kraus) {
    if (!op.is_array() || op.size() != 2) {
      throw Error(ErrorKind::Parse, "Kraus operators must be 2x2");
    }
    Mat2c k;
    for (int r = 0; r < 2; ++r) {
      if (!op[r].is_array() || op[r].size() != 2) {
        throw Error(ErrorKind::Parse, "Kraus operators must be 2x2");
      }
      for (int c = 0; c < 2; ++c) {
        const json& e = op[r][c];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number()) {
          throw Error(ErrorKind::Parse, "entries must be [re, im]");
        }
        k(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
    ops.push_back(k);
  }
  return KrausChannel(std::move(ops));
}

json to_json(const HermitianMapMatrix& m) {
  return {{"ptm", mat_json(m.matrix())}};
}

HermitianMapMatrix hermitian_map_from_json(const json& j) {
  return HermitianMapMatrix(parse_mat(field(j, "ptm"), 4, "ptm"));
}

}  // namespace conexp
