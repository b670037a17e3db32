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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conexp/certify.hpp"
#include "conexp/cone.hpp"
#include "conexp/error.hpp"
#include "conexp/extremal.hpp"
#include "conexp/json_io.hpp"
#include "conexp/oracle.hpp"
#include "conexp/qubit.hpp"
#include "conexp/sphere_max.hpp"

namespace {

using namespace conexp;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConstruction = 2;
constexpr int kExitNotPositive = 3;
constexpr int kExitNotPrimitive = 4;
constexpr int kExitAmbiguous = 5;
constexpr int kExitUsage = 64;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  // The index output may append CSV; only the first document matters.
  std::istringstream first(text);
  std::string doc;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    std::getline(first, doc);
    j = json::parse(doc, nullptr, false);
  }
  if (j.is_discarded()) throw Error(ErrorKind::Parse, "input is not valid JSON");
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

struct LoadedMap {
  AffineBallMap map;
  std::vector<ContactWitness> witnesses;
};

LoadedMap load_ball_map(const json& j) {
  if (j.contains("map")) return {affine_map_from_json(j.at("map")), witnesses_from_json(j)};
  if (j.contains("M")) return {dehomogenize(cone_map_from_json(j), {}).map, {}};
  return {affine_map_from_json(j), {}};
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string chain_csv(const PrimitivityCertificate& cert, int n) {
  std::string out = "k,aff_dim,max_norm,contact_latitude\n";
  for (const ChainRecord& r : cert.chain) {
    std::string lat;
    if (n == 3 && r.aff_dim() == 2) {
      lat = csv_number(std::asin(std::min(1.0, r.contact.center().norm())));
    }
    out += std::to_string(r.k) + "," + std::to_string(r.aff_dim()) + "," +
           csv_number(r.max_norm) + "," + lat + "\n";
  }
  return out;
}

int verdict_exit(const PrimitivityCertificate& cert) {
  switch (cert.verdict) {
    case Verdict::Primitive: return kExitOk;
    case Verdict::NotPositive: return kExitNotPositive;
    case Verdict::NotPrimitive: return kExitNotPrimitive;
  }
  return kExitIo;
}

int error_exit(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WitnessViolation:
    case ErrorKind::EqualAngles:
    case ErrorKind::DegenerateOverlap:
      return kExitConstruction;
    case ErrorKind::NotPositive: return kExitNotPositive;
    case ErrorKind::AmbiguousMargin: return kExitAmbiguous;
    case ErrorKind::InvalidArgument:
    case ErrorKind::BadAngles:
      return kExitUsage;
    default: return kExitIo;
  }
}

struct SynthesizeArgs {
  int dim = 0;
  std::optional<double> c;
  std::string out;
};

int cmd_synthesize(const SynthesizeArgs& a) {
  const ExtremalWitness w = synthesize(a.dim, a.c);
  const std::string text = to_json(w).dump() + "\n";
  const std::string line = "index = " + std::to_string(w.certificate.index) + "\n";
  if (a.out.empty()) {
    std::cout << text;
    std::cerr << line;
  } else {
    write_text(a.out, text);
    std::cout << line;
  }
  return w.certificate.index == a.dim + 1 ? kExitOk : kExitConstruction;
}

struct IndexArgs {
  std::string map;
  std::optional<int> max_iter;
  bool chain = false;
};

int cmd_index(const IndexArgs& a) {
  const LoadedMap in = load_ball_map(read_json(a.map));
  const PrimitivityCertificate cert =
      primitivity_index(in.map, {}, {a.max_iter, in.witnesses});
  std::cout << to_json(cert).dump() << "\n";
  if (a.chain) std::cout << chain_csv(cert, in.map.dim());
  return verdict_exit(cert);
}

struct QubitArgs {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string map;
};

KrausChannel qubit_channel(const QubitArgs& a) {
  if (a.alpha && a.beta) return wielandt_channel(*a.alpha, *a.beta);
  if (a.alpha || a.beta) {
    throw Error(ErrorKind::InvalidArgument, "--alpha and --beta go together");
  }
  return channel_from_json(read_json(a.map));
}

int cmd_qubit_build(const QubitArgs& a) {
  if (!a.alpha || !a.beta) {
    throw Error(ErrorKind::InvalidArgument, "build needs --alpha and --beta");
  }
  std::cout << to_json(wielandt_channel(*a.alpha, *a.beta)).dump() << "\n";
  return kExitOk;
}

int cmd_qubit_index(const QubitArgs& a) {
  const PrimitivityCertificate cert = channel_index(qubit_channel(a));
  std::cout << to_json(cert).dump() << "\n";
  return verdict_exit(cert);
}

int cmd_qubit_choi(const QubitArgs& a) {
  std::optional<HermitianMapMatrix> m;
  if (a.alpha || a.beta) {
    m = transfer_matrix(qubit_channel(a));
  } else {
    const json j = read_json(a.map);
    if (j.contains("kraus")) {
      m = transfer_matrix(channel_from_json(j));
    } else if (j.contains("ptm")) {
      m = hermitian_map_from_json(j);
    } else {
      const AffineBallMap phi = load_ball_map(j).map;
      if (phi.dim() != 3) throw Error(ErrorKind::Parse, "Bloch import needs n = 3");
      m = bloch_to_qubit_map(phi);
    }
  }
  const ChoiCheck c = choi_cp_check(*m);
  json ev = json::array();
  for (int i = 0; i < 4; ++i) ev.push_back(c.eigenvalues(i));
  std::cout << json{{"is_cp", c.is_cp},
                    {"min_eigenvalue", c.min_eigenvalue},
                    {"eigenvalues", ev}}
                   .dump()
            << "\n";
  return kExitOk;
}

struct OracleArgs {
  std::string map;
  int samples = 20000;
  std::uint64_t seed = 0;
  int k = 1;
};

int cmd_oracle_sphere_max(const OracleArgs& a) {
  const AffineBallMap phi = load_ball_map(read_json(a.map)).map;
  const double brute = oracle::brute_sphere_max(phi, a.samples, a.seed);
  const double exact = sphere_max(phi, {}).value;
  std::cout << json{{"brute", brute}, {"exact", exact}, {"gap", exact - brute}}.dump()
            << "\n";
  return kExitOk;
}

int cmd_oracle_contact_dim(const OracleArgs& a) {
  const AffineBallMap phi = load_ball_map(read_json(a.map)).map;
  const int dim = oracle::brute_contact_dim(phi, a.k, a.samples, a.seed);
  std::cout << json{{"k", a.k}, {"aff_dim", dim}}.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitivity index of affine ball maps and qubit channels"};
  app.require_subcommand(1);

  SynthesizeArgs syn;
  auto* s = app.add_subcommand("synthesize", "Build the extremal map of index n+1");
  s->add_option("--dim", syn.dim, "Ball dimension n")->required()->check(CLI::Range(1, 1 << 16));
  s->add_option("--c", syn.c, "Gram parameter in (0, 1)")->check(CLI::Bound(0.0, 1.0));
  s->add_option("--out", syn.out, "Witness JSON path (default stdout)");

  IndexArgs idx;
  auto* i = app.add_subcommand("index", "Certify the primitivity index of a map");
  i->add_option("--map", idx.map, "Affine, cone or witness JSON (default stdin)");
  i->add_option("--max-iter", idx.max_iter, "Iteration cap")->check(CLI::Range(1, 1 << 20));
  i->add_flag("--chain", idx.chain, "Append the contact chain as CSV");

  QubitArgs qa;
  auto* q = app.add_subcommand("qubit", "Qubit channels");
  q->require_subcommand(1);
  auto add_qubit = [&](const char* name, const char* help) {
    auto* sub = q->add_subcommand(name, help);
    sub->add_option("--alpha", qa.alpha, "First angle in (0, pi/2)");
    sub->add_option("--beta", qa.beta, "Second angle in (0, pi/2)");
    sub->add_option("--map", qa.map, "Channel or map JSON (default stdin)");
    return sub;
  };
  auto* qb = add_qubit("build", "Emit the index-3 channel for (alpha, beta)");
  auto* qi = add_qubit("index", "Certify the primitivity index of a channel");
  auto* qc = add_qubit("choi", "Choi matrix complete-positivity check");

  OracleArgs oa;
  auto* o = app.add_subcommand("oracle", "Brute-force baselines");
  o->require_subcommand(1);
  auto* os = o->add_subcommand("sphere-max", "Sampled maximum of |Ax+b| on the sphere");
  auto* oc = o->add_subcommand("contact-dim", "Sampled dimension of a contact set");
  for (auto* sub : {os, oc}) {
    sub->add_option("--map", oa.map, "Affine, cone or witness JSON (default stdin)");
    sub->add_option("--samples", oa.samples, "Sample count")->check(CLI::Range(1000, 100000000));
    sub->add_option("--seed", oa.seed, "64-bit seed");
  }
  oc->add_option("--k", oa.k, "Iterate")->check(CLI::Range(1, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s) return cmd_synthesize(syn);
    if (*i) return cmd_index(idx);
    if (*qb) return cmd_qubit_build(qa);
    if (*qi) return cmd_qubit_index(qa);
    if (*qc) return cmd_qubit_choi(qa);
    if (*os) return cmd_oracle_sphere_max(oa);
    if (*oc) return cmd_oracle_contact_dim(oa);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
