// Copyright 2026 The Authors.
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

#include "omstrata/io.h"

#include <fstream>
#include <sstream>

#include "omstrata/error.h"
#include "omstrata/fingerprint.h"

namespace omstrata {
namespace {

[[noreturn]] void SchemaFail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, path + ": " + what);
}

const Json& Member(const Json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) SchemaFail(path, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) SchemaFail(path, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& ArrayOf(const Json& doc, const std::string& path) {
  if (!doc.is_array()) SchemaFail(path, "expected an array");
  return doc;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

int ParseInt(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) SchemaFail(path, "expected an integer");
  return value.get<int>();
}

Integer ParseIntegerString(const Json& value, const std::string& path) {
  const Rational r = ParseRationalJson(value, path);
  if (r.get_den() != 1) SchemaFail(path, "expected an integer");
  return r.get_num();
}

Label ParseLabel(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return Label::Index(value.get<int>());
  if (!value.is_string()) SchemaFail(path, "expected a label string");
  try {
    return Label::Parse(value.get<std::string>());
  } catch (const Error& e) {
    SchemaFail(path, e.what());
  }
}

std::vector<Rational> ParseCoordinates(const Json& value,
                                       const std::string& path) {
  ArrayOf(value, path);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(ParseRationalJson(value[i], Index(path, i)));
  }
  return out;
}

// Rethrows a construction error from a parsed document as SchemaError.
template <typename F>
auto AsSchema(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    // Well-formed but degenerate input keeps its own code.
    if (e.code() == ErrorCode::kRationalParseError ||
        e.code() == ErrorCode::kSchemaError ||
        e.code() == ErrorCode::kRankDeficient) {
      throw;
    }
    SchemaFail(path, e.what());
  }
}

Json CheckToJson(const CertificateCheck& c) {
  return Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass},
              {"detail", c.detail}};
}

Json RecordToJson(const CertificateRecord& r) {
  Json degeneration = Json::array();
  for (const auto& s : r.degeneration) {
    degeneration.push_back(
        Json{{"n", s.n.get_str()}, {"same_stratum", s.same_stratum}});
  }
  return Json{{"i", r.i},
              {"c", PointToJson(r.c)},
              {"cross_ratio", RationalToJson(r.cross_ratio)},
              {"mi_fingerprint", r.mi_fingerprint},
              {"limit_fingerprint", r.limit_fingerprint},
              {"degeneration", degeneration},
              {"weak_map_to_limit", r.weak_map_to_limit}};
}

Json PayloadToJson(const CertificateReport& r) {
  Json samples = Json::array();
  for (const auto& n : r.samples) samples.push_back(n.get_str());
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(CheckToJson(c));
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(RecordToJson(rec));
  const auto failure = r.FirstFailure();
  return Json{{"pass", r.pass},
              {"first_failure", failure ? Json(*failure) : Json(nullptr)},
              {"seed", SeedToJson(r.seed)},
              {"depth", r.depth},
              {"samples", samples},
              {"limit_fingerprint", r.limit_fingerprint},
              {"checks", checks},
              {"records", records}};
}

bool ParseBool(const Json& value, const std::string& path) {
  if (!value.is_boolean()) SchemaFail(path, "expected a boolean");
  return value.get<bool>();
}

std::string ParseString(const Json& value, const std::string& path) {
  if (!value.is_string()) SchemaFail(path, "expected a string");
  return value.get<std::string>();
}

CertificateReport ParsePayload(const Json& doc, const std::string& path) {
  CertificateReport r;
  r.pass = ParseBool(Member(doc, "pass", path), path + ".pass");
  r.seed = ParseSeed(Member(doc, "seed", path));
  r.depth = ParseInt(Member(doc, "depth", path), path + ".depth");
  const Json& samples = ArrayOf(Member(doc, "samples", path), path + ".samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    r.samples.push_back(
        ParseIntegerString(samples[i], Index(path + ".samples", i)));
  }
  r.limit_fingerprint = ParseString(Member(doc, "limit_fingerprint", path),
                                    path + ".limit_fingerprint");
  const std::string cpath = path + ".checks";
  const Json& checks = ArrayOf(Member(doc, "checks", path), cpath);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = Index(cpath, i);
    CertificateCheck check;
    check.id = ParseString(Member(checks[i], "id", p), p + ".id");
    check.name = ParseString(Member(checks[i], "name", p), p + ".name");
    check.pass = ParseBool(Member(checks[i], "pass", p), p + ".pass");
    check.detail = ParseString(Member(checks[i], "detail", p), p + ".detail");
    r.checks.push_back(std::move(check));
  }
  const std::string rpath = path + ".records";
  const Json& records = ArrayOf(Member(doc, "records", path), rpath);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string p = Index(rpath, i);
    const Json& rec = records[i];
    CertificateRecord out;
    out.i = ParseInt(Member(rec, "i", p), p + ".i");
    out.c = ParsePoint(Member(rec, "c", p), p + ".c");
    out.cross_ratio =
        ParseRationalJson(Member(rec, "cross_ratio", p), p + ".cross_ratio");
    out.mi_fingerprint =
        ParseString(Member(rec, "mi_fingerprint", p), p + ".mi_fingerprint");
    out.limit_fingerprint = ParseString(Member(rec, "limit_fingerprint", p),
                                        p + ".limit_fingerprint");
    const std::string dpath = p + ".degeneration";
    const Json& deg = ArrayOf(Member(rec, "degeneration", p), dpath);
    for (std::size_t k = 0; k < deg.size(); ++k) {
      const std::string q = Index(dpath, k);
      DegenerationSample sample;
      sample.n = ParseIntegerString(Member(deg[k], "n", q), q + ".n");
      sample.same_stratum =
          ParseBool(Member(deg[k], "same_stratum", q), q + ".same_stratum");
      out.degeneration.push_back(std::move(sample));
    }
    out.weak_map_to_limit = ParseBool(Member(rec, "weak_map_to_limit", p),
                                      p + ".weak_map_to_limit");
    r.records.push_back(std::move(out));
  }
  return r;
}

}  // namespace

Rational ParseRationalJson(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
               : Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  if (!value.is_string()) {
    SchemaFail(path, "expected a rational string \"p/q\"");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kRationalParseError, path + ": " + e.what());
  }
}

Json RationalToJson(const Rational& value) { return FormatRational(value); }

PlanePoint ParsePoint(const Json& value, const std::string& path) {
  const auto coords = ParseCoordinates(value, path);
  if (coords.size() != 2) SchemaFail(path, "expected [x, y]");
  return {coords[0], coords[1]};
}

Json PointToJson(const PlanePoint& p) {
  return Json::array({RationalToJson(p.x), RationalToJson(p.y)});
}

LabeledArrangement ParseArrangement(const Json& doc) {
  std::string path = "$";
  const Json* elements = &doc;
  if (doc.is_object()) {
    elements = &Member(doc, "elements", path);
    path = "$.elements";
  }
  ArrayOf(*elements, path);
  std::vector<LabeledArrangement::Element> out;
  for (std::size_t i = 0; i < elements->size(); ++i) {
    const std::string p = Index(path, i);
    const Json& entry = (*elements)[i];
    if (!entry.is_array() || entry.size() != 2) {
      SchemaFail(p, "expected [label, coordinates]");
    }
    const Label label = ParseLabel(entry[0], p + "[0]");
    const auto coords = ParseCoordinates(entry[1], p + "[1]");
    if (coords.size() == 2) {
      out.emplace_back(label, EmbedAffine({coords[0], coords[1]}));
    } else if (coords.size() == 3) {
      out.emplace_back(label, Vector3{coords[0], coords[1], coords[2]});
    } else {
      SchemaFail(p + "[1]", "expected 2 or 3 coordinates");
    }
  }
  return AsSchema(path, [&] { return LabeledArrangement(std::move(out)); });
}

Json ArrangementToJson(const LabeledArrangement& arrangement) {
  Json out = Json::array();
  for (const auto& [label, v] : arrangement.elements()) {
    out.push_back(Json::array(
        {label.Name(), Json::array({RationalToJson(v.x), RationalToJson(v.y),
                                    RationalToJson(v.z)})}));
  }
  return out;
}

Subspace ParseSubspace(const Json& doc) {
  const int ambient = ParseInt(Member(doc, "ambient", "$"), "$.ambient");
  const Json& basis = ArrayOf(Member(doc, "basis", "$"), "$.basis");
  if (basis.size() != 3) SchemaFail("$.basis", "expected three basis rows");
  std::array<RationalVector, 3> rows;
  for (std::size_t r = 0; r < 3; ++r) {
    rows[r] = ParseCoordinates(basis[r], Index("$.basis", r));
  }
  return AsSchema("$", [&] { return Subspace(ambient, std::move(rows)); });
}

Json SubspaceToJson(const Subspace& v) {
  Json basis = Json::array();
  for (const auto& row : v.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(RationalToJson(x));
    basis.push_back(r);
  }
  return Json{{"ambient", v.ambient()}, {"basis", basis}};
}

VectorFamily ParseVectorFamily(const Json& doc) {
  ArrayOf(doc, "$");
  std::vector<VectorFamily::Element> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string p = Index("$", i);
    if (!doc[i].is_array() || doc[i].size() != 2) {
      SchemaFail(p, "expected [label, coordinates]");
    }
    out.emplace_back(ParseLabel(doc[i][0], p + "[0]"),
                     ParseCoordinates(doc[i][1], p + "[1]"));
  }
  return AsSchema("$", [&] { return VectorFamily(std::move(out)); });
}

Json VectorFamilyToJson(const VectorFamily& family) {
  Json out = Json::array();
  for (const auto& [label, v] : family.elements()) {
    Json coords = Json::array();
    for (const auto& x : v) coords.push_back(RationalToJson(x));
    out.push_back(Json::array({label.Name(), coords}));
  }
  return out;
}

OrientedMatroid ParseOrientedMatroid(const Json& doc) {
  const Json& ground =
      ArrayOf(Member(doc, "ground_set", "$"), "$.ground_set");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    labels.push_back(ParseLabel(ground[i], Index("$.ground_set", i)));
  }
  const Json& cocircuits =
      ArrayOf(Member(doc, "cocircuits", "$"), "$.cocircuits");
  std::vector<SignVector> signs;
  for (std::size_t i = 0; i < cocircuits.size(); ++i) {
    const std::string p = Index("$.cocircuits", i);
    signs.push_back(AsSchema(p, [&] {
      return SignVector(ParseString(cocircuits[i], p));
    }));
  }
  std::optional<Chirotope> chi;
  if (const auto it = doc.find("chirotope"); it != doc.end()) {
    const std::string s = ParseString(*it, "$.chirotope");
    const std::size_t n = labels.size();
    if (s.size() != Chirotope::TripleCount(n)) {
      SchemaFail("$.chirotope", "expected one sign per sorted triple");
    }
    const SignVector as_signs =
        AsSchema("$.chirotope", [&] { return SignVector(s); });
    Chirotope c(n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          c.set(i, j, k, as_signs.at(pos++));
        }
      }
    }
    chi = std::move(c);
  }
  return AsSchema("$", [&] {
    return OrientedMatroid(std::move(labels), std::move(signs), std::move(chi));
  });
}

Json OrientedMatroidToJson(const OrientedMatroid& om) {
  Json ground = Json::array();
  for (const auto& l : om.ground_set()) ground.push_back(l.Name());
  Json cocircuits = Json::array();
  for (const auto& c : om.cocircuits()) cocircuits.push_back(c.str());
  return Json{{"ground_set", ground},
              {"cocircuits", cocircuits},
              {"chirotope", om.chirotope().str()},
              {"fingerprint", Fingerprint(om)}};
}

Seed ParseSeed(const Json& doc) {
  const std::string base = "$.seed";
  auto point = [&](const char* key) {
    return ParsePoint(Member(doc, key, base), base + "." + key);
  };
  // Assigned member by member: a throw inside a braced initializer leaks
  // the members already built under GCC 11.
  Seed seed;
  seed.alpha = point("alpha");
  seed.beta = point("beta");
  seed.gamma = point("gamma");
  seed.omega = point("omega");
  seed.nu = point("nu");
  seed.a = point("a");
  seed.b1 = point("b1");
  return seed;
}

Json SeedToJson(const Seed& seed) {
  return Json{{"alpha", PointToJson(seed.alpha)},
              {"beta", PointToJson(seed.beta)},
              {"gamma", PointToJson(seed.gamma)},
              {"omega", PointToJson(seed.omega)},
              {"nu", PointToJson(seed.nu)},
              {"a", PointToJson(seed.a)},
              {"b1", PointToJson(seed.b1)}};
}

ConfigurationFamily ParseFamily(const Json& doc) {
  const int depth = ParseInt(Member(doc, "depth", "$"), "$.depth");
  const Seed seed = ParseSeed(Member(doc, "seed", "$"));
  ConfigurationFamily family =
      AsSchema("$", [&] { return Build(seed, depth); });
  const Json& points = ArrayOf(Member(doc, "points", "$"), "$.points");
  const auto expected = family.Points();
  if (points.size() != expected.size()) {
    SchemaFail("$.points", "expected " + std::to_string(expected.size()) +
                               " points for depth " + std::to_string(depth));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string p = Index("$.points", i);
    if (!points[i].is_array() || points[i].size() != 2) {
      SchemaFail(p, "expected [label, [x, y]]");
    }
    const Label label = ParseLabel(points[i][0], p + "[0]");
    const PlanePoint pt = ParsePoint(points[i][1], p + "[1]");
    if (label != expected[i].first || pt != expected[i].second) {
      SchemaFail(p, "point " + label.Name() +
                        " disagrees with the construction from the seed");
    }
  }
  return family;
}

Json FamilyToJson(const ConfigurationFamily& family) {
  Json points = Json::array();
  for (const auto& [label, p] : family.Points()) {
    points.push_back(Json::array({label.Name(), PointToJson(p)}));
  }
  return Json{{"depth", family.depth()},
              {"seed", SeedToJson(family.seed())},
              {"points", points}};
}

ReportDocument RenderReport(const CertificateReport& report) {
  ReportDocument doc;
  doc.tool_version = kToolVersion;
  doc.input_digests["seed"] = Sha256Hex(SeedToJson(report.seed).dump());
  Json params = Json{{"depth", report.depth}, {"samples", Json::array()}};
  for (const auto& n : report.samples) params["samples"].push_back(n.get_str());
  doc.input_digests["parameters"] = Sha256Hex(params.dump());
  doc.payload = report;
  doc.summary.push_back(std::string("certificate ") +
                        (report.pass ? "PASS" : "FAIL") + " at depth " +
                        std::to_string(report.depth));
  for (const auto& c : report.checks) {
    doc.summary.push_back("(" + c.id + ") " + c.name + ": " +
                          (c.pass ? "pass" : "FAIL") + " - " + c.detail);
  }
  if (const auto failure = report.FirstFailure()) {
    doc.summary.push_back("first failure: " + *failure);
  }
  return doc;
}

Json ReportToJson(const ReportDocument& doc) {
  Json digests = Json::object();
  for (const auto& [k, v] : doc.input_digests) digests[k] = v;
  Json summary = Json::array();
  for (const auto& line : doc.summary) summary.push_back(line);
  const Json payload = PayloadToJson(doc.payload);
  return Json{{"schema_version", kSchemaVersion},
              {"tool", kToolName},
              {"tool_version", doc.tool_version},
              {"pass", doc.payload.pass},
              {"input_digests", digests},
              {"summary", summary},
              {"payload", payload},
              {"payload_digest", Sha256Hex(payload.dump())}};
}

ReportDocument ParseReport(const Json& doc) {
  ReportDocument out;
  out.tool_version =
      ParseString(Member(doc, "tool_version", "$"), "$.tool_version");
  const Json& digests = Member(doc, "input_digests", "$");
  if (!digests.is_object()) SchemaFail("$.input_digests", "expected an object");
  for (const auto& [k, v] : digests.items()) {
    out.input_digests[k] = ParseString(v, "$.input_digests." + k);
  }
  const Json& summary = ArrayOf(Member(doc, "summary", "$"), "$.summary");
  for (std::size_t i = 0; i < summary.size(); ++i) {
    out.summary.push_back(ParseString(summary[i], Index("$.summary", i)));
  }
  const Json& payload = Member(doc, "payload", "$");
  const std::string digest =
      ParseString(Member(doc, "payload_digest", "$"), "$.payload_digest");
  if (Sha256Hex(payload.dump()) != digest) {
    SchemaFail("$.payload_digest", "does not match the payload");
  }
  out.payload = ParsePayload(payload, "$.payload");
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSchemaError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, path + ": " + e.what());
  }
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace omstrata
