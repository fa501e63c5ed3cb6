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

// JSON encodings of every artifact. Rationals are strings "p/q" ("p" when
// q = 1); points are [x, y]; vectors are [x, y, z]. No floating-point number
// is ever written, and none is accepted.

#ifndef OMSTRATA_IO_H_
#define OMSTRATA_IO_H_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "omstrata/construction.h"
#include "omstrata/grassmann.h"
#include "omstrata/oriented_matroid.h"

namespace omstrata {

using Json = nlohmann::ordered_json;

inline constexpr char kToolName[] = "omstrata";
inline constexpr char kToolVersion[] = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Accepts a "p/q" string or a JSON integer. `path` names the location for
// SchemaError messages.
Rational ParseRationalJson(const Json& value, const std::string& path = "$");
Json RationalToJson(const Rational& value);

PlanePoint ParsePoint(const Json& value, const std::string& path = "$");
Json PointToJson(const PlanePoint& p);

// [[label, [x, y, z]], ...]; a two-coordinate entry is an affine point and is
// embedded at height 1. An object {"elements": [...]} is accepted too.
LabeledArrangement ParseArrangement(const Json& doc);
Json ArrangementToJson(const LabeledArrangement& arrangement);

// {"ambient": n, "basis": [[...], [...], [...]]}
Subspace ParseSubspace(const Json& doc);
Json SubspaceToJson(const Subspace& v);

// [[label, [n coordinates]], ...]
VectorFamily ParseVectorFamily(const Json& doc);
Json VectorFamilyToJson(const VectorFamily& family);

// {"ground_set": [...], "cocircuits": [...], "chirotope": "..."?}. The
// chirotope is optional on input.
OrientedMatroid ParseOrientedMatroid(const Json& doc);
Json OrientedMatroidToJson(const OrientedMatroid& om);

// {"alpha": [x, y], "beta": ..., "gamma", "omega", "nu", "a", "b1"}
Seed ParseSeed(const Json& doc);
Json SeedToJson(const Seed& seed);

// {"depth": N, "seed": {...}, "points": [[label, [x, y]], ...]}. Parsing
// rebuilds the family from the seed and rejects points that disagree.
ConfigurationFamily ParseFamily(const Json& doc);
Json FamilyToJson(const ConfigurationFamily& family);

struct ReportDocument {
  std::string tool_version;
  std::map<std::string, std::string> input_digests;
  CertificateReport payload;
  std::vector<std::string> summary;

  friend bool operator==(const ReportDocument&,
                         const ReportDocument&) = default;
};

ReportDocument RenderReport(const CertificateReport& report);
// Field order is fixed; "payload_digest" is the SHA-256 of the compact dump
// of the "payload" member.
Json ReportToJson(const ReportDocument& doc);
// Throws kSchemaError when the digest does not match the payload.
ReportDocument ParseReport(const Json& doc);

// Reads and parses a JSON file. Throws kSchemaError on I/O or syntax errors.
Json ReadJsonFile(const std::string& path);
// Pretty-printed (two-space indent) with a trailing newline.
std::string DumpJson(const Json& doc);

}  // namespace omstrata

#endif  // OMSTRATA_IO_H_
