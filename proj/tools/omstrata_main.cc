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

// Command-line front end: seed validation, family construction, oriented
// matroid queries, mu(V), and the strata certificate.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omstrata/construction.h"
#include "omstrata/error.h"
#include "omstrata/fingerprint.h"
#include "omstrata/grassmann.h"
#include "omstrata/io.h"
#include "omstrata/oriented_matroid.h"

namespace omstrata {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRejected = 2;

constexpr char kRemedy[] =
    "perturb the seed so that S1-S6 hold and no construction step "
    "degenerates, for example by moving nu or b1 to a generic position";

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kSchemaError, "cannot write " + path);
  }
}

Seed LoadSeed(const std::string& path) {
  return path.empty() ? DefaultSeed() : ParseSeed(ReadJsonFile(path));
}

// An oriented matroid document, or an arrangement whose OM is taken.
OrientedMatroid LoadOm(const std::string& path, RankPolicy policy) {
  const Json doc = ReadJsonFile(path);
  if (doc.is_object() && doc.contains("ground_set")) {
    return ParseOrientedMatroid(doc);
  }
  return OrientedMatroidOf(ParseArrangement(doc), policy);
}

std::vector<Integer> ParseSamples(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer n;
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        n.set_str(item, 10) != 0 || n < 1) {
      throw Error(ErrorCode::kSchemaError,
                  "--samples: expected positive integers, got '" + item + "'");
    }
    out.push_back(n);
  }
  if (out.empty()) throw Error(ErrorCode::kSchemaError, "--samples is empty");
  return out;
}

std::string ConstraintName(SeedConstraint c) {
  return "S" + std::to_string(static_cast<int>(c) + 1);
}

int RunSeedValidate(const std::string& file) {
  const SeedValidation v = ValidateSeed(LoadSeed(file));
  Json out{{"ok", v.ok}};
  if (!v.ok) {
    out["violated"] = ConstraintName(*v.violated);
    out["diagnostic"] = v.diagnostic;
    out["remedy"] = kRemedy;
  }
  std::cout << DumpJson(out);
  return v.ok ? kExitOk : kExitRejected;
}

int RunBuild(int depth, const std::string& seed_file, const std::string& out,
             const std::string& svg) {
  const ConfigurationFamily family = Build(LoadSeed(seed_file), depth);
  WriteOutput(out, DumpJson(FamilyToJson(family)));
  if (!svg.empty()) {
    WriteOutput(svg, EmitFigure(family, FigureStyle::kConstruction));
  }
  return kExitOk;
}

int RunOmOf(const std::string& in, bool allow_lower_rank,
            const std::string& out) {
  const OrientedMatroid om = OrientedMatroidOf(
      ParseArrangement(ReadJsonFile(in)),
      allow_lower_rank ? RankPolicy::kAllowLowerRank
                       : RankPolicy::kRequireSpanning);
  WriteOutput(out, DumpJson(OrientedMatroidToJson(om)));
  return kExitOk;
}

int RunOmCompare(const std::string& relation, const std::string& a,
                 const std::string& b, bool allow_lower_rank) {
  const RankPolicy policy = allow_lower_rank ? RankPolicy::kAllowLowerRank
                                             : RankPolicy::kRequireSpanning;
  const OrientedMatroid ma = LoadOm(a, policy);
  const OrientedMatroid mb = LoadOm(b, policy);
  bool result = false;
  if (relation == "equal") {
    result = OmEqual(ma, mb);
  } else if (relation == "strong-map") {
    result = StrongMap(ma, mb);
  } else {
    result = WeakMap(ma, mb);
  }
  std::cout << DumpJson(Json{{"relation", relation},
                             {"result", result},
                             {"source", Fingerprint(ma)},
                             {"target", Fingerprint(mb)}});
  return kExitOk;
}

int RunMu(const std::string& subspace, const std::string& family,
          const std::string& out) {
  const Subspace v = ParseSubspace(ReadJsonFile(subspace));
  const OrientedMatroid om =
      family.empty() ? MuOf(v) : MuMOf(ParseVectorFamily(ReadJsonFile(family)), v);
  WriteOutput(out, DumpJson(OrientedMatroidToJson(om)));
  return kExitOk;
}

int RunCertificate(int depth, const std::string& samples,
                   const std::string& seed_file, const std::string& out,
                   const std::string& svg_dir) {
  const Seed seed = LoadSeed(seed_file);
  const CertificateReport report =
      Certificate(seed, depth, ParseSamples(samples));
  const ReportDocument doc = RenderReport(report);
  WriteOutput(out, DumpJson(ReportToJson(doc)));
  if (!svg_dir.empty()) {
    std::filesystem::create_directories(svg_dir);
    const ConfigurationFamily family = Build(seed, depth);
    const std::filesystem::path dir(svg_dir);
    WriteOutput((dir / "A0.svg").string(),
                EmitFigure(family.Truncated(0), FigureStyle::kPoints));
    WriteOutput((dir / "A1.svg").string(),
                EmitFigure(family.Truncated(1), FigureStyle::kConstruction));
    WriteOutput((dir / ("A" + std::to_string(depth) + ".svg")).string(),
                EmitFigure(family, FigureStyle::kConstruction));
    WriteOutput((dir / "M.svg").string(),
                EmitFigure(DropLoops(LimitArrangement(MakeMi(family, 1)))));
  }
  if (!out.empty() && out != "-") {
    for (const auto& line : doc.summary) std::cerr << line << "\n";
  }
  if (!report.pass) {
    std::cerr << "omstrata: certificate failed; " << kRemedy << "\n";
    return kExitRejected;
  }
  return kExitOk;
}

}  // namespace
}  // namespace omstrata

int main(int argc, char** argv) {
  using namespace omstrata;
  CLI::App app{"Exact oriented matroid strata certificates"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto* seed = app.add_subcommand("seed", "Seed operations");
  seed->require_subcommand(1);
  auto* validate = seed->add_subcommand("validate", "Check constraints S1-S6");
  std::string seed_file;
  validate->add_option("--file", seed_file, "Seed JSON (default seed if omitted)")
      ->check(CLI::ExistingFile);

  auto* build = app.add_subcommand("build", "Construct A_N");
  int depth = 10;
  std::string out, svg;
  build->add_option("--depth", depth, "N")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--seed-file", seed_file, "Seed JSON")->check(CLI::ExistingFile);
  build->add_option("--out", out, "Family JSON (stdout if omitted)");
  build->add_option("--svg", svg, "Also write a construction figure");

  auto* om = app.add_subcommand("om", "Oriented matroid queries");
  om->require_subcommand(1);
  bool allow_lower_rank = false;
  auto* om_of = om->add_subcommand("of", "Oriented matroid of an arrangement");
  std::string in;
  om_of->add_option("--in", in, "Arrangement JSON")->required()->check(CLI::ExistingFile);
  om_of->add_option("--out", out, "Output (stdout if omitted)");
  om_of->add_flag("--allow-lower-rank", allow_lower_rank,
                  "Accept arrangements of rank below 3");
  std::string lhs, rhs;
  std::string relation;
  for (const char* name : {"equal", "strong-map", "weak-map"}) {
    auto* cmd = om->add_subcommand(name, std::string("Test ") + name +
                                             " between two inputs");
    cmd->add_option("A", lhs, "Arrangement or OM JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("B", rhs, "Arrangement or OM JSON")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--allow-lower-rank", allow_lower_rank,
                  "Accept arrangements of rank below 3");
    cmd->callback([&relation, name] { relation = name; });
  }

  auto* mu = app.add_subcommand("mu", "Oriented matroid mu(V) of a 3-plane");
  std::string subspace, family;
  mu->add_option("--subspace", subspace, "Subspace JSON")->required()->check(CLI::ExistingFile);
  mu->add_option("--family", family, "Spanning vector family for mu_M")
      ->check(CLI::ExistingFile);
  mu->add_option("--out", out, "Output (stdout if omitted)");

  auto* cert = app.add_subcommand("certificate", "Run the strata certificate");
  std::string samples = "1,2,4,1024";
  std::string svg_dir;
  cert->add_option("--depth", depth, "N")->default_val(10)->check(CLI::PositiveNumber);
  cert->add_option("--samples", samples, "Comma-separated scale factors")
      ->default_val("1,2,4,1024");
  cert->add_option("--seed-file", seed_file, "Seed JSON")->check(CLI::ExistingFile);
  cert->add_option("--out", out, "Report JSON (stdout if omitted)");
  cert->add_option("--svg-dir", svg_dir, "Directory for figures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return RunSeedValidate(seed_file);
    if (build->parsed()) return RunBuild(depth, seed_file, out, svg);
    if (om_of->parsed()) return RunOmOf(in, allow_lower_rank, out);
    if (!relation.empty()) return RunOmCompare(relation, lhs, rhs, allow_lower_rank);
    if (mu->parsed()) return RunMu(subspace, family, out);
    if (cert->parsed()) return RunCertificate(depth, samples, seed_file, out, svg_dir);
  } catch (const Error& e) {
    std::cerr << "omstrata: error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kSeedRejected) {
      std::cerr << "omstrata: " << kRemedy << "\n";
      return kExitRejected;
    }
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "omstrata: error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
