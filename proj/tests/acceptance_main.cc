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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "omstrata/construction.h"
#include "omstrata/error.h"
#include "omstrata/fingerprint.h"
#include "omstrata/geometry.h"
#include "omstrata/grassmann.h"
#include "omstrata/io.h"
#include "omstrata/oriented_matroid.h"
#include "test_util.h"

namespace omstrata {
namespace {

using ::omstrata::testing::RationalGen;
using ::omstrata::testing::SignsUnder;

// Pinned budgets, in seconds.
constexpr double kFlagshipBudget = 10.0;
constexpr double kExtendedBudget = 120.0;

const std::vector<Integer> kSamples = {1, 2, 4, 1024};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Format(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", seconds);
  return buf;
}

Outcome CertificateWithin(int depth, double budget) {
  const auto start = std::chrono::steady_clock::now();
  const CertificateReport report = Certificate(DefaultSeed(), depth, kSamples);
  const double elapsed = Seconds(start);
  std::ostringstream os;
  os << "depth " << depth << ", " << report.records.size() << " records, "
     << Format(elapsed) << " (limit " << Format(budget) << ")";
  if (!report.pass) os << ", first failure " << *report.FirstFailure();
  bool distinct = report.records.size() == static_cast<std::size_t>(depth);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    for (std::size_t j = i + 1; j < report.records.size(); ++j) {
      distinct = distinct && report.records[i].c != report.records[j].c &&
                 report.records[i].cross_ratio != report.records[j].cross_ratio;
    }
    distinct = distinct &&
               report.records[i].limit_fingerprint == report.limit_fingerprint;
  }
  return {report.pass && distinct && elapsed < budget, os.str()};
}

Outcome ScalingInvariance() {
  RationalGen gen(1001);
  int agree = 0;
  constexpr int kTrials = 200;
  for (int t = 0; t < kTrials; ++t) {
    const LabeledArrangement arr = gen.Arrangement(gen.Int(3, 8));
    std::vector<LabeledArrangement::Element> scaled;
    for (const auto& [label, v] : arr.elements()) {
      scaled.emplace_back(label, gen.Positive(50, 17) * v);
    }
    if (OmEqual(OrientedMatroidOf(arr),
                OrientedMatroidOf(LabeledArrangement(std::move(scaled))))) {
      ++agree;
    }
  }
  return {agree == kTrials, std::to_string(agree) + "/" +
                                std::to_string(kTrials) + " arrangements"};
}

Outcome CovectorOracle() {
  RationalGen gen(1002);
  long misses = 0, observed = 0, zero_hits = 0;
  for (int t = 0; t < 50; ++t) {
    const LabeledArrangement arr = gen.Arrangement(gen.Int(3, 6));
    const std::vector<SignVector> covectors =
        CovectorsOf(OrientedMatroidOf(arr));
    for (int k = 0; k < 1000; ++k) {
      // Small coordinates make functionals through elements common.
      const Vector3 phi{gen.Small(3, 2), gen.Small(3, 2), gen.Small(3, 2)};
      const SignVector x = SignsUnder(phi, arr);
      ++observed;
      if (x.str().find('0') != std::string::npos) ++zero_hits;
      if (!std::binary_search(covectors.begin(), covectors.end(), x)) ++misses;
    }
  }
  return {misses == 0, std::to_string(observed) + " functionals, " +
                           std::to_string(zero_hits) + " with zeros, " +
                           std::to_string(misses) + " misses"};
}

Outcome PhiMuCoherence() {
  RationalGen gen(1003);
  int coherent = 0, invariant = 0;
  for (int t = 0; t < 50; ++t) {
    const Subspace v = gen.RandomSubspace(6);
    const OrientedMatroid mu = MuOf(v);
    if (OmEqual(OrientedMatroidOf(ProjectionArrangement(v)), mu)) ++coherent;
    for (int k = 0; k < 10; ++k) {
      if (OmEqual(MuOf(v.ChangeBasis(gen.InvertibleMatrix3())), mu)) {
        ++invariant;
      }
    }
  }
  return {coherent == 50 && invariant == 500,
          std::to_string(coherent) + "/50 coherent, " +
              std::to_string(invariant) + "/500 basis changes invariant"};
}

Outcome CrossRatioInvariance() {
  RationalGen gen(1004);
  int equal = 0, rebuilt = 0, rejected = 0;
  for (int t = 0; t < 100; ++t) {
    const PlanePoint p = gen.Point();
    PlanePoint d;
    do {
      d = gen.Point();
    } while (sgn(d.x) == 0 && sgn(d.y) == 0);
    std::vector<Rational> ts;
    while (ts.size() < 4) {
      const Rational s = gen.Small();
      if (std::find(ts.begin(), ts.end(), s) == ts.end()) ts.push_back(s);
    }
    std::array<PlanePoint, 4> q;
    for (int i = 0; i < 4; ++i) q[i] = {p.x + ts[i] * d.x, p.y + ts[i] * d.y};
    const Rational cr = CrossRatio(q[0], q[1], q[2], q[3]);
    for (int k = 0; k < 20; ++k) {
      const AffineMap2 f = gen.Automorphism();
      if (CrossRatio(f(q[0]), f(q[1]), f(q[2]), f(q[3])) == cr) ++equal;
    }
  }
  for (int t = 0; t < 100; ++t) {
    std::array<PlanePoint, 3> src, dst;
    do {
      for (auto& s : src) s = gen.Point();
    } while (Collinear(src[0], src[1], src[2]));
    do {
      for (auto& s : dst) s = gen.Point();
    } while (Collinear(dst[0], dst[1], dst[2]));
    const AffineMap2 f = AffineFromCorrespondence(src, dst);
    if (f(src[0]) == dst[0] && f(src[1]) == dst[1] && f(src[2]) == dst[2]) {
      ++rebuilt;
    }
    std::array<PlanePoint, 3> flat = {src[0], src[1],
                                      {2 * src[1].x - src[0].x,
                                       2 * src[1].y - src[0].y}};
    try {
      AffineFromCorrespondence(flat, dst);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDegenerateSource) ++rejected;
    }
  }
  return {equal == 2000 && rebuilt == 100 && rejected == 100,
          std::to_string(equal) + "/2000 invariant, " +
              std::to_string(rebuilt) + "/100 reconstructed, " +
              std::to_string(rejected) + "/100 collinear rejected"};
}

Outcome MapSanity() {
  RationalGen gen(1005);
  int reflexive = 0;
  for (int t = 0; t < 50; ++t) {
    const OrientedMatroid om = OrientedMatroidOf(gen.Arrangement(gen.Int(3, 7)));
    if (StrongMap(om, om) && WeakMap(om, om) && OmEqual(om, om)) ++reflexive;
  }

  const ConfigurationFamily family = Build(DefaultSeed(), 10);
  const OrientedMatroid m =
      OrientedMatroidOf(DropLoops(LimitArrangement(MakeMi(family, 1))));
  int degenerate = 0, degenerate_total = 0;
  for (const Label& label : m.ground_set()) {
    ++degenerate_total;
    if (StrongMap(m, Contract(m, label))) ++degenerate;
  }
  ++degenerate_total;
  if (StrongMap(m, AllLoops(m.ground_set()))) ++degenerate;

  int weak = 0;
  const CertificateReport report = Certificate(DefaultSeed(), 10, kSamples);
  for (int i = 1; i <= 10; ++i) {
    const LabeledArrangement mi = MakeMi(family, i);
    if (WeakMap(OrientedMatroidOf(mi),
                OrientedMatroidOf(LimitArrangement(mi))) &&
        report.records[i - 1].weak_map_to_limit) {
      ++weak;
    }
  }
  return {reflexive == 50 && degenerate == degenerate_total && weak == 10,
          std::to_string(reflexive) + "/50 reflexive, " +
              std::to_string(degenerate) + "/" +
              std::to_string(degenerate_total) + " loop degenerations, " +
              std::to_string(weak) + "/10 weak maps M_i -> M"};
}

Outcome Determinism() {
  auto render = [] {
    return DumpJson(ReportToJson(
        RenderReport(Certificate(DefaultSeed(), 10, kSamples))));
  };
  const std::string first = Sha256Hex(render());
  const std::string second = Sha256Hex(render());
  std::ifstream in(std::string(OMSTRATA_FIXTURE_DIR) +
                   "/report_default_n10.json", std::ios::binary);
  std::stringstream frozen;
  frozen << in.rdbuf();
  const bool matches_fixture = Sha256Hex(frozen.str()) == first;
  return {first == second && matches_fixture,
          "sha256 " + first.substr(0, 16) + "..., fixture " +
              (matches_fixture ? "identical" : "differs")};
}

}  // namespace
}  // namespace omstrata

int main() {
  using namespace omstrata;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {
          {"1 certificate pass, N=10",
           [] { return CertificateWithin(10, kFlagshipBudget); }},
          {"2 extended depth, N=20",
           [] { return CertificateWithin(20, kExtendedBudget); }},
          {"3 scaling invariance", ScalingInvariance},
          {"4 covector oracle", CovectorOracle},
          {"5 phi/mu coherence", PhiMuCoherence},
          {"6 cross-ratio invariance", CrossRatioInvariance},
          {"7 strong/weak map sanity", MapSanity},
          {"8 determinism", Determinism},
      };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
