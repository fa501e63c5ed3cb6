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

#include "omstrata/construction.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <regex>

#include "json.hpp"
#include "omstrata/error.h"
#include "omstrata/fingerprint.h"

namespace omstrata {
namespace {

const nlohmann::json& Oracle() {
  static const nlohmann::json oracle = [] {
    std::ifstream in(std::string(OMSTRATA_FIXTURE_DIR) + "/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return oracle;
}

PlanePoint OraclePoint(const char* key) {
  const auto& p = Oracle()[key];
  return {ParseRational(p[0].get<std::string>()),
          ParseRational(p[1].get<std::string>())};
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kSchemaError;
}

const ConfigurationFamily& Family20() {
  static const ConfigurationFamily family = Build(DefaultSeed(), 20);
  return family;
}

TEST(SeedTest, Validation) {
  EXPECT_TRUE(ValidateSeed(DefaultSeed()));

  Seed s = DefaultSeed();
  s.omega = {3, 0};
  SeedValidation v = ValidateSeed(s);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.violated, SeedConstraint::kS2);
  EXPECT_FALSE(v.diagnostic.empty());

  s = DefaultSeed();
  s.b1 = s.beta;
  EXPECT_EQ(ValidateSeed(s).violated, SeedConstraint::kS4);

  s = DefaultSeed();
  s.gamma = {7, 0};
  EXPECT_EQ(ValidateSeed(s).violated, SeedConstraint::kS1);

  s = DefaultSeed();
  s.a = {2, 0};
  EXPECT_EQ(ValidateSeed(s).violated, SeedConstraint::kS3);

  s = DefaultSeed();
  s.nu = {1, 0};
  EXPECT_EQ(ValidateSeed(s).violated, SeedConstraint::kS5);
}

TEST(BuildTest, DepthZeroIsSeed) {
  const ConfigurationFamily a0 = Build(DefaultSeed(), 0);
  EXPECT_EQ(a0, ConfigurationFamily::FromSeed(DefaultSeed()));
  EXPECT_EQ(a0.Points().size(), 7u);
  EXPECT_EQ(a0.b(1), DefaultSeed().b1);
  EXPECT_THROW(a0.c(1), Error);
}

TEST(BuildTest, FirstStepsMatchOracle) {
  const ConfigurationFamily& f = Family20();
  EXPECT_EQ(f.d(1), OraclePoint("d1"));
  EXPECT_EQ(f.b(2), OraclePoint("b2"));
  EXPECT_EQ(f.c(1), OraclePoint("c1"));
  EXPECT_EQ(f.c(2), OraclePoint("c2"));
  const auto& cx = Oracle()["c_x"];
  ASSERT_EQ(cx.size(), 20u);
  for (int i = 1; i <= 20; ++i) {
    EXPECT_EQ(f.c(i), (PlanePoint{ParseRational(cx[i - 1].get<std::string>()),
                                  Rational(0)}))
        << i;
  }
}

TEST(BuildTest, Incidences) {
  const ConfigurationFamily& f = Family20();
  const Seed& s = f.seed();
  for (int n = 1; n <= f.depth(); ++n) {
    EXPECT_TRUE(Collinear(s.omega, s.gamma, f.d(n)));
    EXPECT_TRUE(Collinear(s.alpha, f.b(n), f.d(n)));
    EXPECT_TRUE(Collinear(s.omega, s.beta, f.b(n + 1)));
    EXPECT_TRUE(Collinear(s.a, f.d(n), f.b(n + 1)));
    EXPECT_TRUE(Collinear(s.alpha, s.beta, f.c(n)));
    EXPECT_TRUE(Collinear(s.a, f.b(n + 1), f.c(n)));
  }
}

TEST(BuildTest, PointsPairwiseDistinct) {
  const auto points = Family20().Points();
  EXPECT_EQ(points.size(), 7u + 3u * 20u);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      EXPECT_NE(points[i].second, points[j].second)
          << points[i].first << " " << points[j].first;
    }
  }
}

TEST(BuildTest, MonotoneContainment) {
  const ConfigurationFamily& f = Family20();
  for (int m = 0; m < 20; ++m) {
    EXPECT_EQ(Extend(f.Truncated(m)), f.Truncated(m + 1));
    const auto small = f.Truncated(m).Points();
    const auto big = f.Truncated(m + 1).Points();
    for (const auto& p : small) {
      EXPECT_NE(std::find(big.begin(), big.end(), p), big.end());
    }
    EXPECT_EQ(big.size(), small.size() + 3);
  }
  EXPECT_EQ(Build(DefaultSeed(), 7), f.Truncated(7));
}

TEST(BuildTest, CIsDecreasingInsideSegment) {
  const ConfigurationFamily& f = Family20();
  for (int i = 1; i <= 20; ++i) {
    EXPECT_GT(f.c(i).x, DefaultSeed().alpha.x);
    EXPECT_LT(f.c(i).x, DefaultSeed().gamma.x);
    if (i > 1) EXPECT_LT(f.c(i).x, f.c(i - 1).x);
  }
}

TEST(BuildTest, DegenerateStep) {
  Seed s = DefaultSeed();
  s.a = {Rational(7, 2), Rational(5, 2)};  // on line omega-gamma
  ASSERT_TRUE(Collinear(s.omega, s.gamma, s.a));
  try {
    Extend(ConfigurationFamily::FromSeed(s));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateStep);
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([&] { Build(s, 1); }), ErrorCode::kSeedRejected);
  EXPECT_EQ(CodeOf([&] { Family20().Truncated(21); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { Family20().Point(Label::C(21)); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(MakeMiTest, RelabelsC) {
  const ConfigurationFamily f = Family20().Truncated(3);
  const LabeledArrangement m1 = MakeMi(f, 1);
  EXPECT_TRUE(m1.contains(Label::Delta()));
  EXPECT_FALSE(m1.contains(Label::C(1)));
  EXPECT_FALSE(m1.contains(Label::C(2)));
  EXPECT_TRUE(MakeMi(f, 2).contains(Label::C(1)));
  EXPECT_EQ(m1.at(Label::Delta()), EmbedAffine(f.c(1)));
  EXPECT_EQ(m1, m1.Sorted());
  for (int i = 1; i <= 3; ++i) {
    const LabeledArrangement mi = MakeMi(f, i);
    EXPECT_EQ(PerspectiveNormalize(mi.at(Label::Delta())), f.c(i));
    EXPECT_TRUE(Collinear(f.seed().alpha, f.seed().gamma,
                          PerspectiveNormalize(mi.at(Label::Delta()))));
  }
  const OrientedMatroid om1 = OrientedMatroidOf(MakeMi(f, 1));
  const OrientedMatroid om2 = OrientedMatroidOf(MakeMi(f, 2));
  EXPECT_NE(om1.ground_set(), om2.ground_set());
  EXPECT_NE(Fingerprint(om1), Fingerprint(om2));
  EXPECT_THROW(OmEqual(om1, om2), Error);
  EXPECT_THROW(MakeMi(f, 0), Error);
  EXPECT_THROW(MakeMi(f, 4), Error);
}

TEST(DegenerationTest, ScaleAndLimit) {
  const LabeledArrangement mi = MakeMi(Family20().Truncated(2), 1);
  const LabeledArrangement scaled = ScaleDegeneration(mi, Integer(4));
  const LabeledArrangement limit = LimitArrangement(mi);
  for (const auto& [label, v] : mi.elements()) {
    if (IsSpecial(label)) {
      EXPECT_EQ(scaled.at(label), v);
      EXPECT_EQ(limit.at(label), v);
    } else {
      EXPECT_EQ(scaled.at(label), Rational(1, 4) * v);
      EXPECT_TRUE(limit.at(label).IsZero());
    }
  }
  EXPECT_EQ(ScaleDegeneration(mi, Integer(1)), mi);
  const OrientedMatroid lim = OrientedMatroidOf(limit);
  EXPECT_EQ(lim.loops().size(), mi.size() - SpecialLabels().size());
  EXPECT_EQ(DropLoops(limit).labels(), SpecialLabels());
  EXPECT_THROW(ScaleDegeneration(mi, Integer(0)), Error);
}

TEST(DegenerationTest, ScaledSamplesStayInStratum) {
  const ConfigurationFamily f = Family20().Truncated(4);
  for (int i = 1; i <= 4; ++i) {
    const LabeledArrangement mi = MakeMi(f, i);
    const OrientedMatroid base = OrientedMatroidOf(mi);
    for (int n : {2, 3, 1024}) {
      EXPECT_TRUE(
          OmEqual(base, OrientedMatroidOf(ScaleDegeneration(mi, Integer(n)))));
    }
    EXPECT_TRUE(WeakMap(base, OrientedMatroidOf(LimitArrangement(mi))));
  }
}

TEST(DegenerationTest, LimitsAgreeAndMatchOracle) {
  const ConfigurationFamily f = Family20().Truncated(10);
  const OrientedMatroid m =
      OrientedMatroidOf(DropLoops(LimitArrangement(MakeMi(f, 1))));
  EXPECT_EQ(Fingerprint(m), Oracle()["m_fingerprint"].get<std::string>());
  for (int i = 2; i <= 10; ++i) {
    EXPECT_TRUE(OmEqual(
        m, OrientedMatroidOf(DropLoops(LimitArrangement(MakeMi(f, i))))));
  }
}

TEST(CrLedgerTest, MatchesOracle) {
  const auto ledger = CrLedger(Family20());
  ASSERT_EQ(ledger.size(), 20u);
  const auto& cr = Oracle()["cr"];
  for (std::size_t k = 0; k < cr.size(); ++k) {
    EXPECT_EQ(ledger[k].first, static_cast<int>(k) + 1);
    EXPECT_EQ(ledger[k].second, ParseRational(cr[k].get<std::string>()));
  }
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    for (std::size_t j = i + 1; j < ledger.size(); ++j) {
      EXPECT_NE(ledger[i].second, ledger[j].second);
    }
  }
  // Relabeling does not move points.
  const LabeledArrangement m2 = MakeMi(Family20(), 2);
  EXPECT_EQ(CrossRatio(DefaultSeed().alpha,
                       PerspectiveNormalize(m2.at(Label::Delta())),
                       DefaultSeed().gamma, DefaultSeed().beta),
            ledger[1].second);
}

TEST(CertificateTest, DefaultSeedPasses) {
  const std::vector<Integer> samples = {1, 2, 4, 1024};
  const CertificateReport report = Certificate(DefaultSeed(), 6, samples);
  EXPECT_TRUE(report.pass) << report.FirstFailure().value_or("");
  EXPECT_FALSE(report.FirstFailure().has_value());
  EXPECT_EQ(report.limit_fingerprint,
            Oracle()["m_fingerprint"].get<std::string>());
  ASSERT_EQ(report.checks.size(), 6u);
  const std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f"};
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(report.checks[k].id, ids[k]);
    EXPECT_TRUE(report.checks[k].pass) << report.checks[k].name;
  }
  ASSERT_EQ(report.records.size(), 6u);
  for (const auto& r : report.records) {
    EXPECT_EQ(r.c, Family20().c(r.i));
    EXPECT_EQ(r.limit_fingerprint, report.limit_fingerprint);
    EXPECT_EQ(r.degeneration.size(), samples.size());
    EXPECT_TRUE(r.weak_map_to_limit);
    EXPECT_TRUE(std::regex_match(r.mi_fingerprint,
                                 std::regex("[0-9a-f]{64}")));
  }
  EXPECT_EQ(report, Certificate(DefaultSeed(), 6, samples));
}

TEST(CertificateTest, RejectsBadSeeds) {
  Seed s = DefaultSeed();
  s.gamma = {7, 0};
  EXPECT_EQ(CodeOf([&] { Certificate(s, 3, {1, 2}); }),
            ErrorCode::kSeedRejected);
  EXPECT_EQ(CodeOf([&] { CrLedger(Build(DefaultSeed(), 0)); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(FigureTest, DeterministicAndLabeled) {
  const ConfigurationFamily a0 = Build(DefaultSeed(), 0);
  const ConfigurationFamily a1 = Build(DefaultSeed(), 1);
  const std::string svg0 = EmitFigure(a0, FigureStyle::kPoints);
  const std::string svg1 = EmitFigure(a1, FigureStyle::kConstruction);
  EXPECT_EQ(svg0, EmitFigure(a0, FigureStyle::kPoints));
  EXPECT_EQ(svg1, EmitFigure(a1, FigureStyle::kConstruction));
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos;
         p = s.find(needle, p + 1)) {
      ++n;
    }
    return n;
  };
  EXPECT_EQ(count(svg0, "<circle"), 7u);
  EXPECT_EQ(count(svg1, "<circle"), 10u);
  EXPECT_EQ(count(svg0, "<line"), 0u);
  EXPECT_GT(count(svg1, "<line"), 0u);
  EXPECT_EQ(svg0.rfind("<svg", 0), 0u);
  EXPECT_EQ(count(EmitFigure(LimitArrangement(MakeMi(a1, 1))), "<circle"),
            8u);
}

}  // namespace
}  // namespace omstrata
