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

// The iterated configurations A_0 c A_1 c ... , the relabeled arrangements
// behind M_i, their degenerations, and the certificate that checks the
// combinatorial properties of the strata exactly.

#ifndef OMSTRATA_CONSTRUCTION_H_
#define OMSTRATA_CONSTRUCTION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omstrata/geometry.h"
#include "omstrata/oriented_matroid.h"

namespace omstrata {

struct Seed {
  PlanePoint alpha;
  PlanePoint beta;
  PlanePoint gamma;
  PlanePoint omega;
  PlanePoint nu;
  PlanePoint a;
  PlanePoint b1;

  friend bool operator==(const Seed&, const Seed&) = default;
};

// alpha=(0,0) beta=(6,0) gamma=(4,0) omega=(3,5) a=(1,-2) b1=(9/2,5/2)
// nu=(-2,1).
Seed DefaultSeed();

enum class SeedConstraint {
  kS1,  // alpha, gamma, beta collinear, gamma strictly between
  kS2,  // omega off line alpha-beta
  kS3,  // a off lines alpha-beta, omega-beta, omega-gamma; a != omega
  kS4,  // b1 on the open segment omega-beta
  kS5,  // nu off every line through two of alpha..b1
  kS6,  // rational coordinates
};

struct SeedValidation {
  bool ok = true;
  std::optional<SeedConstraint> violated;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Checks S1..S6 in order and reports the first violation.
SeedValidation ValidateSeed(const Seed& seed);

// A_N as affine points: the seed plus b_2..b_{N+1}, c_1..c_N, d_1..d_N.
class ConfigurationFamily {
 public:
  // A_0. Performs no validation.
  static ConfigurationFamily FromSeed(const Seed& seed);

  const Seed& seed() const { return seed_; }
  int depth() const { return static_cast<int>(c_.size()); }
  // 1-based; b(1) is the seed's b1.
  const PlanePoint& b(int i) const;
  const PlanePoint& c(int i) const;
  const PlanePoint& d(int i) const;

  // Throws kIndexOutOfRange for labels outside A_depth.
  const PlanePoint& Point(const Label& label) const;
  // All points in global label order.
  std::vector<std::pair<Label, PlanePoint>> Points() const;
  LabeledArrangement Arrangement() const;
  // A_m for m <= depth().
  ConfigurationFamily Truncated(int m) const;

  friend bool operator==(const ConfigurationFamily&,
                         const ConfigurationFamily&) = default;

 private:
  friend ConfigurationFamily Extend(const ConfigurationFamily& family);

  Seed seed_;
  std::vector<PlanePoint> b_;  // b_1 .. b_{N+1}
  std::vector<PlanePoint> c_;
  std::vector<PlanePoint> d_;
};

// A_N -> A_{N+1}:
//   d_n     = line(omega, gamma) meet line(alpha, b_n)
//   b_{n+1} = line(omega, beta)  meet line(a, d_n)
//   c_n     = line(alpha, beta)  meet line(a, b_{n+1})
// with n = N + 1. Throws kDegenerateStep when a meet is not unique, a line's
// defining points coincide, or a new point lands on an existing one.
ConfigurationFamily Extend(const ConfigurationFamily& family);

// N-fold Extend from A_0. Throws kSeedRejected for an invalid seed.
ConfigurationFamily Build(const Seed& seed, int depth);

// The labels that stay at height 1 under degeneration:
// alpha, beta, gamma, omega, nu, a, delta, b1 (global order).
const std::vector<Label>& SpecialLabels();
bool IsSpecial(const Label& label);

// A_i embedded at z = 1 with c_i renamed delta, in global label order.
// Throws kIndexOutOfRange unless 1 <= i <= depth.
LabeledArrangement MakeMi(const ConfigurationFamily& family, int i);

// Special labels keep their vectors; every other vector is divided by n.
LabeledArrangement ScaleDegeneration(const LabeledArrangement& arrangement,
                                     const Integer& n);
// Special labels keep their vectors; every other vector becomes zero.
LabeledArrangement LimitArrangement(const LabeledArrangement& arrangement);
// The arrangement with its zero vectors removed.
LabeledArrangement DropLoops(const LabeledArrangement& arrangement);

// cr(i) = cross_ratio(alpha, c_i, gamma, beta) for i = 1..depth.
std::vector<std::pair<int, Rational>> CrLedger(
    const ConfigurationFamily& family);

struct DegenerationSample {
  Integer n;
  bool same_stratum = false;

  friend bool operator==(const DegenerationSample&,
                         const DegenerationSample&) = default;
};

struct CertificateRecord {
  int i = 0;
  PlanePoint c;
  Rational cross_ratio;
  std::string mi_fingerprint;
  std::string limit_fingerprint;
  std::vector<DegenerationSample> degeneration;
  bool weak_map_to_limit = false;

  friend bool operator==(const CertificateRecord&,
                         const CertificateRecord&) = default;
};

struct CertificateCheck {
  std::string id;    // "a" .. "f"
  std::string name;  // e.g. "c_distinct"
  bool pass = false;
  std::string detail;

  friend bool operator==(const CertificateCheck&,
                         const CertificateCheck&) = default;
};

struct CertificateReport {
  Seed seed;
  int depth = 0;
  std::vector<Integer> samples;
  std::vector<CertificateRecord> records;  // sorted by i
  // Fingerprint of M, the common limit restricted to its eight non-loops.
  std::string limit_fingerprint;
  std::vector<CertificateCheck> checks;  // a .. f
  bool pass = false;

  // "id name: detail" of the first failing check, if any.
  std::optional<std::string> FirstFailure() const;

  friend bool operator==(const CertificateReport&,
                         const CertificateReport&) = default;
};

// Runs checks (a)..(f). Throws kSeedRejected when the seed fails validation
// or the construction degenerates before `depth`.
CertificateReport Certificate(const Seed& seed, int depth,
                              const std::vector<Integer>& samples);

enum class FigureStyle {
  kPoints,        // labeled points only
  kConstruction,  // plus the construction lines
};

// Deterministic SVG. Coordinates are rounded to two decimals for display.
std::string EmitFigure(const ConfigurationFamily& family, FigureStyle style);
// Points of an arrangement with z > 0, perspective-normalized; other vectors
// are omitted.
std::string EmitFigure(const LabeledArrangement& arrangement);

}  // namespace omstrata

#endif  // OMSTRATA_CONSTRUCTION_H_
