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

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

#include "omstrata/error.h"
#include "omstrata/fingerprint.h"

namespace omstrata {
namespace {

PlanePoint P(long x, long y) { return {Rational(x), Rational(y)}; }

// Parameter of p along the segment from -> to, assuming p on that line.
Rational SegmentParameter(const PlanePoint& from, const PlanePoint& to,
                          const PlanePoint& p) {
  if (to.x != from.x) return (p.x - from.x) / (to.x - from.x);
  return (p.y - from.y) / (to.y - from.y);
}

bool StrictlyBetween(const PlanePoint& from, const PlanePoint& to,
                     const PlanePoint& p) {
  if (from == to || !Collinear(from, to, p)) return false;
  const Rational t = SegmentParameter(from, to, p);
  return sgn(t) > 0 && t < 1;
}

SeedValidation Fail(SeedConstraint which, std::string diagnostic) {
  return {false, which, std::move(diagnostic)};
}

}  // namespace

Seed DefaultSeed() {
  return {.alpha = P(0, 0),
          .beta = P(6, 0),
          .gamma = P(4, 0),
          .omega = P(3, 5),
          .nu = P(-2, 1),
          .a = P(1, -2),
          .b1 = {Rational(9, 2), Rational(5, 2)}};
}

SeedValidation ValidateSeed(const Seed& s) {
  if (!StrictlyBetween(s.alpha, s.beta, s.gamma)) {
    return Fail(SeedConstraint::kS1,
                "S1: gamma must lie strictly between alpha and beta on one "
                "line");
  }
  const Line2 alpha_beta = LineThrough(s.alpha, s.beta);
  if (alpha_beta.Contains(s.omega)) {
    return Fail(SeedConstraint::kS2, "S2: omega lies on line alpha-beta");
  }
  if (alpha_beta.Contains(s.a)) {
    return Fail(SeedConstraint::kS3, "S3: a lies on line alpha-beta");
  }
  if (s.a == s.omega) {
    return Fail(SeedConstraint::kS3, "S3: a coincides with omega");
  }
  if (LineThrough(s.omega, s.beta).Contains(s.a)) {
    return Fail(SeedConstraint::kS3, "S3: a lies on line omega-beta");
  }
  if (LineThrough(s.omega, s.gamma).Contains(s.a)) {
    return Fail(SeedConstraint::kS3, "S3: a lies on line omega-gamma");
  }
  if (!StrictlyBetween(s.omega, s.beta, s.b1)) {
    return Fail(SeedConstraint::kS4,
                "S4: b1 must lie on the open segment omega-beta");
  }
  const std::array<std::pair<const char*, const PlanePoint*>, 6> named = {{
      {"alpha", &s.alpha},
      {"beta", &s.beta},
      {"gamma", &s.gamma},
      {"omega", &s.omega},
      {"a", &s.a},
      {"b1", &s.b1},
  }};
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      if (*named[i].second == *named[j].second) continue;
      if (Collinear(*named[i].second, *named[j].second, s.nu)) {
        return Fail(SeedConstraint::kS5, std::string("S5: nu lies on line ") +
                                             named[i].first + "-" +
                                             named[j].first);
      }
    }
  }
  // S6 holds by construction: every coordinate is a Rational.
  return {};
}

// ---------------------------------------------------------------------------
// ConfigurationFamily

ConfigurationFamily ConfigurationFamily::FromSeed(const Seed& seed) {
  ConfigurationFamily f;
  f.seed_ = seed;
  f.b_.push_back(seed.b1);
  return f;
}

const PlanePoint& ConfigurationFamily::b(int i) const {
  if (i < 1 || i > static_cast<int>(b_.size())) {
    throw Error(ErrorCode::kIndexOutOfRange, "b" + std::to_string(i));
  }
  return b_[i - 1];
}

const PlanePoint& ConfigurationFamily::c(int i) const {
  if (i < 1 || i > depth()) {
    throw Error(ErrorCode::kIndexOutOfRange, "c" + std::to_string(i));
  }
  return c_[i - 1];
}

const PlanePoint& ConfigurationFamily::d(int i) const {
  if (i < 1 || i > depth()) {
    throw Error(ErrorCode::kIndexOutOfRange, "d" + std::to_string(i));
  }
  return d_[i - 1];
}

const PlanePoint& ConfigurationFamily::Point(const Label& label) const {
  switch (label.kind()) {
    case Label::Kind::kAlpha: return seed_.alpha;
    case Label::Kind::kBeta: return seed_.beta;
    case Label::Kind::kGamma: return seed_.gamma;
    case Label::Kind::kOmega: return seed_.omega;
    case Label::Kind::kNu: return seed_.nu;
    case Label::Kind::kA: return seed_.a;
    case Label::Kind::kB: return b(label.index());
    case Label::Kind::kC: return c(label.index());
    case Label::Kind::kD: return d(label.index());
    default: break;
  }
  throw Error(ErrorCode::kIndexOutOfRange, "no point " + label.Name());
}

std::vector<std::pair<Label, PlanePoint>> ConfigurationFamily::Points() const {
  std::vector<std::pair<Label, PlanePoint>> out = {
      {Label::Alpha(), seed_.alpha}, {Label::Beta(), seed_.beta},
      {Label::Gamma(), seed_.gamma}, {Label::Omega(), seed_.omega},
      {Label::Nu(), seed_.nu},       {Label::A(), seed_.a},
  };
  for (int i = 1; i <= depth() + 1; ++i) {
    out.emplace_back(Label::B(i), b(i));
    if (i <= depth()) {
      out.emplace_back(Label::C(i), c(i));
      out.emplace_back(Label::D(i), d(i));
    }
  }
  return out;
}

LabeledArrangement ConfigurationFamily::Arrangement() const {
  return LabeledArrangement::FromAffine(Points());
}

ConfigurationFamily ConfigurationFamily::Truncated(int m) const {
  if (m < 0 || m > depth()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "depth " + std::to_string(m) + " of a family of depth " +
                    std::to_string(depth()));
  }
  ConfigurationFamily f;
  f.seed_ = seed_;
  f.b_.assign(b_.begin(), b_.begin() + m + 1);
  f.c_.assign(c_.begin(), c_.begin() + m);
  f.d_.assign(d_.begin(), d_.begin() + m);
  return f;
}

ConfigurationFamily Extend(const ConfigurationFamily& family) {
  const int n = family.depth() + 1;
  const Seed& s = family.seed();
  auto meet = [n](const PlanePoint& p1, const PlanePoint& p2,
                  const PlanePoint& q1, const PlanePoint& q2,
                  const std::string& lines) {
    try {
      return Intersect(LineThrough(p1, p2), LineThrough(q1, q2));
    } catch (const Error& e) {
      throw Error(ErrorCode::kDegenerateStep,
                  "step " + std::to_string(n) + ", lines " + lines + ": " +
                      e.what());
    }
  };
  const std::string bn = "b" + std::to_string(n);
  const std::string dn = "d" + std::to_string(n);
  const std::string bn1 = "b" + std::to_string(n + 1);

  std::vector<std::pair<Label, PlanePoint>> existing = family.Points();
  auto place = [&](const Label& label, PlanePoint p, const std::string& lines) {
    for (const auto& [other, q] : existing) {
      if (q == p) {
        throw Error(ErrorCode::kDegenerateStep,
                    "step " + std::to_string(n) + ", lines " + lines + ": " +
                        label.Name() + " coincides with " + other.Name());
      }
    }
    existing.emplace_back(label, p);
    return p;
  };

  const std::string l1 = "omega-gamma/alpha-" + bn;
  const std::string l2 = "omega-beta/a-" + dn;
  const std::string l3 = "alpha-beta/a-" + bn1;
  const PlanePoint d =
      place(Label::D(n), meet(s.omega, s.gamma, s.alpha, family.b(n), l1), l1);
  const PlanePoint b_next =
      place(Label::B(n + 1), meet(s.omega, s.beta, s.a, d, l2), l2);
  const PlanePoint c =
      place(Label::C(n), meet(s.alpha, s.beta, s.a, b_next, l3), l3);

  ConfigurationFamily out = family;
  out.d_.push_back(d);
  out.b_.push_back(b_next);
  out.c_.push_back(c);
  return out;
}

ConfigurationFamily Build(const Seed& seed, int depth) {
  if (const SeedValidation v = ValidateSeed(seed); !v) {
    throw Error(ErrorCode::kSeedRejected, v.diagnostic);
  }
  if (depth < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative depth");
  }
  ConfigurationFamily f = ConfigurationFamily::FromSeed(seed);
  for (int n = 0; n < depth; ++n) f = Extend(f);
  return f;
}

// ---------------------------------------------------------------------------
// M_i and its degenerations

const std::vector<Label>& SpecialLabels() {
  static const std::vector<Label> kSpecial = {
      Label::Alpha(), Label::Beta(), Label::Gamma(), Label::Omega(),
      Label::Nu(),    Label::A(),    Label::Delta(), Label::B(1),
  };
  return kSpecial;
}

bool IsSpecial(const Label& label) {
  const auto& special = SpecialLabels();
  return std::find(special.begin(), special.end(), label) != special.end();
}

LabeledArrangement MakeMi(const ConfigurationFamily& family, int i) {
  if (i < 1 || i > family.depth()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "M_" + std::to_string(i) + " needs 1 <= i <= depth = " +
                    std::to_string(family.depth()));
  }
  auto points = family.Truncated(i).Points();
  for (auto& [label, p] : points) {
    if (label == Label::C(i)) label = Label::Delta();
  }
  return LabeledArrangement::FromAffine(points).Sorted();
}

LabeledArrangement ScaleDegeneration(const LabeledArrangement& arrangement,
                                     const Integer& n) {
  if (n < 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "degeneration parameter must be positive");
  }
  const Rational factor(Integer(1), n);
  std::vector<LabeledArrangement::Element> out;
  for (const auto& [label, v] : arrangement.elements()) {
    out.emplace_back(label, IsSpecial(label) ? v : factor * v);
  }
  return LabeledArrangement(std::move(out));
}

LabeledArrangement LimitArrangement(const LabeledArrangement& arrangement) {
  std::vector<LabeledArrangement::Element> out;
  for (const auto& [label, v] : arrangement.elements()) {
    out.emplace_back(label, IsSpecial(label) ? v : Vector3{0, 0, 0});
  }
  return LabeledArrangement(std::move(out));
}

LabeledArrangement DropLoops(const LabeledArrangement& arrangement) {
  std::vector<LabeledArrangement::Element> out;
  for (const auto& e : arrangement.elements()) {
    if (!e.second.IsZero()) out.push_back(e);
  }
  return LabeledArrangement(std::move(out));
}

std::vector<std::pair<int, Rational>> CrLedger(
    const ConfigurationFamily& family) {
  if (family.depth() < 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "cross-ratio ledger of A_0");
  }
  const Seed& s = family.seed();
  std::vector<std::pair<int, Rational>> out;
  for (int i = 1; i <= family.depth(); ++i) {
    out.emplace_back(i, CrossRatio(s.alpha, family.c(i), s.gamma, s.beta));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificate

std::optional<std::string> CertificateReport::FirstFailure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.id + " " + c.name + ": " + c.detail;
  }
  return std::nullopt;
}

namespace {

struct Limb {
  PlanePoint alpha, beta, gamma, delta, omega, a, b1;
};

Limb SpecialPoints(const LabeledArrangement& arrangement) {
  auto at = [&](const Label& l) {
    return PerspectiveNormalize(arrangement.at(l));
  };
  return {at(Label::Alpha()), at(Label::Beta()),  at(Label::Gamma()),
          at(Label::Delta()), at(Label::Omega()), at(Label::A()),
          at(Label::B(1))};
}

}  // namespace

CertificateReport Certificate(const Seed& seed, int depth,
                              const std::vector<Integer>& samples) {
  if (depth < 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "certificate depth must be >= 1");
  }
  if (samples.empty()) {
    throw Error(ErrorCode::kIndexOutOfRange, "no degeneration samples");
  }
  for (const auto& n : samples) {
    if (n < 1) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "degeneration samples must be positive");
    }
  }
  ConfigurationFamily family;
  std::vector<std::pair<int, Rational>> ledger;
  try {
    family = Build(seed, depth);
    ledger = CrLedger(family);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSeedRejected) throw;
    throw Error(ErrorCode::kSeedRejected, e.what());
  }

  CertificateReport report;
  report.seed = seed;
  report.depth = depth;
  report.samples = samples;

  std::vector<LabeledArrangement> limits;
  std::vector<OrientedMatroid> limit_oms;
  bool stays_in_stratum = true;
  bool weak_maps = true;
  for (int i = 1; i <= depth; ++i) {
    const LabeledArrangement mi = MakeMi(family, i);
    const OrientedMatroid om = OrientedMatroidOf(mi);
    CertificateRecord record;
    record.i = i;
    record.c = family.c(i);
    record.cross_ratio = ledger[i - 1].second;
    record.mi_fingerprint = Fingerprint(om);
    for (const auto& n : samples) {
      const bool same = OmEqual(OrientedMatroidOf(ScaleDegeneration(mi, n)), om);
      stays_in_stratum = stays_in_stratum && same;
      record.degeneration.push_back({n, same});
    }
    const LabeledArrangement limit = LimitArrangement(mi);
    limit_oms.push_back(OrientedMatroidOf(DropLoops(limit)));
    record.limit_fingerprint = Fingerprint(limit_oms.back());
    record.weak_map_to_limit = WeakMap(om, OrientedMatroidOf(limit));
    weak_maps = weak_maps && record.weak_map_to_limit;
    limits.push_back(limit);
    report.records.push_back(std::move(record));
  }

  auto add_check = [&](std::string id, std::string name, bool pass,
                       std::string detail) {
    report.checks.push_back(
        {std::move(id), std::move(name), pass, std::move(detail)});
  };

  // (a) the c_i are pairwise distinct.
  {
    std::optional<std::pair<int, int>> clash;
    for (int i = 1; i <= depth && !clash; ++i) {
      for (int j = i + 1; j <= depth && !clash; ++j) {
        if (family.c(i) == family.c(j)) clash = {i, j};
      }
    }
    add_check("a", "c_distinct", !clash,
              clash ? "c" + std::to_string(clash->first) + " = c" +
                          std::to_string(clash->second)
                    : std::to_string(depth) + " pairwise distinct points");
  }
  // (b) the cross-ratios are pairwise distinct.
  {
    std::optional<std::pair<int, int>> clash;
    for (int i = 0; i < depth && !clash; ++i) {
      for (int j = i + 1; j < depth && !clash; ++j) {
        if (ledger[i].second == ledger[j].second) clash = {i + 1, j + 1};
      }
    }
    add_check("b", "cr_distinct", !clash,
              clash ? "cr(" + std::to_string(clash->first) + ") = cr(" +
                          std::to_string(clash->second) + ")"
                    : std::to_string(depth) + " pairwise distinct values");
  }
  // (c) every scaled member of each family realizes M_i.
  {
    std::string detail = "m constant along every scaled family";
    if (!stays_in_stratum) {
      for (const auto& r : report.records) {
        for (const auto& s : r.degeneration) {
          if (!s.same_stratum) {
            detail = "M_" + std::to_string(r.i) + " left its stratum at n = " +
                     s.n.get_str();
            break;
          }
        }
        if (detail.starts_with("M_")) break;
      }
    }
    add_check("c", "degeneration_in_stratum", stays_in_stratum, detail);
  }
  // (d) all limits realize one oriented matroid M.
  bool limits_agree = true;
  {
    std::string detail;
    for (int i = 1; i < depth && limits_agree; ++i) {
      if (!OmEqual(limit_oms[0], limit_oms[i])) {
        limits_agree = false;
        detail = "limit of M_" + std::to_string(i + 1) +
                 " differs from limit of M_1";
      }
    }
    if (limits_agree) {
      report.limit_fingerprint = Fingerprint(limit_oms[0]);
      detail = "common limit M on " +
               std::to_string(limit_oms[0].ground_set().size()) + " elements";
    }
    add_check("d", "limits_agree", limits_agree, detail);
  }
  // (e) cross-ratios separate limits that realize the same M. Within one
  // scaled family the affine map fixing omega, a and matching beta carries
  // alpha, b1, gamma, delta along; across families i != j it matches gamma
  // but not delta.
  {
    bool ok = limits_agree;
    std::string detail;
    auto fail = [&](const std::string& why) {
      if (ok) detail = why;
      ok = false;
    };
    if (!limits_agree) detail = "limits do not agree";
    std::vector<Limb> limbs;
    for (int i = 1; i <= depth && ok; ++i) {
      const LabeledArrangement mi = MakeMi(family, i);
      const Limb lim = SpecialPoints(limits[i - 1]);
      limbs.push_back(lim);
      const Rational cr = CrossRatio(lim.alpha, lim.delta, lim.gamma, lim.beta);
      if (cr != ledger[i - 1].second) {
        fail("limit cross-ratio of M_" + std::to_string(i) +
             " differs from cr(" + std::to_string(i) + ")");
        break;
      }
      const Limb first = SpecialPoints(ScaleDegeneration(mi, samples.front()));
      const Limb last = SpecialPoints(ScaleDegeneration(mi, samples.back()));
      const AffineMap2 f = AffineFromCorrespondence(
          {first.omega, first.a, first.beta}, {last.omega, last.a, last.beta});
      if (f(first.alpha) != last.alpha || f(first.b1) != last.b1 ||
          f(first.gamma) != last.gamma || f(first.delta) != last.delta ||
          CrossRatio(last.alpha, last.delta, last.gamma, last.beta) != cr) {
        fail("scaled family of M_" + std::to_string(i) +
             " is not affinely rigid");
      }
    }
    for (int i = 0; i < depth && ok; ++i) {
      for (int j = i + 1; j < depth && ok; ++j) {
        const Limb& u = limbs[i];
        const Limb& w = limbs[j];
        const AffineMap2 g =
            AffineFromCorrespondence({u.omega, u.a, u.beta}, {w.omega, w.a, w.beta});
        const bool matches_gamma = g(u.alpha) == w.alpha && g(u.b1) == w.b1 &&
                                   g(u.gamma) == w.gamma;
        if (!matches_gamma || g(u.delta) == w.delta ||
            ledger[i].second == ledger[j].second) {
          fail("limits of M_" + std::to_string(i + 1) + " and M_" +
               std::to_string(j + 1) + " are not separated by cr");
        }
      }
    }
    if (ok) {
      detail = std::to_string(depth * (depth - 1) / 2) +
               " pairs separated by cr with a common limit";
    }
    add_check("e", "cr_separates_limits", ok, detail);
  }
  // (f) M_i -> M is a weak map.
  {
    std::string detail = "weak map M_i -> M for every i";
    if (!weak_maps) {
      for (const auto& r : report.records) {
        if (!r.weak_map_to_limit) {
          detail = "no weak map M_" + std::to_string(r.i) + " -> M";
          break;
        }
      }
    }
    add_check("f", "weak_map_to_limit", weak_maps, detail);
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CertificateCheck& c) { return c.pass; });
  return report;
}

// ---------------------------------------------------------------------------
// Figures

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 60.0;

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string DisplayName(const Label& label) {
  switch (label.kind()) {
    case Label::Kind::kAlpha: return "α";
    case Label::Kind::kBeta: return "β";
    case Label::Kind::kGamma: return "γ";
    case Label::Kind::kOmega: return "ω";
    case Label::Kind::kNu: return "ν";
    case Label::Kind::kDelta: return "δ";
    default: return label.Name();
  }
}

class SvgCanvas {
 public:
  explicit SvgCanvas(const std::vector<std::pair<Label, PlanePoint>>& points) {
    for (const auto& [label, p] : points) {
      const double x = p.x.get_d();
      const double y = p.y.get_d();
      min_x_ = std::min(min_x_, x);
      max_x_ = std::max(max_x_, x);
      min_y_ = std::min(min_y_, y);
      max_y_ = std::max(max_y_, y);
    }
    const double span = std::max({max_x_ - min_x_, max_y_ - min_y_, 1e-9});
    scale_ = (kCanvas - 2 * kMargin) / span;
  }

  std::string X(const PlanePoint& p) const {
    return Fixed(kMargin + (p.x.get_d() - min_x_) * scale_);
  }
  std::string Y(const PlanePoint& p) const {
    return Fixed(kCanvas - kMargin - (p.y.get_d() - min_y_) * scale_);
  }

 private:
  double min_x_ = 1e300, max_x_ = -1e300, min_y_ = 1e300, max_y_ = -1e300;
  double scale_ = 1.0;
};

std::string Render(const std::vector<std::pair<Label, PlanePoint>>& points,
                   const std::vector<std::pair<PlanePoint, PlanePoint>>& lines) {
  const SvgCanvas canvas(points);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (const auto& [from, to] : lines) {
    os << "<line x1=\"" << canvas.X(from) << "\" y1=\"" << canvas.Y(from)
       << "\" x2=\"" << canvas.X(to) << "\" y2=\"" << canvas.Y(to)
       << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  }
  for (const auto& [label, p] : points) {
    os << "<circle cx=\"" << canvas.X(p) << "\" cy=\"" << canvas.Y(p)
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << canvas.X(p) << "\" y=\"" << canvas.Y(p)
       << "\" dx=\"5\" dy=\"-5\" font-size=\"14\" font-family=\"serif\">"
       << DisplayName(label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// The segment of `line` spanned by the configuration points lying on it.
std::pair<PlanePoint, PlanePoint> Extent(
    const Line2& line, const std::vector<std::pair<Label, PlanePoint>>& points) {
  PlanePoint lo = line.first(), hi = line.first();
  Rational t_lo = 0, t_hi = 0;
  for (const auto& [label, p] : points) {
    if (!line.Contains(p)) continue;
    const Rational t = SegmentParameter(line.first(), line.second(), p);
    if (t < t_lo) {
      t_lo = t;
      lo = p;
    }
    if (t > t_hi) {
      t_hi = t;
      hi = p;
    }
  }
  return {lo, hi};
}

}  // namespace

std::string EmitFigure(const ConfigurationFamily& family, FigureStyle style) {
  const auto points = family.Points();
  std::vector<std::pair<PlanePoint, PlanePoint>> lines;
  if (style == FigureStyle::kConstruction) {
    const Seed& s = family.seed();
    std::vector<Line2> defining = {LineThrough(s.omega, s.gamma),
                                   LineThrough(s.omega, s.beta),
                                   LineThrough(s.alpha, s.beta)};
    for (int n = 1; n <= family.depth(); ++n) {
      defining.push_back(LineThrough(s.alpha, family.b(n)));
      defining.push_back(LineThrough(s.a, family.d(n)));
      defining.push_back(LineThrough(s.a, family.b(n + 1)));
    }
    for (const auto& line : defining) lines.push_back(Extent(line, points));
  }
  return Render(points, lines);
}

std::string EmitFigure(const LabeledArrangement& arrangement) {
  std::vector<std::pair<Label, PlanePoint>> points;
  const LabeledArrangement sorted = arrangement.Sorted();
  for (const auto& [label, v] : sorted.elements()) {
    if (sgn(v.z) > 0) points.emplace_back(label, PerspectiveNormalize(v));
  }
  return Render(points, {});
}

}  // namespace omstrata
