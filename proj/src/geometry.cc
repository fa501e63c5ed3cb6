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

#include "omstrata/geometry.h"

#include <cctype>
#include <utility>

#include "omstrata/error.h"

namespace omstrata {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational Det2(const Rational& a, const Rational& b, const Rational& c,
              const Rational& d) {
  return Rational(a * d - b * c);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw Error(ErrorCode::kRationalParseError,
                "malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kRationalParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  if (text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) { return value.get_str(); }

char SignChar(Sign s) {
  switch (s) {
    case Sign::kPositive: return '+';
    case Sign::kNegative: return '-';
    case Sign::kZero: return '0';
  }
  return '?';
}

Vector3 operator*(const Rational& s, const Vector3& v) {
  return {s * v.x, s * v.y, s * v.z};
}

Vector3 operator+(const Vector3& a, const Vector3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Vector3 Cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

Rational Dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Rational Det3(const Vector3& u, const Vector3& v, const Vector3& w) {
  return Dot(u, Cross(v, w));
}

Sign SignDet3(const Vector3& u, const Vector3& v, const Vector3& w) {
  return SignOf(Det3(u, v, w));
}

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const Vector3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

std::ostream& operator<<(std::ostream& os, const Line2& l) {
  return os << l.a() << "*x + " << l.b() << "*y + " << l.c() << " = 0";
}

bool Line2::Contains(const PlanePoint& p) const {
  return SideOf(p) == Sign::kZero;
}

Sign Line2::SideOf(const PlanePoint& p) const {
  return SignOf(Rational(a_ * p.x + b_ * p.y + c_));
}

Line2 LineThrough(const PlanePoint& p, const PlanePoint& q) {
  if (p == q) {
    throw Error(ErrorCode::kCoincidentPoints, "line through a single point");
  }
  const Rational a = p.y - q.y;
  const Rational b = q.x - p.x;
  const Rational c = p.x * q.y - p.y * q.x;

  Integer scale;
  mpz_lcm(scale.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  Line2 line;
  line.a_ = a.get_num() * (scale / a.get_den());
  line.b_ = b.get_num() * (scale / b.get_den());
  line.c_ = c.get_num() * (scale / c.get_den());

  Integer g = gcd(gcd(line.a_, line.b_), line.c_);
  const int lead = sgn(line.a_) != 0 ? sgn(line.a_) : sgn(line.b_);
  if (lead < 0) g = -g;
  line.a_ /= g;
  line.b_ /= g;
  line.c_ /= g;
  line.first_ = p;
  line.second_ = q;
  return line;
}

PlanePoint Intersect(const Line2& l1, const Line2& l2) {
  const Integer d = l1.a() * l2.b() - l2.a() * l1.b();
  if (d == 0) {
    if (l1 == l2) throw Error(ErrorCode::kIdentical, "lines coincide");
    throw Error(ErrorCode::kParallel, "lines are parallel");
  }
  Rational x(l1.b() * l2.c() - l2.b() * l1.c(), d);
  Rational y(l1.c() * l2.a() - l2.c() * l1.a(), d);
  x.canonicalize();
  y.canonicalize();
  return {std::move(x), std::move(y)};
}

bool Collinear(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r) {
  return SignDet3(EmbedAffine(p), EmbedAffine(q), EmbedAffine(r)) ==
         Sign::kZero;
}

Rational CrossRatio(const PlanePoint& a, const PlanePoint& b,
                    const PlanePoint& c, const PlanePoint& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) {
    throw Error(ErrorCode::kDegeneratePoints,
                "cross-ratio needs four distinct points");
  }
  if (!Collinear(a, b, c) || !Collinear(a, b, d)) {
    throw Error(ErrorCode::kNotCollinear,
                "cross-ratio needs four collinear points");
  }
  // Parameterize p = a + t (b - a); read t off a non-zero coordinate.
  const bool use_x = b.x != a.x;
  const Rational span = use_x ? Rational(b.x - a.x) : Rational(b.y - a.y);
  auto param = [&](const PlanePoint& p) {
    return Rational((use_x ? Rational(p.x - a.x) : Rational(p.y - a.y)) /
                    span);
  };
  const Rational tc = param(c);
  const Rational td = param(d);
  // t_a = 0, t_b = 1.
  return abs(tc) / abs(tc - 1) * (abs(td - 1) / abs(td));
}

AffineMap2::AffineMap2(const std::array<std::array<Rational, 2>, 2>& linear,
                       const PlanePoint& translation)
    : linear_(linear), translation_(translation) {
  if (sgn(Determinant()) == 0) {
    throw Error(ErrorCode::kDegenerateTarget,
                "linear part of an affine automorphism must be invertible");
  }
}

AffineMap2 AffineMap2::Identity() {
  return AffineMap2({{{1, 0}, {0, 1}}}, {0, 0});
}

Rational AffineMap2::Determinant() const {
  return Det2(linear_[0][0], linear_[0][1], linear_[1][0], linear_[1][1]);
}

PlanePoint AffineMap2::operator()(const PlanePoint& p) const {
  return {linear_[0][0] * p.x + linear_[0][1] * p.y + translation_.x,
          linear_[1][0] * p.x + linear_[1][1] * p.y + translation_.y};
}

AffineMap2 AffineMap2::Inverse() const {
  const Rational det = Determinant();
  std::array<std::array<Rational, 2>, 2> inv = {{
      {linear_[1][1] / det, -linear_[0][1] / det},
      {-linear_[1][0] / det, linear_[0][0] / det},
  }};
  const PlanePoint t = {
      -(inv[0][0] * translation_.x + inv[0][1] * translation_.y),
      -(inv[1][0] * translation_.x + inv[1][1] * translation_.y)};
  return AffineMap2(inv, t);
}

AffineMap2 AffineMap2::Then(const AffineMap2& g) const {
  const auto& m = g.linear_;
  std::array<std::array<Rational, 2>, 2> prod;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      prod[r][c] = m[r][0] * linear_[0][c] + m[r][1] * linear_[1][c];
    }
  }
  return AffineMap2(prod, g(translation_));
}

PlanePoint ApplyAffine(const AffineMap2& f, const PlanePoint& p) {
  return f(p);
}

AffineMap2 AffineFromCorrespondence(const std::array<PlanePoint, 3>& src,
                                    const std::array<PlanePoint, 3>& dst) {
  if (Collinear(src[0], src[1], src[2])) {
    throw Error(ErrorCode::kDegenerateSource, "source triple is collinear");
  }
  if (Collinear(dst[0], dst[1], dst[2])) {
    throw Error(ErrorCode::kDegenerateTarget, "target triple is collinear");
  }
  // Columns of S are src edge vectors, columns of D are dst edge vectors;
  // the linear part is D S^{-1}.
  const Rational s00 = src[1].x - src[0].x, s01 = src[2].x - src[0].x;
  const Rational s10 = src[1].y - src[0].y, s11 = src[2].y - src[0].y;
  const Rational d00 = dst[1].x - dst[0].x, d01 = dst[2].x - dst[0].x;
  const Rational d10 = dst[1].y - dst[0].y, d11 = dst[2].y - dst[0].y;
  const Rational det = Det2(s00, s01, s10, s11);
  const Rational i00 = s11 / det, i01 = -s01 / det;
  const Rational i10 = -s10 / det, i11 = s00 / det;
  std::array<std::array<Rational, 2>, 2> linear = {{
      {d00 * i00 + d01 * i10, d00 * i01 + d01 * i11},
      {d10 * i00 + d11 * i10, d10 * i01 + d11 * i11},
  }};
  const PlanePoint t = {
      dst[0].x - (linear[0][0] * src[0].x + linear[0][1] * src[0].y),
      dst[0].y - (linear[1][0] * src[0].x + linear[1][1] * src[0].y)};
  return AffineMap2(linear, t);
}

Vector3 EmbedAffine(const PlanePoint& p) { return {p.x, p.y, 1}; }

PlanePoint PerspectiveNormalize(const Vector3& v) {
  if (sgn(v.z) <= 0) {
    throw Error(ErrorCode::kNonPositiveHeight,
                "perspective normalization needs z > 0");
  }
  return {v.x / v.z, v.y / v.z};
}

}  // namespace omstrata
