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

// Exact rational plane and homogeneous 3-space geometry.
//
// Every value here is a rational number held in lowest terms by GMP, so all
// predicates and constructions are exact. Degenerate inputs raise
// omstrata::Error with a geometry ErrorCode.

#ifndef OMSTRATA_GEOMETRY_H_
#define OMSTRATA_GEOMETRY_H_

#include <gmpxx.h>

#include <array>
#include <ostream>
#include <string>
#include <string_view>

namespace omstrata {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", "p/q". Rejects q = 0, whitespace, and anything else.
Rational ParseRational(std::string_view text);
// "p/q" in lowest terms, "/q" dropped when q = 1.
std::string FormatRational(const Rational& value);

enum class Sign : int { kNegative = -1, kZero = 0, kPositive = 1 };

inline Sign SignOf(const Rational& v) { return static_cast<Sign>(sgn(v)); }
inline Sign SignOf(const Integer& v) { return static_cast<Sign>(sgn(v)); }
inline Sign Negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
char SignChar(Sign s);

struct PlanePoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct Vector3 {
  Rational x;
  Rational y;
  Rational z;

  bool IsZero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }

  friend bool operator==(const Vector3&, const Vector3&) = default;
};

Vector3 operator*(const Rational& s, const Vector3& v);
Vector3 operator+(const Vector3& a, const Vector3& b);
Vector3 Cross(const Vector3& a, const Vector3& b);
Rational Dot(const Vector3& a, const Vector3& b);
Rational Det3(const Vector3& u, const Vector3& v, const Vector3& w);

std::ostream& operator<<(std::ostream& os, const PlanePoint& p);
std::ostream& operator<<(std::ostream& os, const Vector3& v);

// Sign of det[u; v; w].
Sign SignDet3(const Vector3& u, const Vector3& v, const Vector3& w);

// An affine line A x + B y + C = 0 with integer coefficients. The triple is
// divided by its gcd and its first non-zero entry among (A, B) is positive,
// so two Line2 values describe the same point set iff their coefficients
// compare equal.
class Line2 {
 public:
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const PlanePoint& first() const { return first_; }
  const PlanePoint& second() const { return second_; }

  bool Contains(const PlanePoint& p) const;
  // Side of p relative to the line: sign of A x + B y + C.
  Sign SideOf(const PlanePoint& p) const;

  friend bool operator==(const Line2& l, const Line2& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }

 private:
  friend Line2 LineThrough(const PlanePoint& p, const PlanePoint& q);

  Integer a_, b_, c_;
  PlanePoint first_, second_;
};

std::ostream& operator<<(std::ostream& os, const Line2& l);

// Throws kCoincidentPoints when p == q.
Line2 LineThrough(const PlanePoint& p, const PlanePoint& q);
// Throws kParallel or kIdentical when there is no unique meet.
PlanePoint Intersect(const Line2& l1, const Line2& l2);
bool Collinear(const PlanePoint& p, const PlanePoint& q, const PlanePoint& r);

// |t_c - t_a| / |t_c - t_b| * |t_d - t_b| / |t_d - t_a| where t is the affine
// parameter of each point along the common line. This equals the ratio of
// Euclidean lengths, since every length shares the direction norm.
// Throws kDegeneratePoints on any coincidence, kNotCollinear otherwise.
Rational CrossRatio(const PlanePoint& a, const PlanePoint& b,
                    const PlanePoint& c, const PlanePoint& d);

// p -> L p + t with det(L) != 0.
class AffineMap2 {
 public:
  // Throws kDegenerateTarget when det(linear) == 0.
  AffineMap2(const std::array<std::array<Rational, 2>, 2>& linear,
             const PlanePoint& translation);

  static AffineMap2 Identity();

  const std::array<std::array<Rational, 2>, 2>& linear() const {
    return linear_;
  }
  const PlanePoint& translation() const { return translation_; }
  Rational Determinant() const;

  PlanePoint operator()(const PlanePoint& p) const;
  AffineMap2 Inverse() const;
  // (f.Then(g))(p) == g(f(p)).
  AffineMap2 Then(const AffineMap2& g) const;

  friend bool operator==(const AffineMap2&, const AffineMap2&) = default;

 private:
  std::array<std::array<Rational, 2>, 2> linear_;
  PlanePoint translation_;
};

PlanePoint ApplyAffine(const AffineMap2& f, const PlanePoint& p);

// The unique affine automorphism with f(src[i]) == dst[i]. Throws
// kDegenerateSource / kDegenerateTarget when either triple is collinear.
AffineMap2 AffineFromCorrespondence(const std::array<PlanePoint, 3>& src,
                                    const std::array<PlanePoint, 3>& dst);

// (x, y) -> (x, y, 1).
Vector3 EmbedAffine(const PlanePoint& p);
// (x, y, z) -> (x / z, y / z). Throws kNonPositiveHeight when z <= 0.
PlanePoint PerspectiveNormalize(const Vector3& v);

}  // namespace omstrata

#endif  // OMSTRATA_GEOMETRY_H_
