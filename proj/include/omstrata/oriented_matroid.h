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

// Rank-3 oriented matroids of vector arrangements.
//
// An OrientedMatroid is stored as its cocircuit set in canonical form: each
// cocircuit is a string over {'+', '-', '0'} indexed by the ground set in
// global label order, and the set is sorted bytewise. Two oriented matroids
// on the same ground set are equal iff these sets are equal.

#ifndef OMSTRATA_ORIENTED_MATROID_H_
#define OMSTRATA_ORIENTED_MATROID_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "omstrata/geometry.h"

namespace omstrata {

// A ground-set element name. The global order is
//   alpha, beta, gamma, omega, nu, a, delta, b1, c1, d1, b2, c2, d2, ...,
// followed by plain integer labels in numeric order.
class Label {
 public:
  enum class Kind : std::uint8_t {
    kAlpha,
    kBeta,
    kGamma,
    kOmega,
    kNu,
    kA,
    kDelta,
    kB,
    kC,
    kD,
    kIndex,
  };

  static Label Alpha() { return Label(Kind::kAlpha, 0); }
  static Label Beta() { return Label(Kind::kBeta, 0); }
  static Label Gamma() { return Label(Kind::kGamma, 0); }
  static Label Omega() { return Label(Kind::kOmega, 0); }
  static Label Nu() { return Label(Kind::kNu, 0); }
  static Label A() { return Label(Kind::kA, 0); }
  static Label Delta() { return Label(Kind::kDelta, 0); }
  static Label B(int i) { return Indexed(Kind::kB, i); }
  static Label C(int i) { return Indexed(Kind::kC, i); }
  static Label D(int i) { return Indexed(Kind::kD, i); }
  static Label Index(int i) { return Indexed(Kind::kIndex, i); }

  // Accepts the ASCII names produced by Name(), the Greek letters, and
  // decimal integers. Throws kSchemaError on anything else.
  static Label Parse(std::string_view text);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  std::string Name() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& l, const Label& m) {
    return l.SortKey() <=> m.SortKey();
  }

 private:
  Label(Kind kind, int index) : kind_(kind), index_(index) {}
  static Label Indexed(Kind kind, int i);
  std::tuple<int, int, int> SortKey() const;

  Kind kind_;
  int index_;
};

std::ostream& operator<<(std::ostream& os, const Label& label);

// Ordered, labeled vectors in Q^3. Labels are pairwise distinct; zero vectors
// are allowed and become loops.
class LabeledArrangement {
 public:
  using Element = std::pair<Label, Vector3>;

  LabeledArrangement() = default;
  // Throws kDuplicateLabel.
  explicit LabeledArrangement(std::vector<Element> elements);
  // Embeds each point at height 1.
  static LabeledArrangement FromAffine(
      const std::vector<std::pair<Label, PlanePoint>>& points);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<Label> labels() const;
  // Throws kIndexOutOfRange for an unknown label.
  const Vector3& at(const Label& label) const;
  bool contains(const Label& label) const;

  // Same elements, reordered into global label order.
  LabeledArrangement Sorted() const;
  // Rank of the vectors (0..3).
  int Rank() const;

  friend bool operator==(const LabeledArrangement&,
                         const LabeledArrangement&) = default;

 private:
  std::vector<Element> elements_;
};

// A function from a ground set to {+, -, 0}, stored as one character per
// element in ground-set order.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::string signs);
  static SignVector Zero(std::size_t size) {
    return SignVector(std::string(size, '0'));
  }

  std::size_t size() const { return signs_.size(); }
  Sign at(std::size_t i) const;
  void set(std::size_t i, Sign s) { signs_[i] = SignChar(s); }
  const std::string& str() const { return signs_; }

  bool IsZero() const;
  SignVector operator-() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector& x, const SignVector& y) {
    return x.signs_ <=> y.signs_;
  }

 private:
  std::string signs_;
};

// X o Y: X's sign where non-zero, else Y's. Throws kDomainMismatch.
SignVector Compose(const SignVector& x, const SignVector& y);

// Signs of all sorted triples i < j < k of an n-element ground set, stored
// in lexicographic triple order.
class Chirotope {
 public:
  Chirotope() = default;
  explicit Chirotope(std::size_t n) : n_(n), signs_(TripleCount(n), '0') {}

  std::size_t ground_size() const { return n_; }
  // Any three distinct indices; sign follows the permutation parity.
  Sign at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, Sign s);
  bool IsZero() const;
  Chirotope Negated() const;
  const std::string& str() const { return signs_; }

  static std::size_t TripleCount(std::size_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  }

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  std::size_t Offset(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t n_ = 0;
  std::string signs_;
};

Chirotope ChirotopeOf(const LabeledArrangement& arrangement);

// Cocircuits of the arrangement; the result is indexed by `arrangement`'s own
// element order. Throws kNotSpanning when the rank is below 3.
std::set<SignVector> CocircuitsOf(const LabeledArrangement& arrangement);
// Cocircuits of an arrangement of any rank: sign vectors of the linear
// functionals on its span that vanish on rank - 1 independent elements.
std::set<SignVector> CocircuitsOfAnyRank(const LabeledArrangement& arrangement);

class OrientedMatroid {
 public:
  // From explicit data. `ground_set` is sorted into global order and each
  // cocircuit is permuted to match. The set is closed under negation. When
  // `chirotope` is absent it is reconstructed from the cocircuits up to a
  // global sign. Throws kDuplicateLabel / kDomainMismatch.
  OrientedMatroid(std::vector<Label> ground_set,
                  std::vector<SignVector> cocircuits,
                  std::optional<Chirotope> chirotope = std::nullopt);

  const std::vector<Label>& ground_set() const { return ground_set_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }
  const Chirotope& chirotope() const { return chirotope_; }
  const std::vector<Label>& loops() const { return loops_; }
  // 3 when the chirotope is non-zero; otherwise the rank read off the
  // cocircuits (0 when there are none).
  int rank() const { return rank_; }

  // Index of `label` in ground_set(). Throws kIndexOutOfRange.
  std::size_t IndexOf(const Label& label) const;

 private:
  std::vector<Label> ground_set_;
  std::vector<SignVector> cocircuits_;
  Chirotope chirotope_;
  std::vector<Label> loops_;
  int rank_ = 0;
};

enum class RankPolicy { kRequireSpanning, kAllowLowerRank };

// m: arrangement -> oriented matroid. Throws kNotSpanning for rank < 3
// unless the policy allows it; a lower-rank oriented matroid has an all-zero
// chirotope.
OrientedMatroid OrientedMatroidOf(
    const LabeledArrangement& arrangement,
    RankPolicy policy = RankPolicy::kRequireSpanning);

// Chirotope, up to one global sign, of the oriented matroid with these
// cocircuits (indexed by ground set position). Zero when rank < 3.
Chirotope ChirotopeFromCocircuits(std::size_t n,
                                  const std::vector<SignVector>& cocircuits);

// Composition closure of the cocircuits plus the zero vector, sorted.
std::vector<SignVector> CovectorsOf(const OrientedMatroid& om);

// Throws kGroundSetMismatch unless both ground sets agree.
bool OmEqual(const OrientedMatroid& m1, const OrientedMatroid& m2);
// Every covector of `target` is a covector of `source`.
bool StrongMap(const OrientedMatroid& source, const OrientedMatroid& target);
// Exists eps in {+1, -1} with chi_t(b) in {0, eps * chi_s(b)} for every
// sorted triple b.
bool WeakMap(const OrientedMatroid& source, const OrientedMatroid& target);

// M / e: covectors of M vanishing at `label`. The label becomes a loop.
OrientedMatroid Contract(const OrientedMatroid& om, const Label& label);
// Restriction of M to `labels` (deletion of everything else).
OrientedMatroid Restrict(const OrientedMatroid& om,
                         const std::vector<Label>& labels);
// The oriented matroid on the same ground set in which every element is a
// loop; its only covector is zero.
OrientedMatroid AllLoops(const std::vector<Label>& ground_set);

// Rank-3 truncated matroid: the independent sets of size <= 3.
class Matroid {
 public:
  using IndexSet = std::vector<std::size_t>;

  Matroid(std::vector<Label> ground_set, std::set<IndexSet> independent);

  const std::vector<Label>& ground_set() const { return ground_set_; }
  const std::set<IndexSet>& independent_sets() const { return independent_; }
  bool IsIndependent(IndexSet s) const;
  int Rank(const IndexSet& s) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  std::vector<Label> ground_set_;
  std::set<IndexSet> independent_;
};

Matroid UnderlyingMatroid(const OrientedMatroid& om);

}  // namespace omstrata

#endif  // OMSTRATA_ORIENTED_MATROID_H_
