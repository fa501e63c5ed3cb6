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

// Three-dimensional subspaces of Q^n and their oriented matroid strata.

#ifndef OMSTRATA_GRASSMANN_H_
#define OMSTRATA_GRASSMANN_H_

#include <array>
#include <utility>
#include <vector>

#include "omstrata/geometry.h"
#include "omstrata/oriented_matroid.h"

namespace omstrata {

using RationalVector = std::vector<Rational>;

// Rank of the row set, by exact elimination.
int RankOf(std::vector<RationalVector> rows);

// A 3-plane V in Q^n given by three basis rows.
class Subspace {
 public:
  // Throws kDomainMismatch when rows disagree with `ambient`, and
  // kRankDeficient when the rows are dependent.
  Subspace(int ambient, std::array<RationalVector, 3> basis);

  int ambient() const { return ambient_; }
  const std::array<RationalVector, 3>& basis() const { return basis_; }
  // Column i of the basis matrix: the coefficients <row_r, e_i>.
  Vector3 Column(int i) const;
  // The three numbers <row_r, v> for v in Q^n.
  Vector3 Pair(const RationalVector& v) const;

  // Same plane, basis rows replaced by change * basis. Throws kRankDeficient
  // when `change` is singular.
  Subspace ChangeBasis(
      const std::array<std::array<Rational, 3>, 3>& change) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_;
  std::array<RationalVector, 3> basis_;
};

// Labeled vectors in Q^n.
class VectorFamily {
 public:
  using Element = std::pair<Label, RationalVector>;

  // Throws kDuplicateLabel or kDomainMismatch (ragged vectors).
  explicit VectorFamily(std::vector<Element> elements);
  // e_1, ..., e_n labeled 1..n.
  static VectorFamily StandardBasis(int n);

  const std::vector<Element>& elements() const { return elements_; }
  int dimension() const { return dimension_; }
  bool Spans() const;

  friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

 private:
  std::vector<Element> elements_;
  int dimension_ = 0;
};

// phi(V): coordinates of the orthogonal projections of e_1..e_n onto V in the
// stored basis, from the Gram normal equations G c_i = B e_i. Labels 1..n.
LabeledArrangement ProjectionArrangement(const Subspace& v);
// Same for the family: projections of each f_i. Throws kNotSpanning.
LabeledArrangement ProjectionArrangement(const VectorFamily& family,
                                         const Subspace& v);

// mu(V): the oriented matroid on 1..n whose covectors are i -> sign<v, e_i>
// for v in V. Cocircuits are read off explicit vectors v in V orthogonal to
// two independent coordinate functionals.
OrientedMatroid MuOf(const Subspace& v);
// mu_M(V) for the family F: covectors i -> sign<v, f_i>. Throws kNotSpanning
// unless F spans Q^n.
OrientedMatroid MuMOf(const VectorFamily& family, const Subspace& v);

enum class StratumLevel { kMatroid, kOrientedMatroid };

// Throws kGroundSetMismatch when the ambient dimensions differ.
bool SameStratum(const Subspace& v, const Subspace& w, StratumLevel level);

}  // namespace omstrata

#endif  // OMSTRATA_GRASSMANN_H_
