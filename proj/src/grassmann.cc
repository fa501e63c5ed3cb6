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

#include "omstrata/grassmann.h"

#include <algorithm>
#include <set>
#include <string>

#include "omstrata/error.h"

namespace omstrata {
namespace {

Rational InnerProduct(const RationalVector& u, const RationalVector& v) {
  Rational sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

// Solves G c = rhs for the symmetric positive definite 3x3 Gram matrix by
// the adjugate.
Vector3 SolveGram(const std::array<std::array<Rational, 3>, 3>& g,
                  const Vector3& rhs) {
  const Vector3 r0 = {g[0][0], g[0][1], g[0][2]};
  const Vector3 r1 = {g[1][0], g[1][1], g[1][2]};
  const Vector3 r2 = {g[2][0], g[2][1], g[2][2]};
  const Rational det = Det3(r0, r1, r2);
  // Cramer's rule: replace column m of G by rhs.
  auto with_column = [&](int m) {
    std::array<Vector3, 3> rows = {r0, r1, r2};
    const Rational vals[3] = {rhs.x, rhs.y, rhs.z};
    for (int r = 0; r < 3; ++r) {
      Rational* entry = m == 0 ? &rows[r].x : m == 1 ? &rows[r].y : &rows[r].z;
      *entry = vals[r];
    }
    return Rational(Det3(rows[0], rows[1], rows[2]) / det);
  };
  return {with_column(0), with_column(1), with_column(2)};
}

std::array<std::array<Rational, 3>, 3> Gram(const Subspace& v) {
  std::array<std::array<Rational, 3>, 3> g;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      g[r][c] = InnerProduct(v.basis()[r], v.basis()[c]);
    }
  }
  return g;
}

// The covector recipe i -> sign<v, f_i> over explicit v in V. For a pair of
// independent paired columns w_i = B f_i, w_j = B f_j the functional
// lambda = w_i x w_j gives v = lambda^T B, which is orthogonal to f_i and f_j.
OrientedMatroid FromFunctionals(const std::vector<Label>& labels,
                                const std::vector<RationalVector>& vectors,
                                const Subspace& space) {
  const std::size_t m = vectors.size();
  std::vector<Vector3> paired;
  paired.reserve(m);
  for (const auto& f : vectors) paired.push_back(space.Pair(f));

  std::set<SignVector> cocircuits;
  Chirotope chi(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector3 lambda = Cross(paired[i], paired[j]);
      if (lambda.IsZero()) continue;
      RationalVector v(space.ambient(), Rational(0));
      for (int r = 0; r < 3; ++r) {
        const Rational& coef = r == 0 ? lambda.x : r == 1 ? lambda.y : lambda.z;
        for (int c = 0; c < space.ambient(); ++c) {
          v[c] += coef * space.basis()[r][c];
        }
      }
      SignVector x = SignVector::Zero(m);
      for (std::size_t k = 0; k < m; ++k) {
        const Sign s = SignOf(InnerProduct(v, vectors[k]));
        x.set(k, s);
        if (k > j) chi.set(i, j, k, s);
      }
      cocircuits.insert(-x);
      cocircuits.insert(std::move(x));
    }
  }
  return OrientedMatroid(
      labels, std::vector<SignVector>(cocircuits.begin(), cocircuits.end()),
      std::move(chi));
}

}  // namespace

int RankOf(std::vector<RationalVector> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Subspace::Subspace(int ambient, std::array<RationalVector, 3> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& row : basis_) {
    if (static_cast<int>(row.size()) != ambient_) {
      throw Error(ErrorCode::kDomainMismatch,
                  "basis row of length " + std::to_string(row.size()) +
                      " in ambient dimension " + std::to_string(ambient_));
    }
  }
  if (RankOf({basis_.begin(), basis_.end()}) != 3) {
    throw Error(ErrorCode::kRankDeficient, "basis rows are dependent");
  }
}

Vector3 Subspace::Column(int i) const {
  return {basis_[0][i], basis_[1][i], basis_[2][i]};
}

Vector3 Subspace::Pair(const RationalVector& v) const {
  return {InnerProduct(basis_[0], v), InnerProduct(basis_[1], v),
          InnerProduct(basis_[2], v)};
}

Subspace Subspace::ChangeBasis(
    const std::array<std::array<Rational, 3>, 3>& change) const {
  std::array<RationalVector, 3> rows;
  for (int r = 0; r < 3; ++r) {
    rows[r].assign(ambient_, Rational(0));
    for (int s = 0; s < 3; ++s) {
      for (int c = 0; c < ambient_; ++c) {
        rows[r][c] += change[r][s] * basis_[s][c];
      }
    }
  }
  return Subspace(ambient_, std::move(rows));
}

VectorFamily::VectorFamily(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::set<Label> seen;
  dimension_ =
      elements_.empty() ? 0 : static_cast<int>(elements_.front().second.size());
  for (const auto& [label, v] : elements_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label " + label.Name());
    }
    if (static_cast<int>(v.size()) != dimension_) {
      throw Error(ErrorCode::kDomainMismatch, "ragged vector family");
    }
  }
}

VectorFamily VectorFamily::StandardBasis(int n) {
  std::vector<Element> elements;
  for (int i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    elements.emplace_back(Label::Index(i + 1), std::move(e));
  }
  return VectorFamily(std::move(elements));
}

bool VectorFamily::Spans() const {
  std::vector<RationalVector> rows;
  for (const auto& e : elements_) rows.push_back(e.second);
  return RankOf(std::move(rows)) == dimension_;
}

LabeledArrangement ProjectionArrangement(const Subspace& v) {
  return ProjectionArrangement(VectorFamily::StandardBasis(v.ambient()), v);
}

LabeledArrangement ProjectionArrangement(const VectorFamily& family,
                                         const Subspace& v) {
  if (family.dimension() != v.ambient() || !family.Spans()) {
    throw Error(ErrorCode::kNotSpanning,
                "vector family does not span the ambient space");
  }
  const auto g = Gram(v);
  std::vector<LabeledArrangement::Element> elements;
  for (const auto& [label, f] : family.elements()) {
    elements.emplace_back(label, SolveGram(g, v.Pair(f)));
  }
  return LabeledArrangement(std::move(elements));
}

OrientedMatroid MuOf(const Subspace& v) {
  return MuMOf(VectorFamily::StandardBasis(v.ambient()), v);
}

OrientedMatroid MuMOf(const VectorFamily& family, const Subspace& v) {
  if (family.dimension() != v.ambient() || !family.Spans()) {
    throw Error(ErrorCode::kNotSpanning,
                "vector family does not span the ambient space");
  }
  std::vector<Label> labels;
  std::vector<RationalVector> vectors;
  for (const auto& [label, f] : family.elements()) {
    labels.push_back(label);
    vectors.push_back(f);
  }
  return FromFunctionals(labels, vectors, v);
}

bool SameStratum(const Subspace& v, const Subspace& w, StratumLevel level) {
  const OrientedMatroid mv = MuOf(v);
  const OrientedMatroid mw = MuOf(w);
  if (level == StratumLevel::kOrientedMatroid) return OmEqual(mv, mw);
  if (mv.ground_set() != mw.ground_set()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subspaces live in different ambient spaces");
  }
  return UnderlyingMatroid(mv) == UnderlyingMatroid(mw);
}

}  // namespace omstrata
