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

#include "omstrata/oriented_matroid.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <map>
#include <unordered_set>

#include "omstrata/error.h"

namespace omstrata {
namespace {

struct IntVector3 {
  Integer x, y, z;
  bool IsZero() const { return x == 0 && y == 0 && z == 0; }
};

// Positive multiple of v with integer coordinates; signs of every determinant
// and inner product it enters are unchanged.
IntVector3 ClearDenominators(const Vector3& v) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.z.get_den_mpz_t());
  return {v.x.get_num() * (l / v.x.get_den()),
          v.y.get_num() * (l / v.y.get_den()),
          v.z.get_num() * (l / v.z.get_den())};
}

IntVector3 Cross(const IntVector3& a, const IntVector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Sign SignDot(const IntVector3& a, const IntVector3& b) {
  return SignOf(Integer(a.x * b.x + a.y * b.y + a.z * b.z));
}

// Rank 1 and 2: on a rank-2 span with normal N, the functional v_i x N
// vanishes on v_i only (and its parallels); on a rank-1 span, v_i itself.
std::set<SignVector> LowRankCocircuits(const std::vector<IntVector3>& vs,
                                       int rank) {
  std::set<SignVector> out;
  if (rank == 0) return out;
  std::optional<IntVector3> normal;
  if (rank == 2) {
    for (std::size_t i = 0; i < vs.size() && !normal; ++i) {
      for (std::size_t j = i + 1; j < vs.size() && !normal; ++j) {
        IntVector3 n = Cross(vs[i], vs[j]);
        if (!n.IsZero()) normal = std::move(n);
      }
    }
  }
  for (const auto& v : vs) {
    if (v.IsZero()) continue;
    const IntVector3 functional = rank == 2 ? Cross(v, *normal) : v;
    SignVector x = SignVector::Zero(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      x.set(k, SignDot(vs[k], functional));
    }
    out.insert(-x);
    out.insert(std::move(x));
  }
  return out;
}

struct RawOm {
  std::set<SignVector> cocircuits;
  Chirotope chirotope;
};

// One pass over all pairs: the normal of (v_i, v_j) gives both the cocircuit
// of that pair and chi(i, j, k) for k > j.
RawOm ComputeRaw(const LabeledArrangement& arrangement, RankPolicy policy) {
  const int rank = arrangement.Rank();
  if (rank < 3 && policy == RankPolicy::kRequireSpanning) {
    throw Error(ErrorCode::kNotSpanning,
                "arrangement of rank " + std::to_string(rank));
  }
  const std::size_t n = arrangement.size();
  std::vector<IntVector3> vs;
  vs.reserve(n);
  for (const auto& [label, v] : arrangement.elements()) {
    vs.push_back(ClearDenominators(v));
  }
  RawOm raw{{}, Chirotope(n)};
  if (rank < 3) {
    raw.cocircuits = LowRankCocircuits(vs, rank);
    return raw;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntVector3 normal = Cross(vs[i], vs[j]);
      if (normal.IsZero()) continue;
      SignVector cocircuit = SignVector::Zero(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Sign s = SignDot(vs[k], normal);
        cocircuit.set(k, s);
        if (k > j) raw.chirotope.set(i, j, k, s);
      }
      raw.cocircuits.insert(-cocircuit);
      raw.cocircuits.insert(std::move(cocircuit));
    }
  }
  return raw;
}

// Non-zero vectors of `vectors` whose support is minimal among them.
std::vector<SignVector> MinimalSupports(const std::vector<SignVector>& vectors) {
  std::vector<SignVector> nonzero;
  for (const auto& x : vectors) {
    if (!x.IsZero()) nonzero.push_back(x);
  }
  auto contained = [](const SignVector& y, const SignVector& x) {
    // supp(y) strictly inside supp(x)
    bool strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool in_y = y.at(i) != Sign::kZero;
      const bool in_x = x.at(i) != Sign::kZero;
      if (in_y && !in_x) return false;
      if (in_x && !in_y) strict = true;
    }
    return strict;
  };
  std::vector<SignVector> minimal;
  for (const auto& x : nonzero) {
    const bool is_minimal = std::none_of(
        nonzero.begin(), nonzero.end(),
        [&](const SignVector& y) { return contained(y, x); });
    if (is_minimal) minimal.push_back(x);
  }
  return minimal;
}

void RequireSameGroundSet(const OrientedMatroid& m1,
                          const OrientedMatroid& m2) {
  if (m1.ground_set() != m2.ground_set()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "oriented matroids live on different ground sets");
  }
}

// Elements i, j are parallel (or both loops) when every cocircuit vanishes
// on both or on neither.
bool SameZeroPattern(const std::vector<SignVector>& cocircuits, std::size_t i,
                     std::size_t j) {
  return std::all_of(cocircuits.begin(), cocircuits.end(),
                     [&](const SignVector& c) {
                       return (c.at(i) == Sign::kZero) ==
                              (c.at(j) == Sign::kZero);
                     });
}

int RankFromCocircuits(std::size_t n,
                       const std::vector<SignVector>& cocircuits) {
  if (cocircuits.empty()) return 0;
  // A cocircuit's zero set is a hyperplane; count its parallel classes of
  // non-loops (at most two are needed to decide rank <= 3).
  const SignVector& c = cocircuits.front();
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.at(i) != Sign::kZero) continue;
    const bool loop = std::all_of(
        cocircuits.begin(), cocircuits.end(),
        [&](const SignVector& x) { return x.at(i) == Sign::kZero; });
    if (loop) continue;
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
      return SameZeroPattern(cocircuits, r, i);
    });
    if (!seen) reps.push_back(i);
    if (reps.size() >= 2) return 3;
  }
  return static_cast<int>(reps.size()) + 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Label

Label Label::Indexed(Kind kind, int i) {
  if (i < 0 || (kind != Kind::kIndex && i == 0)) {
    throw Error(ErrorCode::kSchemaError,
                "label index out of range: " + std::to_string(i));
  }
  return Label(kind, i);
}

Label Label::Parse(std::string_view text) {
  static const std::array<std::pair<std::string_view, Kind>, 13> kNames = {{
      {"alpha", Kind::kAlpha}, {"α", Kind::kAlpha},
      {"beta", Kind::kBeta},   {"β", Kind::kBeta},
      {"gamma", Kind::kGamma}, {"γ", Kind::kGamma},
      {"omega", Kind::kOmega}, {"ω", Kind::kOmega},
      {"nu", Kind::kNu},       {"ν", Kind::kNu},
      {"a", Kind::kA},         {"delta", Kind::kDelta},
      {"δ", Kind::kDelta},
  }};
  for (const auto& [name, kind] : kNames) {
    if (text == name) return Label(kind, 0);
  }
  auto parse_index = [&](std::string_view digits) -> std::optional<int> {
    int value = 0;
    if (digits.empty() || digits.size() > 9) return std::nullopt;
    if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    return value;
  };
  if (!text.empty()) {
    std::optional<Kind> kind;
    switch (text.front()) {
      case 'b': kind = Kind::kB; break;
      case 'c': kind = Kind::kC; break;
      case 'd': kind = Kind::kD; break;
      default: break;
    }
    if (kind) {
      if (auto i = parse_index(text.substr(1)); i && *i > 0) {
        return Label(*kind, *i);
      }
    } else if (auto i = parse_index(text)) {
      return Label(Kind::kIndex, *i);
    }
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown label \"" + std::string(text) + "\"");
}

std::string Label::Name() const {
  switch (kind_) {
    case Kind::kAlpha: return "alpha";
    case Kind::kBeta: return "beta";
    case Kind::kGamma: return "gamma";
    case Kind::kOmega: return "omega";
    case Kind::kNu: return "nu";
    case Kind::kA: return "a";
    case Kind::kDelta: return "delta";
    case Kind::kB: return "b" + std::to_string(index_);
    case Kind::kC: return "c" + std::to_string(index_);
    case Kind::kD: return "d" + std::to_string(index_);
    case Kind::kIndex: return std::to_string(index_);
  }
  return "?";
}

std::tuple<int, int, int> Label::SortKey() const {
  const int kind = static_cast<int>(kind_);
  switch (kind_) {
    case Kind::kB:
    case Kind::kC:
    case Kind::kD:
      return {1, index_, kind};
    case Kind::kIndex:
      return {2, index_, 0};
    default:
      return {0, kind, 0};
  }
}

std::ostream& operator<<(std::ostream& os, const Label& label) {
  return os << label.Name();
}

// ---------------------------------------------------------------------------
// LabeledArrangement

LabeledArrangement::LabeledArrangement(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::set<Label> seen;
  for (const auto& [label, v] : elements_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label " + label.Name());
    }
  }
}

LabeledArrangement LabeledArrangement::FromAffine(
    const std::vector<std::pair<Label, PlanePoint>>& points) {
  std::vector<Element> elements;
  elements.reserve(points.size());
  for (const auto& [label, p] : points) {
    elements.emplace_back(label, EmbedAffine(p));
  }
  return LabeledArrangement(std::move(elements));
}

std::vector<Label> LabeledArrangement::labels() const {
  std::vector<Label> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.first);
  return out;
}

const Vector3& LabeledArrangement::at(const Label& label) const {
  for (const auto& e : elements_) {
    if (e.first == label) return e.second;
  }
  throw Error(ErrorCode::kIndexOutOfRange, "no element " + label.Name());
}

bool LabeledArrangement::contains(const Label& label) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const Element& e) { return e.first == label; });
}

LabeledArrangement LabeledArrangement::Sorted() const {
  std::vector<Element> sorted = elements_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Element& l, const Element& m) { return l.first < m.first; });
  return LabeledArrangement(std::move(sorted));
}

int LabeledArrangement::Rank() const {
  std::vector<IntVector3> basis;
  for (const auto& [label, v] : elements_) {
    const IntVector3 w = ClearDenominators(v);
    if (w.IsZero()) continue;
    if (basis.empty()) {
      basis.push_back(w);
    } else if (basis.size() == 1) {
      if (!Cross(basis[0], w).IsZero()) basis.push_back(w);
    } else if (SignDot(w, Cross(basis[0], basis[1])) != Sign::kZero) {
      return 3;
    }
  }
  return static_cast<int>(basis.size());
}

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(std::string signs) : signs_(std::move(signs)) {
  for (char ch : signs_) {
    if (ch != '+' && ch != '-' && ch != '0') {
      throw Error(ErrorCode::kSchemaError,
                  "sign vector \"" + signs_ + "\" has a character outside +-0");
    }
  }
}

Sign SignVector::at(std::size_t i) const {
  switch (signs_[i]) {
    case '+': return Sign::kPositive;
    case '-': return Sign::kNegative;
    default: return Sign::kZero;
  }
}

bool SignVector::IsZero() const {
  return signs_.find_first_not_of('0') == std::string::npos;
}

SignVector SignVector::operator-() const {
  SignVector out = *this;
  for (char& ch : out.signs_) {
    if (ch == '+') {
      ch = '-';
    } else if (ch == '-') {
      ch = '+';
    }
  }
  return out;
}

SignVector Compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDomainMismatch, "composing sign vectors of size " +
                                                std::to_string(x.size()) +
                                                " and " +
                                                std::to_string(y.size()));
  }
  std::string out = x.str();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '0') out[i] = y.str()[i];
  }
  return SignVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Chirotope

std::size_t Chirotope::Offset(std::size_t i, std::size_t j,
                              std::size_t k) const {
  // Rank of (i, j, k), i < j < k, in lexicographic order of n-choose-3.
  auto choose2 = [](std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; };
  auto choose3 = [](std::size_t m) { return TripleCount(m); };
  const std::size_t n = n_;
  const std::size_t before_i = choose3(n) - choose3(n - i);
  const std::size_t m = n - i - 1;  // elements after i
  const std::size_t jj = j - i - 1;
  const std::size_t before_j = choose2(m) - choose2(m - jj);
  return before_i + before_j + (k - j - 1);
}

Sign Chirotope::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) return Sign::kZero;
  std::array<std::size_t, 3> t = {i, j, k};
  int parity = 1;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b + 1 < 3 - a; ++b) {
      if (t[b] > t[b + 1]) {
        std::swap(t[b], t[b + 1]);
        parity = -parity;
      }
    }
  }
  Sign s;
  switch (signs_[Offset(t[0], t[1], t[2])]) {
    case '+': s = Sign::kPositive; break;
    case '-': s = Sign::kNegative; break;
    default: s = Sign::kZero; break;
  }
  return parity > 0 ? s : Negate(s);
}

void Chirotope::set(std::size_t i, std::size_t j, std::size_t k, Sign s) {
  signs_[Offset(i, j, k)] = SignChar(s);
}

bool Chirotope::IsZero() const {
  return signs_.find_first_not_of('0') == std::string::npos;
}

Chirotope Chirotope::Negated() const {
  Chirotope out = *this;
  for (char& ch : out.signs_) {
    if (ch == '+') {
      ch = '-';
    } else if (ch == '-') {
      ch = '+';
    }
  }
  return out;
}

Chirotope ChirotopeOf(const LabeledArrangement& arrangement) {
  const std::size_t n = arrangement.size();
  std::vector<IntVector3> vs;
  for (const auto& e : arrangement.elements()) {
    vs.push_back(ClearDenominators(e.second));
  }
  Chirotope chi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IntVector3 normal = Cross(vs[i], vs[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        chi.set(i, j, k, SignDot(vs[k], normal));
      }
    }
  }
  return chi;
}

std::set<SignVector> CocircuitsOf(const LabeledArrangement& arrangement) {
  return ComputeRaw(arrangement, RankPolicy::kRequireSpanning).cocircuits;
}

std::set<SignVector> CocircuitsOfAnyRank(
    const LabeledArrangement& arrangement) {
  return ComputeRaw(arrangement, RankPolicy::kAllowLowerRank).cocircuits;
}

Chirotope ChirotopeFromCocircuits(std::size_t n,
                                  const std::vector<SignVector>& cocircuits) {
  Chirotope chi(n);
  if (RankFromCocircuits(n, cocircuits) < 3) return chi;

  // For an independent pair {i, j} the cocircuits vanishing on both are a
  // single +/- pair; pick the one whose first non-zero entry is '+'. Then
  // chi(i, j, k) = s_ij * C_ij(k) for an unknown pair sign s_ij.
  std::map<std::pair<std::size_t, std::size_t>, const SignVector*> pair_cocircuit;
  for (const auto& c : cocircuits) {
    const std::size_t first = c.str().find_first_not_of('0');
    if (first == std::string::npos || c.at(first) != Sign::kPositive) continue;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < n; ++i) {
      if (c.at(i) == Sign::kZero) zeros.push_back(i);
    }
    for (std::size_t a = 0; a < zeros.size(); ++a) {
      for (std::size_t b = a + 1; b < zeros.size(); ++b) {
        const auto key = std::make_pair(zeros[a], zeros[b]);
        auto [it, inserted] = pair_cocircuit.emplace(key, &c);
        // Two distinct hyperplanes through i and j: the pair is dependent.
        if (!inserted && it->second != nullptr && *it->second != c) {
          it->second = nullptr;
        }
      }
    }
  }
  std::erase_if(pair_cocircuit, [](const auto& kv) {
    return kv.second == nullptr;
  });
  if (pair_cocircuit.empty()) return chi;

  // Propagate the pair signs across bases: for a basis i < j < k,
  //   chi(i,j,k) = s_ij C_ij(k) = -s_ik C_ik(j) = s_jk C_jk(i).
  std::map<std::pair<std::size_t, std::size_t>, Sign> pair_sign;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  pair_sign[pair_cocircuit.begin()->first] = Sign::kPositive;
  queue.push_back(pair_cocircuit.begin()->first);
  auto visit = [&](std::size_t p, std::size_t q, Sign s) {
    const auto key = std::make_pair(std::min(p, q), std::max(p, q));
    if (!pair_cocircuit.contains(key) || pair_sign.contains(key)) return;
    pair_sign[key] = s;
    queue.push_back(key);
  };
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    const SignVector& cij = *pair_cocircuit.at({i, j});
    const Sign sij = pair_sign.at({i, j});
    for (std::size_t k = 0; k < n; ++k) {
      if (cij.at(k) == Sign::kZero) continue;
      // chi(i, j, k) with i < j, k anywhere.
      const Sign chi_ijk = sij * cij.at(k);
      // chi(i, k, j) = -chi(i, j, k) = s_ik C_ik(j)  (order pair as sorted)
      // chi(j, k, i) =  chi(i, j, k) = s_jk C_jk(i)
      for (const auto& [p, q, other, target] :
           {std::tuple{i, k, j, Negate(chi_ijk)},
            std::tuple{j, k, i, chi_ijk}}) {
        const auto key = std::make_pair(std::min(p, q), std::max(p, q));
        auto it = pair_cocircuit.find(key);
        if (it == pair_cocircuit.end()) continue;
        // chi(p, q, other) = s_pq C_pq(other) when p < q, and
        // chi(q, p, other) = -chi(p, q, other) otherwise.
        const Sign c = it->second->at(other);
        if (c == Sign::kZero) continue;
        const Sign oriented = p < q ? target : Negate(target);
        visit(p, q, oriented * c);
      }
    }
  }

  for (const auto& [key, c] : pair_cocircuit) {
    const auto found = pair_sign.find(key);
    if (found == pair_sign.end()) continue;
    const auto [i, j] = key;
    for (std::size_t k = j + 1; k < n; ++k) {
      chi.set(i, j, k, found->second * c->at(k));
    }
  }
  // Normalize: first non-zero sorted triple positive.
  const std::size_t first = chi.str().find_first_not_of('0');
  if (first != std::string::npos && chi.str()[first] == '-') {
    return chi.Negated();
  }
  return chi;
}

// ---------------------------------------------------------------------------
// OrientedMatroid

OrientedMatroid::OrientedMatroid(std::vector<Label> ground_set,
                                 std::vector<SignVector> cocircuits,
                                 std::optional<Chirotope> chirotope) {
  const std::size_t n = ground_set.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t m) {
    return ground_set[l] < ground_set[m];
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ground_set[order[i]] == ground_set[order[i + 1]]) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "label " + ground_set[order[i]].Name());
    }
  }
  ground_set_.reserve(n);
  for (std::size_t i : order) ground_set_.push_back(ground_set[i]);

  std::set<SignVector> canonical;
  for (const auto& c : cocircuits) {
    if (c.size() != n) {
      throw Error(ErrorCode::kDomainMismatch,
                  "cocircuit \"" + c.str() + "\" does not match a ground set "
                  "of size " + std::to_string(n));
    }
    if (c.IsZero()) {
      throw Error(ErrorCode::kSchemaError, "the zero vector is not a cocircuit");
    }
    std::string permuted(n, '0');
    for (std::size_t i = 0; i < n; ++i) permuted[i] = c.str()[order[i]];
    SignVector x(std::move(permuted));
    canonical.insert(-x);
    canonical.insert(std::move(x));
  }
  cocircuits_.assign(canonical.begin(), canonical.end());

  if (chirotope) {
    if (chirotope->ground_size() != n) {
      throw Error(ErrorCode::kDomainMismatch, "chirotope size mismatch");
    }
    chirotope_ = Chirotope(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          chirotope_.set(i, j, k, chirotope->at(order[i], order[j], order[k]));
        }
      }
    }
  } else {
    chirotope_ = ChirotopeFromCocircuits(n, cocircuits_);
  }
  rank_ = chirotope_.IsZero() ? RankFromCocircuits(n, cocircuits_) : 3;

  for (std::size_t i = 0; i < n; ++i) {
    const bool loop = std::all_of(
        cocircuits_.begin(), cocircuits_.end(),
        [&](const SignVector& c) { return c.at(i) == Sign::kZero; });
    if (loop) loops_.push_back(ground_set_[i]);
  }
}

std::size_t OrientedMatroid::IndexOf(const Label& label) const {
  const auto it =
      std::lower_bound(ground_set_.begin(), ground_set_.end(), label);
  if (it == ground_set_.end() || *it != label) {
    throw Error(ErrorCode::kIndexOutOfRange, "no element " + label.Name());
  }
  return static_cast<std::size_t>(it - ground_set_.begin());
}

OrientedMatroid OrientedMatroidOf(const LabeledArrangement& arrangement,
                                  RankPolicy policy) {
  const LabeledArrangement sorted = arrangement.Sorted();
  RawOm raw = ComputeRaw(sorted, policy);
  return OrientedMatroid(
      sorted.labels(),
      std::vector<SignVector>(raw.cocircuits.begin(), raw.cocircuits.end()),
      std::move(raw.chirotope));
}

std::vector<SignVector> CovectorsOf(const OrientedMatroid& om) {
  const std::size_t n = om.ground_set().size();
  std::unordered_set<std::string> seen;
  std::deque<SignVector> queue;
  auto add = [&](SignVector x) {
    if (seen.insert(x.str()).second) queue.push_back(std::move(x));
  };
  add(SignVector::Zero(n));
  for (const auto& c : om.cocircuits()) add(c);
  while (!queue.empty()) {
    const SignVector x = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : om.cocircuits()) add(Compose(x, c));
  }
  std::vector<SignVector> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

bool OmEqual(const OrientedMatroid& m1, const OrientedMatroid& m2) {
  RequireSameGroundSet(m1, m2);
  return m1.cocircuits() == m2.cocircuits();
}

bool StrongMap(const OrientedMatroid& source, const OrientedMatroid& target) {
  RequireSameGroundSet(source, target);
  const std::vector<SignVector> from = CovectorsOf(source);
  const std::vector<SignVector> to = CovectorsOf(target);
  return std::includes(from.begin(), from.end(), to.begin(), to.end());
}

bool WeakMap(const OrientedMatroid& source, const OrientedMatroid& target) {
  RequireSameGroundSet(source, target);
  const std::string& t = target.chirotope().str();
  for (const Chirotope& candidate :
       {source.chirotope(), source.chirotope().Negated()}) {
    const std::string& c = candidate.str();
    bool ok = true;
    for (std::size_t b = 0; b < t.size() && ok; ++b) {
      ok = t[b] == '0' || t[b] == c[b];
    }
    if (ok) return true;
  }
  return false;
}

OrientedMatroid Contract(const OrientedMatroid& om, const Label& label) {
  const std::size_t e = om.IndexOf(label);
  std::vector<SignVector> kept;
  for (auto& x : CovectorsOf(om)) {
    if (x.at(e) == Sign::kZero) kept.push_back(std::move(x));
  }
  return OrientedMatroid(om.ground_set(), MinimalSupports(kept));
}

OrientedMatroid Restrict(const OrientedMatroid& om,
                         const std::vector<Label>& labels) {
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(om.IndexOf(l));
  std::set<SignVector> projected;
  for (const auto& x : CovectorsOf(om)) {
    std::string s(idx.size(), '0');
    for (std::size_t i = 0; i < idx.size(); ++i) s[i] = x.str()[idx[i]];
    projected.insert(SignVector(std::move(s)));
  }
  std::optional<Chirotope> chi;
  if (om.rank() == 3) {
    Chirotope restricted(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        for (std::size_t k = j + 1; k < idx.size(); ++k) {
          restricted.set(i, j, k, om.chirotope().at(idx[i], idx[j], idx[k]));
        }
      }
    }
    if (!restricted.IsZero()) chi = std::move(restricted);
  }
  return OrientedMatroid(
      labels,
      MinimalSupports(std::vector<SignVector>(projected.begin(),
                                              projected.end())),
      std::move(chi));
}

OrientedMatroid AllLoops(const std::vector<Label>& ground_set) {
  return OrientedMatroid(ground_set, {});
}

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(std::vector<Label> ground_set, std::set<IndexSet> independent)
    : ground_set_(std::move(ground_set)), independent_(std::move(independent)) {}

bool Matroid::IsIndependent(IndexSet s) const {
  std::sort(s.begin(), s.end());
  return s.empty() || independent_.contains(s);
}

int Matroid::Rank(const IndexSet& s) const {
  int best = 0;
  const std::size_t m = s.size();
  // Subsets of size <= 3 suffice for the truncation.
  for (std::size_t i = 0; i < m; ++i) {
    if (IsIndependent({s[i]})) best = std::max(best, 1);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (IsIndependent({s[i], s[j]})) best = std::max(best, 2);
      for (std::size_t k = j + 1; k < m; ++k) {
        if (IsIndependent({s[i], s[j], s[k]})) return 3;
      }
    }
  }
  return best;
}

Matroid UnderlyingMatroid(const OrientedMatroid& om) {
  const std::size_t n = om.ground_set().size();
  const auto& cocircuits = om.cocircuits();
  std::set<Matroid::IndexSet> independent;
  std::vector<bool> loop(n);
  for (std::size_t i = 0; i < n; ++i) {
    loop[i] = std::all_of(cocircuits.begin(), cocircuits.end(),
                          [&](const SignVector& c) {
                            return c.at(i) == Sign::kZero;
                          });
    if (!loop[i] && om.rank() >= 1) independent.insert({i});
  }
  if (om.rank() >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!loop[i] && !loop[j] && !SameZeroPattern(cocircuits, i, j)) {
          independent.insert({i, j});
        }
      }
    }
  }
  if (om.rank() == 3) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          if (om.chirotope().at(i, j, k) != Sign::kZero) {
            independent.insert({i, j, k});
          }
        }
      }
    }
  }
  return Matroid(om.ground_set(), std::move(independent));
}

}  // namespace omstrata
