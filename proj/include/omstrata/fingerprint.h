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

#ifndef OMSTRATA_FINGERPRINT_H_
#define OMSTRATA_FINGERPRINT_H_

#include <string>
#include <string_view>

#include "omstrata/oriented_matroid.h"

namespace omstrata {

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view bytes);

// {"cocircuits":[...],"ground_set":[...]} with no whitespace, keys in this
// order, cocircuits sorted bytewise.
std::string CanonicalJson(const OrientedMatroid& om);

// Sha256Hex(CanonicalJson(om)).
std::string Fingerprint(const OrientedMatroid& om);

}  // namespace omstrata

#endif  // OMSTRATA_FINGERPRINT_H_
