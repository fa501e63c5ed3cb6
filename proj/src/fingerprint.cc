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

#include "omstrata/fingerprint.h"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace omstrata {

std::string Sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string CanonicalJson(const OrientedMatroid& om) {
  nlohmann::ordered_json doc;
  doc["cocircuits"] = nlohmann::ordered_json::array();
  for (const auto& c : om.cocircuits()) doc["cocircuits"].push_back(c.str());
  doc["ground_set"] = nlohmann::ordered_json::array();
  for (const auto& l : om.ground_set()) doc["ground_set"].push_back(l.Name());
  return doc.dump();
}

std::string Fingerprint(const OrientedMatroid& om) {
  return Sha256Hex(CanonicalJson(om));
}

}  // namespace omstrata
