// Copyright 2026 The gammahom Authors
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

#include "gammahom/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gammahom/errors.hpp"

namespace gammahom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("F_p needs a prime p, got " + std::to_string(p));
  // Products of two residues must fit in 64 bits.
  if (p >= (1u << 31)) throw ValidationError("prime too large for F_p arithmetic");
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(std::string_view tag) {
  std::string t(tag);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "z" || t == "zz" || t == "integers") return integers();
  if (t == "q" || t == "qq" || t == "rationals") return rationals();
  if (t.size() >= 2 && t[0] == 'f') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), p);
    if (ec == std::errc() && ptr == t.data() + t.size()) return prime_field(p);
  }
  throw ValidationError("unknown ring '" + std::string(tag) + "' (expected z, q or fP)");
}

std::string Ring::tag() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "f" + std::to_string(p_);
  }
  return "?";
}

std::string Ring::symbol() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

}  // namespace gammahom
