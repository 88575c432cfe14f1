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

#ifndef GAMMAHOM_RING_HPP
#define GAMMAHOM_RING_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace gammahom {

/// Coefficient ring: the integers, the rationals, or a prime field F_p.
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring prime_field(std::uint32_t p);

  /// Parses "z", "q", "f2", "f3", "f5", ... (case-insensitive).
  static Ring parse(std::string_view tag);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  /// "z", "q" or "fP".
  std::string tag() const;
  /// "Z", "Q" or "F_p".
  std::string symbol() const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gammahom

#endif  // GAMMAHOM_RING_HPP
