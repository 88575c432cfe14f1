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

#include "gammahom/space_spec.hpp"

#include <cctype>
#include <string>

#include "gammahom/errors.hpp"

namespace gammahom {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  GammaPtr parse() {
    GammaPtr x = expression();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  long number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  bool digit_next() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  GammaPtr expression() {
    if (accept("sphere")) return sphere_like();
    if (accept("point")) return point_gamma();
    if (accept("t:s0")) return sphere_like();
    if (accept("t:circle")) return t_of(circle_ss());
    if (accept("t:s2")) return t_of(smash_ss(circle_ss(), circle_ss()));
    if (accept("ab:")) {
      std::vector<std::uint32_t> factors{static_cast<std::uint32_t>(number())};
      while (pos_ + 1 < text_.size() && text_[pos_] == ',' &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        factors.push_back(static_cast<std::uint32_t>(number()));
      }
      try {
        return discrete_abelian(std::move(factors));
      } catch (const ValidationError& e) {
        fail(e.what());
      }
    }
    if (accept("mu(")) {
      const long n = number();
      expect(")*");
      return mu_pullback(static_cast<int>(n), expression());
    }
    if (accept("wedge(") || accept("smash(")) {
      const bool is_wedge = text_[pos_ - 6] == 'w';
      GammaPtr x = expression();
      expect(",");
      GammaPtr y = expression();
      expect(")");
      if (x->directions() != y->directions()) fail("arguments have different directions");
      return is_wedge ? wedge_gamma(x, y) : smash_gamma(x, y);
    }
    if (accept("B(")) {
      GammaPtr x = expression();
      expect(")");
      return bar(x);
    }
    if (accept("sigma(")) {
      GammaPtr x = expression();
      expect(")");
      return sigma_gamma(x);
    }
    fail("unknown space");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

GammaPtr parse_space(std::string_view text) { return Parser(text).parse(); }

}  // namespace gammahom
