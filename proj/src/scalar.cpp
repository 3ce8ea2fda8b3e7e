// Copyright 2026 The zsinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zsinfo/scalar.hpp"

#include <cctype>
#include <sstream>

#include "zsinfo/errors.hpp"

namespace zsinfo {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_big_int(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ValidationError("sign without digits");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ValidationError("bad digit in integer literal: '" +
                            std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_big_int(text.substr(0, slash));
    BigInt den = parse_big_int(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" +
                                        std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.find_first_of("+-") != std::string_view::npos)
      throw ValidationError("bad decimal literal: '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt whole_part = whole.empty() || whole == "-" || whole == "+"
                            ? BigInt(0)
                            : parse_big_int(whole);
    BigInt scale = 1;
    BigInt frac_part = frac.empty() ? BigInt(0) : parse_big_int(frac);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = abs(whole_part) * scale + frac_part;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_big_int(text));
}

std::string to_fraction_string(const Rational& v) {
  std::ostringstream out;
  out << numerator(v);
  if (denominator(v) != 1) out << '/' << denominator(v);
  return out.str();
}

}  // namespace zsinfo
