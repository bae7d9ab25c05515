// Copyright 2026 The ecss Authors
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

#include "ecss/rational.h"

#include <cctype>

#include "ecss/error.h"

namespace ecss {
namespace {

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(whole) + "'");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) ||
        value > (INT64_MAX - 9) / 10) {
      throw Error(ErrorCode::kParseError,
                  "not a rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational ParseRational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseInt(text.substr(0, slash), text);
    const std::int64_t den = ParseInt(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError, "zero denominator in '" +
                                              std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15 || frac.empty()) {
      throw Error(ErrorCode::kParseError,
                  "unsupported decimal '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::int64_t int_part =
        (whole.empty() || whole == "-" || whole == "+")
            ? 0
            : ParseInt(whole, text);
    const std::int64_t frac_part = ParseInt(frac, text);
    if (frac[0] == '-' || frac[0] == '+') {
      throw Error(ErrorCode::kParseError,
                  "not a rational: '" + std::string(text) + "'");
    }
    const std::int64_t magnitude =
        (int_part < 0 ? -int_part : int_part) * scale + frac_part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(ParseInt(text, text));
}

double ToDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace ecss
