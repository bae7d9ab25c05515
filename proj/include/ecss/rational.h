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

#ifndef ECSS_RATIONAL_H_
#define ECSS_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ecss {

using Rational = boost::rational<std::int64_t>;

// Boost 1.74 recurses forever on `r == 0` under C++20's rewritten
// comparisons; compare against Rational(0) instead.

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts "p/q", an integer, or a finite decimal such as "0.1".
// Throws Error{kParseError}.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& r);

}  // namespace ecss

#endif  // ECSS_RATIONAL_H_
