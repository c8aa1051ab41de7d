// Copyright 2026 The bellgames Authors
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

#include "bellgames/rational.hpp"

#include <charconv>
#include <system_error>

#include "bellgames/errors.hpp"

namespace bellgames {

namespace {

long long parse_integer(std::string_view text) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ValidationError("empty rational");
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text));
    }
    const long long num = parse_integer(text.substr(0, slash));
    const long long den = parse_integer(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const boost::bad_rational&) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
}

std::string fraction_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string compact_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return fraction_string(r);
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace bellgames
