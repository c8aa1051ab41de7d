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

#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace bellgames {

// All classical quantities (priors, payoffs, Bell coefficients, advice
// weights) are exact rationals; floating point enters only through the
// quantum module. boost::rational keeps values normalized (reduced, positive
// denominator), so equality is canonical.
using Rational = boost::rational<long long>;

/// Parses "3/4", "-1/8" or "2". Throws ValidationError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" rendering, denominator always present ("3/2", "0/1").
std::string fraction_string(const Rational& r);

/// "num" for integral values, "num/den" otherwise ("3/2", "1", "-1/8").
std::string compact_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace bellgames
