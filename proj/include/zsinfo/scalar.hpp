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

#ifndef ZSINFO_SCALAR_HPP_
#define ZSINFO_SCALAR_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace zsinfo {

// Every quantity in the library is generic over the scalar: `double` for
// float mode (absolute tolerance 1e-9) and `Rational` for exact mode.
// Certificate-bearing paths (garbling kernels, Farkas vectors, order
// decisions) should run in rational mode; quantized/density inputs are
// inherently float.
using Rational = boost::multiprecision::cpp_rational;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double default_tolerance() { return 1e-9; }
  static constexpr const char* mode_name = "float";
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational default_tolerance() { return Rational(0); }
  static constexpr const char* mode_name = "rational";
};

template <class S>
inline S abs_value(const S& v) {
  return v < S(0) ? S(-v) : v;
}

// |a - b| <= tol. With the default tolerance this is exact equality in
// rational mode and the library-wide 1e-9 in float mode.
template <class S>
inline bool near(const S& a, const S& b,
                 const S& tol = ScalarTraits<S>::default_tolerance()) {
  return abs_value(S(a - b)) <= tol;
}

template <class S>
inline bool near_zero(const S& a,
                      const S& tol = ScalarTraits<S>::default_tolerance()) {
  return abs_value(a) <= tol;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

template <class S>
inline S make_scalar(long long num, long long den = 1) {
  return S(num) / S(den);
}

template <>
inline double make_scalar<double>(long long num, long long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

// Accepts "p/q", plain integers ("-3") and decimal literals ("0.25").
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1. Lossless round trip.
std::string to_fraction_string(const Rational& v);

}  // namespace zsinfo

#endif  // ZSINFO_SCALAR_HPP_
