// Copyright 2026 The kuniform Authors
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

#include "kuniform/rational.h"

#include <limits>

#include "kuniform/error.h"

namespace kuniform {
namespace {

__int128 WideAbs(__int128 v) { return v < 0 ? -v : v; }

__int128 WideGcd(__int128 a, __int128 b) {
  a = WideAbs(a);
  b = WideAbs(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(int64_t numerator, int64_t denominator) {
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = WideGcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<int64_t>::max();
  if (WideAbs(num) > kMax || den > kMax) {
    throw Error(ErrorCode::kInvalidArgument, "rational overflow");
  }
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_ +
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_ -
                                static_cast<__int128>(b.num_) * a.den_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Abs(const Rational& r) { return r.num() < 0 ? Rational(-r.num(), r.den()) : r; }

Rational InversePowerOfTwo(int exponent) {
  if (exponent < 0 || exponent > 62) {
    throw Error(ErrorCode::kInvalidArgument, "power of two out of range");
  }
  return Rational(1, int64_t{1} << exponent);
}

}  // namespace kuniform
