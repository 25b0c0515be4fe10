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

#ifndef KUNIFORM_RATIONAL_H_
#define KUNIFORM_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace kuniform {

// Reduced fraction with a positive denominator. Intermediate products are
// carried in 128 bits; a result that does not fit back into 64 bits throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t numerator, int64_t denominator = 1);
  // Reduces a 128-bit fraction; throws if the reduced form exceeds 64 bits.
  static Rational FromWide(__int128 num, __int128 den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string ToString() const;

  bool IsZero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& other) { return *this = *this + other; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

Rational Abs(const Rational& r);

// 2^-exponent, used as the purity of the maximally mixed state.
Rational InversePowerOfTwo(int exponent);

}  // namespace kuniform

#endif  // KUNIFORM_RATIONAL_H_
