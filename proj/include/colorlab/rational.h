// Copyright 2026 The Colorlab Authors.
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

#ifndef COLORLAB_RATIONAL_H_
#define COLORLAB_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace colorlab {

// Exact rational number in canonical form (reduced, positive denominator),
// backed by GMP. Serialized as "num/den".
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Accepts "p/q", "p" and "-p/q". Throws InvalidArgumentError otherwise,
  // including a zero denominator.
  static Rational Parse(std::string_view text);

  // Always "num/den", e.g. "2/1", "-3/4".
  std::string ToString() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  Rational Floor() const;
  Rational Ceil() const;
  Rational Abs() const { return Rational(mpq_class(abs(value_))); }
  // Only for human-readable summaries; never used in computations.
  double ToDouble() const { return value_.get_d(); }
  // Integer value; throws InvalidArgumentError when not an integer or out of
  // range.
  std::int64_t ToInt64() const;

  const mpq_class& raw() const { return value_; }
  mpq_class& raw() { return value_; }

  // this -= a * b without a heap temporary per call.
  void SubMul(const Rational& a, const Rational& b);
  void AddMul(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);
// 2^exponent as a rational, exponent >= 0.
Rational PowerOfTwo(int exponent);

}  // namespace colorlab

#endif  // COLORLAB_RATIONAL_H_
