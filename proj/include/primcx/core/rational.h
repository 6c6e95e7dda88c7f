// Copyright 2026 The Authors.
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

#ifndef PRIMCX_CORE_RATIONAL_H_
#define PRIMCX_CORE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace primcx {

// Exact rational number with a distinguished +infinity.
//
// Values whose numerator and denominator fit in 63 bits are kept inline and
// operated on with 128-bit intermediates; anything larger moves to a shared,
// immutable mpq_class. The two representations are never both live, so
// equality and hashing can compare fields directly after normalization.
//
// Infinity exists only for prices. Any arithmetic touching it throws
// DomainError; comparisons treat it as larger than every finite value.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int64_t numerator, int64_t denominator);
  explicit Rational(const mpq_class& value);

  static Rational Infinity();

  // Accepts "a/b", "a", and "inf". Throws ParseError.
  static Rational Parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && !big_ && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  // "num/den" for finite values, "inf" otherwise.
  std::string ToString() const;
  double ToDouble() const;
  mpq_class ToMpq() const;

  // Integer exponent, exact. Throws DomainError on infinity.
  Rational Pow(unsigned exponent) const;
  Rational Reciprocal() const;
  Rational Abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  size_t Hash() const;

 private:
  void AssignMpq(mpq_class value);
  void RequireFinite(const char* op) const {
    if (infinite_) [[unlikely]] ThrowInfinite(op);
  }
  [[noreturn]] static void ThrowInfinite(const char* op);
  static Rational FromWide(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

}  // namespace primcx

template <>
struct std::hash<primcx::Rational> {
  size_t operator()(const primcx::Rational& r) const { return r.Hash(); }
};

#endif  // PRIMCX_CORE_RATIONAL_H_
