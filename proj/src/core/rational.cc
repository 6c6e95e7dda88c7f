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

#include "primcx/core/rational.h"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

u128 Abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : x; }

u128 Gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
    }
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class MpzFromU128(u128 x) {
  mpz_class hi(static_cast<unsigned long>(x >> 64));  // NOLINT(runtime/int)
  mpz_class lo(static_cast<unsigned long>(x));        // NOLINT(runtime/int)
  return (hi << 64) + lo;
}

mpz_class MpzFromI128(i128 x) {
  mpz_class magnitude = MpzFromU128(Abs128(x));
  return x < 0 ? mpz_class(-magnitude) : magnitude;
}

bool FitsInline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) &&
         z.get_si() != std::numeric_limits<int64_t>::min();
}

}  // namespace

Rational::Rational(int64_t value) {
  if (value == std::numeric_limits<int64_t>::min()) {
    AssignMpq(mpq_class(mpz_class(static_cast<long>(value))));  // NOLINT
  } else {
    num_ = value;
  }
}

Rational::Rational(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  *this = FromWide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy(value);
  copy.canonicalize();
  AssignMpq(std::move(copy));
}

Rational Rational::Infinity() {
  Rational r;
  r.infinite_ = true;
  return r;
}

Rational Rational::FromWide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = Gcd128(Abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (Abs128(num) <= static_cast<u128>(kMax) &&
      static_cast<u128>(den) <= static_cast<u128>(kMax)) {
    r.num_ = static_cast<int64_t>(num);
    r.den_ = static_cast<int64_t>(den);
    return r;
  }
  mpq_class q(MpzFromI128(num), MpzFromI128(den));
  r.AssignMpq(std::move(q));
  return r;
}

void Rational::AssignMpq(mpq_class value) {
  infinite_ = false;
  if (FitsInline(value.get_num()) && FitsInline(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

void Rational::ThrowInfinite(const char* op) {
  throw DomainError(std::string("infinite operand in ") + op);
}

Rational Rational::Parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\n\r");
  size_t end = text.find_last_not_of(" \t\n\r");
  if (begin == std::string_view::npos) throw ParseError("empty rational");
  std::string s(text.substr(begin, end - begin + 1));
  if (s == "inf" || s == "+inf" || s == "Infinity") return Infinity();
  size_t slash = s.find('/');
  std::string num_text = s.substr(0, slash);
  std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num_text) || !valid(den_text)) {
    throw ParseError("malformed rational '" + s + "'");
  }
  if (num_text[0] == '+') num_text.erase(0, 1);
  if (den_text[0] == '+') den_text.erase(0, 1);
  mpz_class num(num_text, 10);
  mpz_class den(den_text, 10);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.AssignMpq(std::move(q));
  return r;
}

bool Rational::is_integer() const {
  if (infinite_) return false;
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (infinite_) return 1;
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::ToString() const {
  if (infinite_) return "inf";
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::ToDouble() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

mpq_class Rational::ToMpq() const {
  RequireFinite("ToMpq");
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),   // NOLINT
                   mpz_class(static_cast<long>(den_)));  // NOLINT
}

Rational Rational::Pow(unsigned exponent) const {
  RequireFinite("Pow");
  if (exponent == 0) return Rational(1);
  if (exponent == 1) return *this;
  mpq_class base = ToMpq();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational r;
  r.AssignMpq(mpq_class(num, den));
  return r;
}

Rational Rational::Reciprocal() const {
  RequireFinite("Reciprocal");
  return Rational(1) / *this;
}

Rational Rational::Abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  RequireFinite("negation");
  if (big_) {
    Rational r;
    r.AssignMpq(mpq_class(-*big_));
    return r;
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  RequireFinite("addition");
  other.RequireFinite("addition");
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      int64_t sum;
      if (!__builtin_add_overflow(num_, other.num_, &sum) &&
          sum != std::numeric_limits<int64_t>::min()) {
        num_ = sum;
        return *this;
      }
    }
    if (den_ == other.den_) {
      *this = FromWide(static_cast<i128>(num_) + other.num_, den_);
    } else {
      *this = FromWide(static_cast<i128>(num_) * other.den_ +
                           static_cast<i128>(other.num_) * den_,
                       static_cast<i128>(den_) * other.den_);
    }
    return *this;
  }
  AssignMpq(ToMpq() + other.ToMpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  RequireFinite("multiplication");
  other.RequireFinite("multiplication");
  if (!big_ && !other.big_) {
    *this = FromWide(static_cast<i128>(num_) * other.num_,
                     static_cast<i128>(den_) * other.den_);
    return *this;
  }
  AssignMpq(ToMpq() * other.ToMpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  RequireFinite("division");
  other.RequireFinite("division");
  if (other.is_zero()) throw DomainError("division by zero");
  if (!big_ && !other.big_) {
    *this = FromWide(static_cast<i128>(num_) * other.den_,
                     static_cast<i128>(den_) * other.num_);
    return *this;
  }
  AssignMpq(ToMpq() / other.ToMpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // Normalized: a big value never equals an inline one.
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater
                                  : std::strong_ordering::equal);
  }
  int c = cmp(a.ToMpq(), b.ToMpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

size_t Rational::Hash() const {
  if (infinite_) return 0x9e3779b97f4a7c15ULL;
  if (big_) return std::hash<std::string>()(ToString());
  uint64_t h = static_cast<uint64_t>(num_) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<uint64_t>(den_) + 0x7f4a7c159e3779b9ULL + (h << 6) +
       (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace primcx
