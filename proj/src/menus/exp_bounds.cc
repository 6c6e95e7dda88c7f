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

#include "primcx/menus/exp_bounds.h"

#include <cmath>

#include "primcx/core/errors.h"

namespace primcx {

ExpBounds ExpTaylorBounds(const Rational& x, int terms) {
  if (x.is_infinite() || x.sign() < 0) {
    throw DomainError("exp bounds need a finite x >= 0");
  }
  if (Rational(terms + 2) <= x) {
    throw DomainError("too few Taylor terms for x = " + x.ToString());
  }
  Rational term(1);
  Rational sum(1);
  for (int i = 1; i <= terms; ++i) {
    term = term * x / Rational(i);
    sum += term;
  }
  // Tail: sum_{i > n} x^i / i! <= x^{n+1}/(n+1)! * 1/(1 - x/(n+2)).
  Rational next = term * x / Rational(terms + 1);
  Rational tail = next * Rational(terms + 2) / (Rational(terms + 2) - x);
  return {sum, sum + tail};
}

int CompareExp(const Rational& x, const Rational& r) {
  if (x.is_infinite() || x.sign() < 0) {
    throw DomainError("CompareExp needs a finite x >= 0");
  }
  if (r.is_infinite()) return -1;
  if (x.is_zero()) return Rational(1) < r ? -1 : (Rational(1) == r ? 0 : 1);
  if (r.sign() <= 0) return 1;
  int terms = static_cast<int>(std::ceil(x.ToDouble())) + 8;
  for (int round = 0; round < 12; ++round) {
    ExpBounds bounds = ExpTaylorBounds(x, terms);
    if (bounds.lower > r) return 1;
    if (bounds.upper < r) return -1;
    terms *= 2;
  }
  throw DomainError("CompareExp undecided for x = " + x.ToString());
}

}  // namespace primcx
