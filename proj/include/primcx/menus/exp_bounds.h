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

#ifndef PRIMCX_MENUS_EXP_BOUNDS_H_
#define PRIMCX_MENUS_EXP_BOUNDS_H_

#include "primcx/core/rational.h"

namespace primcx {

struct ExpBounds {
  Rational lower;
  Rational upper;
};

// Rational bounds lower <= e^x <= upper for x >= 0 from the first
// `terms` + 1 Taylor terms and a geometric tail bound. Needs
// terms + 2 > x.
ExpBounds ExpTaylorBounds(const Rational& x, int terms);

// Sign of e^x - r, decided exactly by refining the bounds. x >= 0. Throws
// DomainError if undecided after many terms, which can only happen when
// e^x == r, that is x == 0 and r == 1 (handled directly).
int CompareExp(const Rational& x, const Rational& r);

}  // namespace primcx

#endif  // PRIMCX_MENUS_EXP_BOUNDS_H_
