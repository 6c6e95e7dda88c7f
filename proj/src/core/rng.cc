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

#include "primcx/core/rng.h"

#include "primcx/core/errors.h"

namespace primcx {

uint64_t Rng::Mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Rng::UniformInt(uint64_t n) {
  if (n == 0) throw DomainError("UniformInt over an empty range");
  // Rejection on the largest multiple of n below 2^64.
  uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
  uint64_t x;
  do {
    x = Next();
  } while (x > limit);
  return x % n;
}

int64_t Rng::UniformRange(int64_t lo, int64_t hi) {
  if (hi < lo) throw DomainError("UniformRange with hi < lo");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == ~uint64_t{0}) return static_cast<int64_t>(Next());
  return lo + static_cast<int64_t>(UniformInt(span + 1));
}

bool Rng::Bernoulli(uint64_t num, uint64_t den) {
  return UniformInt(den) < num;
}

}  // namespace primcx
