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

#ifndef PRIMCX_CORE_RNG_H_
#define PRIMCX_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace primcx {

// Seeded 64-bit generator with draws that do not depend on the standard
// library's distribution implementations, so streams are identical across
// toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : seed_(seed), engine_(Mix(seed)) {}

  uint64_t seed() const { return seed_; }
  uint64_t Next() { return engine_(); }

  // Uniform on [0, n). n must be positive.
  uint64_t UniformInt(uint64_t n);
  // Uniform on [lo, hi].
  int64_t UniformRange(int64_t lo, int64_t hi);
  // True with probability num/den.
  bool Bernoulli(uint64_t num, uint64_t den);
  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = UniformInt(i);
      std::swap(values[i - 1], values[j]);
    }
  }

  // Independent stream derived from this seed and a label.
  Rng Fork(uint64_t label) const { return Rng(Mix(seed_ ^ Mix(label))); }

  static uint64_t Mix(uint64_t x);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace primcx

#endif  // PRIMCX_CORE_RNG_H_
