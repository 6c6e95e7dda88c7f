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

#include "primcx/hardness/canonical_form.h"

#include <bit>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

void AddWithValue(CanonicalQuerySet& out, uint32_t mask,
                  const HardSubmodularValuation& v) {
  if (!out.Contains(mask)) out.values.emplace(mask, v.ValueOfMask(mask));
}

// Calls f on every superset of `mask` with `extra` more items.
template <typename F>
void ForEachSuperset(int m, uint32_t mask, int extra, F&& f) {
  std::vector<int> outside;
  for (int i = 0; i < m; ++i) {
    if (!((mask >> i) & 1)) outside.push_back(i);
  }
  ForEachSubsetOfSize(static_cast<int>(outside.size()), extra,
                      [&](uint64_t pick) {
                        uint32_t s = mask;
                        for (size_t j = 0; j < outside.size(); ++j) {
                          if ((pick >> j) & 1) s |= uint32_t{1} << outside[j];
                        }
                        f(s);
                      });
}

}  // namespace

bool CanonicalQuerySet::IsCanonical() const {
  const int k = num_items / 2;
  for (const auto& [mask, value] : values) {
    const int size = std::popcount(mask);
    if (size != k && size != k + 1) return false;
    if (size == k) {
      for (int i = 0; i < num_items; ++i) {
        if (!((mask >> i) & 1) && !Contains(mask | (uint32_t{1} << i))) {
          return false;
        }
      }
    }
  }
  return true;
}

CanonicalQuerySet Canonicalize(const std::vector<ItemSet>& queries,
                               const HardSubmodularValuation& v) {
  const int m = v.num_items();
  const int k = v.k();
  CanonicalQuerySet out;
  out.num_items = m;
  for (const ItemSet& s : queries) {
    if (s.num_items() != m) throw DomainError("query size mismatch");
    const uint32_t mask = static_cast<uint32_t>(s.ToMask());
    const int size = s.size();
    if (size == k - 1) {
      ForEachSuperset(m, mask, 2,
                      [&](uint32_t sup) { AddWithValue(out, sup, v); });
    } else if (size == k) {
      AddWithValue(out, mask, v);
      ForEachSuperset(m, mask, 1,
                      [&](uint32_t sup) { AddWithValue(out, sup, v); });
    } else if (size == k + 1) {
      AddWithValue(out, mask, v);
    }
  }
  return out;
}

std::optional<Rational> DerivedValue(const CanonicalQuerySet& canonical,
                                     uint32_t mask) {
  const int m = canonical.num_items;
  const int k = m / 2;
  const int size = std::popcount(mask);
  if (size < k - 1) return Rational(size);
  if (size > k + 1) return Rational(k);
  if (size == k || size == k + 1) {
    auto it = canonical.values.find(mask);
    if (it == canonical.values.end()) return std::nullopt;
    return it->second;
  }
  bool any_in_b = false;
  bool complete = true;
  ForEachSuperset(m, mask, 2, [&](uint32_t sup) {
    auto it = canonical.values.find(sup);
    if (it == canonical.values.end()) {
      complete = false;
    } else if (it->second == Rational(k)) {
      any_in_b = true;
    }
  });
  if (!complete) return std::nullopt;
  return any_in_b ? Rational(k) - Rational(14, 11) : Rational(k - 1);
}

bool ConsistentWith(const HardSubmodularValuation& w,
                    const std::vector<ItemSet>& queries,
                    const std::vector<Rational>& answers) {
  if (queries.size() != answers.size()) {
    throw DomainError("one answer per query is required");
  }
  for (size_t i = 0; i < queries.size(); ++i) {
    if (w.Value(queries[i]) != answers[i]) return false;
  }
  return true;
}

bool ConsistentWith(const HardSubmodularValuation& w,
                    const CanonicalQuerySet& canonical) {
  for (const auto& [mask, value] : canonical.values) {
    if (w.ValueOfMask(mask) != value) return false;
  }
  return true;
}

}  // namespace primcx
