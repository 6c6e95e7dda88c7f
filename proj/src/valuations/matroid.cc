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

#include "primcx/valuations/matroid.h"

#include <numeric>

#include "primcx/core/errors.h"

namespace primcx {
namespace {

class UniformBuilder : public Matroid::Builder {
 public:
  explicit UniformBuilder(int rank) : rank_(rank) {}
  bool CanAdd(int) const override { return size_ < rank_; }
  void Add(int) override { ++size_; }

 private:
  int rank_;
  int size_ = 0;
};

class PartitionBuilder : public Matroid::Builder {
 public:
  explicit PartitionBuilder(const PartitionMatroid& matroid)
      : matroid_(matroid), used_(matroid.capacities().size(), 0) {}
  bool CanAdd(int item) const override {
    int block = matroid_.block_of()[item];
    return used_[block] < matroid_.capacities()[block];
  }
  void Add(int item) override { ++used_[matroid_.block_of()[item]]; }

 private:
  const PartitionMatroid& matroid_;
  std::vector<int> used_;
};

class GraphicBuilder : public Matroid::Builder {
 public:
  explicit GraphicBuilder(const GraphicMatroid& matroid)
      : matroid_(matroid), parent_(matroid.num_vertices()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  bool CanAdd(int item) const override {
    const auto& [u, v] = matroid_.edges()[item];
    return Find(u) != Find(v);
  }
  void Add(int item) override {
    const auto& [u, v] = matroid_.edges()[item];
    parent_[Find(u)] = Find(v);
  }

 private:
  int Find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  const GraphicMatroid& matroid_;
  mutable std::vector<int> parent_;
};

}  // namespace

bool Matroid::IsIndependent(const ItemSet& s) const {
  if (s.num_items() != num_items()) {
    throw StructuralError("item set does not match matroid");
  }
  std::unique_ptr<Builder> builder = NewBuilder();
  for (int item : s) {
    if (!builder->CanAdd(item)) return false;
    builder->Add(item);
  }
  return true;
}

int Matroid::Rank(const ItemSet& s) const {
  if (s.num_items() != num_items()) {
    throw StructuralError("item set does not match matroid");
  }
  std::unique_ptr<Builder> builder = NewBuilder();
  int rank = 0;
  for (int item : s) {
    if (builder->CanAdd(item)) {
      builder->Add(item);
      ++rank;
    }
  }
  return rank;
}

UniformMatroid::UniformMatroid(int num_items, int rank)
    : num_items_(num_items), rank_(rank) {
  if (num_items < 0 || num_items > ItemSet::kMaxItems) {
    throw StructuralError("uniform matroid size out of range");
  }
  if (rank < 0) throw DomainError("negative uniform matroid rank");
}

std::unique_ptr<Matroid::Builder> UniformMatroid::NewBuilder() const {
  return std::make_unique<UniformBuilder>(rank_);
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of,
                                   std::vector<int> capacities)
    : block_of_(std::move(block_of)), capacities_(std::move(capacities)) {
  if (block_of_.size() > static_cast<size_t>(ItemSet::kMaxItems)) {
    throw StructuralError("partition matroid size out of range");
  }
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(capacities_.size())) {
      throw StructuralError("partition block index out of range");
    }
  }
  for (int c : capacities_) {
    if (c < 0) throw DomainError("negative block capacity");
  }
}

std::unique_ptr<Matroid::Builder> PartitionMatroid::NewBuilder() const {
  return std::make_unique<PartitionBuilder>(*this);
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw StructuralError("negative vertex count");
  if (edges_.size() > static_cast<size_t>(ItemSet::kMaxItems)) {
    throw StructuralError("graphic matroid size out of range");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw StructuralError("edge endpoint out of range");
    }
  }
}

std::unique_ptr<Matroid::Builder> GraphicMatroid::NewBuilder() const {
  return std::make_unique<GraphicBuilder>(*this);
}

}  // namespace primcx
