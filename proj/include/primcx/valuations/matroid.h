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

#ifndef PRIMCX_VALUATIONS_MATROID_H_
#define PRIMCX_VALUATIONS_MATROID_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "primcx/core/item_set.h"

namespace primcx {

// A matroid over {0, ..., m-1}, exposed through an incremental
// independence builder: start from the empty set and ask whether each
// candidate keeps the current set independent.
class Matroid {
 public:
  class Builder {
   public:
    virtual ~Builder() = default;
    virtual bool CanAdd(int item) const = 0;
    // Requires CanAdd(item).
    virtual void Add(int item) = 0;
  };

  virtual ~Matroid() = default;

  virtual int num_items() const = 0;
  virtual std::string type_name() const = 0;
  virtual std::unique_ptr<Builder> NewBuilder() const = 0;

  bool IsIndependent(const ItemSet& s) const;
  int Rank(const ItemSet& s) const;
};

// Every set of size at most `rank` is independent.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int num_items, int rank);

  int num_items() const override { return num_items_; }
  std::string type_name() const override { return "uniform"; }
  std::unique_ptr<Builder> NewBuilder() const override;

  int rank() const { return rank_; }

 private:
  int num_items_;
  int rank_;
};

// Items are split into blocks; a set is independent if it takes at most
// capacity[b] items from each block b.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> capacities);

  int num_items() const override { return static_cast<int>(block_of_.size()); }
  std::string type_name() const override { return "partition"; }
  std::unique_ptr<Builder> NewBuilder() const override;

  const std::vector<int>& block_of() const { return block_of_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  std::vector<int> block_of_;
  std::vector<int> capacities_;
};

// Items are the edges of a multigraph; a set is independent if it is a
// forest. Self-loops are never independent.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_items() const override { return static_cast<int>(edges_.size()); }
  std::string type_name() const override { return "graphic"; }
  std::unique_ptr<Builder> NewBuilder() const override;

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace primcx

#endif  // PRIMCX_VALUATIONS_MATROID_H_
