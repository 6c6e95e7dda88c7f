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

#ifndef PRIMCX_ADVERSARY_RATIONAL_MATRIX_H_
#define PRIMCX_ADVERSARY_RATIONAL_MATRIX_H_

#include <optional>
#include <string>
#include <vector>

#include "primcx/core/rational.h"

namespace primcx {

using RationalVector = std::vector<Rational>;

struct RowEchelon;

// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  // Throws DomainError on ragged input.
  static RationalMatrix FromRows(const std::vector<RationalVector>& rows,
                                 int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  RationalVector Row(int r) const;

  void AppendRow(const RationalVector& row);
  RationalMatrix SelectColumns(const std::vector<int>& columns) const;
  RationalVector Multiply(const RationalVector& x) const;

  // Gauss-Jordan elimination, pivoting on the first non-zero entry of each
  // column in row order. The reduced form is unique.
  RowEchelon ReducedRowEchelon() const;
  int Rank() const;

  // A kernel vector: the first free column of the reduced form set to 1,
  // the other free columns 0, pivot variables back-substituted. nullopt
  // when the columns are independent.
  std::optional<RationalVector> KernelVector() const;
  // One such vector per free column, in column order.
  std::vector<RationalVector> KernelBasis() const;

  std::string ToString() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) =
      default;

 private:
  RationalVector KernelVectorFor(const RowEchelon& e, int free_column) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;  // Reduced row echelon form, zero rows dropped.
  std::vector<int> pivot_columns;
};

// A non-negative solution of A x = b with at most rank(A) non-zero entries,
// found from a known non-negative solution `start` by repeatedly moving
// along a kernel direction of the support columns until an entry reaches
// zero. nullopt if `start` is not a non-negative solution. The output is
// verified by substitution before it is returned.
std::optional<RationalVector> BfsSolve(const RationalMatrix& a,
                                       const RationalVector& b,
                                       const RationalVector& start);

}  // namespace primcx

#endif  // PRIMCX_ADVERSARY_RATIONAL_MATRIX_H_
