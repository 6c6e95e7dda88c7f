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

#include "primcx/adversary/rational_matrix.h"

#include <sstream>
#include <utility>

#include "primcx/core/errors.h"

namespace primcx {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols,
                                      Rational(0)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

RationalMatrix RationalMatrix::FromRows(const std::vector<RationalVector>& rows,
                                        int cols) {
  RationalMatrix m(0, cols);
  for (const RationalVector& row : rows) m.AppendRow(row);
  return m;
}

RationalVector RationalMatrix::Row(int r) const {
  return RationalVector(data_.begin() + r * cols_,
                        data_.begin() + (r + 1) * cols_);
}

void RationalMatrix::AppendRow(const RationalVector& row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw DomainError("row length does not match the column count");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalMatrix RationalMatrix::SelectColumns(
    const std::vector<int>& columns) const {
  RationalMatrix out(rows_, static_cast<int>(columns.size()));
  for (int r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) {
      out.at(r, static_cast<int>(c)) = at(r, columns[c]);
    }
  }
  return out;
}

RationalVector RationalMatrix::Multiply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw DomainError("vector length does not match the column count");
  }
  RationalVector out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
    }
  }
  return out;
}

RowEchelon RationalMatrix::ReducedRowEchelon() const {
  RationalMatrix m = *this;
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r) {
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    }
    const Rational inv = m.at(lead, c).Reciprocal();
    for (int j = c; j < cols_; ++j) {
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      const Rational factor = m.at(r, c);
      for (int j = c; j < cols_; ++j) {
        if (!m.at(lead, j).is_zero()) m.at(r, j) -= factor * m.at(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  RationalMatrix reduced(0, cols_);
  for (int r = 0; r < lead; ++r) reduced.AppendRow(m.Row(r));
  return {std::move(reduced), std::move(pivots)};
}

int RationalMatrix::Rank() const {
  return static_cast<int>(ReducedRowEchelon().pivot_columns.size());
}

RationalVector RationalMatrix::KernelVectorFor(const RowEchelon& e,
                                               int free_column) const {
  RationalVector x(cols_, Rational(0));
  x[free_column] = Rational(1);
  for (size_t r = 0; r < e.pivot_columns.size(); ++r) {
    x[e.pivot_columns[r]] = -e.reduced.at(static_cast<int>(r), free_column);
  }
  return x;
}

std::optional<RationalVector> RationalMatrix::KernelVector() const {
  RowEchelon e = ReducedRowEchelon();
  size_t next = 0;
  for (int c = 0; c < cols_; ++c) {
    if (next < e.pivot_columns.size() && e.pivot_columns[next] == c) {
      ++next;
      continue;
    }
    return KernelVectorFor(e, c);
  }
  return std::nullopt;
}

std::vector<RationalVector> RationalMatrix::KernelBasis() const {
  RowEchelon e = ReducedRowEchelon();
  std::vector<RationalVector> basis;
  size_t next = 0;
  for (int c = 0; c < cols_; ++c) {
    if (next < e.pivot_columns.size() && e.pivot_columns[next] == c) {
      ++next;
      continue;
    }
    basis.push_back(KernelVectorFor(e, c));
  }
  return basis;
}

std::string RationalMatrix::ToString() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    out << "[";
    for (int c = 0; c < cols_; ++c) {
      out << (c ? " " : "") << at(r, c).ToString();
    }
    out << "]\n";
  }
  return out.str();
}

std::optional<RationalVector> BfsSolve(const RationalMatrix& a,
                                       const RationalVector& b,
                                       const RationalVector& start) {
  if (static_cast<int>(b.size()) != a.rows() ||
      static_cast<int>(start.size()) != a.cols()) {
    throw DomainError("BfsSolve dimension mismatch");
  }
  for (const Rational& x : start) {
    if (x.is_infinite() || x.sign() < 0) return std::nullopt;
  }
  if (a.Multiply(start) != b) return std::nullopt;
  RationalVector x = start;
  while (true) {
    std::vector<int> support;
    for (int c = 0; c < a.cols(); ++c) {
      if (!x[c].is_zero()) support.push_back(c);
    }
    std::optional<RationalVector> d = a.SelectColumns(support).KernelVector();
    if (!d) break;
    bool any_positive = false;
    for (const Rational& v : *d) any_positive |= v.sign() > 0;
    if (!any_positive) {
      for (Rational& v : *d) v = -v;
    }
    // Largest step keeping x >= 0; at least one support entry hits zero.
    std::optional<Rational> step;
    for (size_t i = 0; i < support.size(); ++i) {
      if ((*d)[i].sign() > 0) {
        Rational ratio = x[support[i]] / (*d)[i];
        if (!step || ratio < *step) step = std::move(ratio);
      }
    }
    for (size_t i = 0; i < support.size(); ++i) {
      if (!(*d)[i].is_zero()) x[support[i]] -= *step * (*d)[i];
    }
  }
  int support_size = 0;
  for (const Rational& v : x) {
    if (v.sign() < 0) throw InvariantViolation("BfsSolve left the orthant");
    support_size += !v.is_zero();
  }
  if (a.Multiply(x) != b || support_size > a.Rank()) {
    throw InvariantViolation("BfsSolve output failed verification");
  }
  return x;
}

}  // namespace primcx
