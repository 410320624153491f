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

// Arithmetic over GF(q) for q in {2, 3, 4, 5, 7} and dense linear algebra
// over those fields. GF(2) has a separate word-level path in which a
// column vector of at most 64 entries is packed into a uint64_t.

#ifndef MATROID_GF_H_
#define MATROID_GF_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matroid/bits.h"

namespace matroid {

using FieldElement = std::uint8_t;
using Vector = std::vector<FieldElement>;

constexpr int kMaxMatrixDim = 64;

// Addition and multiplication tables for one of the supported fields. For
// q = 4 the elements 0, 1, 2, 3 stand for 0, 1, w, w + 1 with w^2 = w + 1.
class Field {
 public:
  // Throws std::invalid_argument for an unsupported order.
  static const Field& Get(int q);
  static bool IsSupported(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  FieldElement Add(FieldElement a, FieldElement b) const { return add_[a][b]; }
  FieldElement Mul(FieldElement a, FieldElement b) const { return mul_[a][b]; }
  FieldElement Neg(FieldElement a) const { return neg_[a]; }
  FieldElement Sub(FieldElement a, FieldElement b) const {
    return add_[a][neg_[b]];
  }
  // Requires a != 0.
  FieldElement Inv(FieldElement a) const { return inv_[a]; }

 private:
  explicit Field(int q);

  int q_;
  int p_;
  std::array<std::array<FieldElement, 8>, 8> add_{};
  std::array<std::array<FieldElement, 8>, 8> mul_{};
  std::array<FieldElement, 8> neg_{};
  std::array<FieldElement, 8> inv_{};
};

// Dense rows x cols matrix over GF(q), both dimensions at most 64.
class GFMatrix {
 public:
  GFMatrix() : GFMatrix(2, 0, 0) {}
  GFMatrix(int q, int rows, int cols);

  // Entries are reduced modulo nothing: each must already lie in [0, q).
  static GFMatrix FromRows(int q, const std::vector<std::vector<int>>& rows);
  static GFMatrix Identity(int q, int n);
  // Builds a matrix whose columns are the given vectors (all of length
  // `rows`).
  static GFMatrix FromColumns(int q, int rows,
                              const std::vector<Vector>& columns);

  int q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return Field::Get(q_); }

  FieldElement at(int r, int c) const { return data_[r * cols_ + c]; }
  void set(int r, int c, FieldElement v);

  Vector Row(int r) const;
  Vector Column(int c) const;

  GFMatrix Transpose() const;
  GFMatrix SelectColumns(std::span<const int> cols) const;
  GFMatrix SelectRows(std::span<const int> rows) const;
  void AppendRow(const Vector& row);
  void AppendColumn(const Vector& column);

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  int q_;
  int rows_;
  int cols_;
  std::vector<FieldElement> data_;
};

struct EchelonForm {
  GFMatrix matrix;  // reduced row-echelon form; zero rows at the bottom
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

EchelonForm Rref(const GFMatrix& m);
int MatrixRank(const GFMatrix& m);

// Rank of the submatrix formed by the columns in `columns`. Throws
// std::out_of_range if the mask names a column that does not exist.
int RankOfColumns(const GFMatrix& m, Mask columns);

// Basis of {x : m x = 0}; exactly cols - rank vectors.
std::vector<Vector> NullSpace(const GFMatrix& m);

// One representative of every 1-dimensional subspace of GF(q)^r, leading
// nonzero entry equal to 1, in lexicographic order (entry 0 most
// significant). Throws std::invalid_argument for r < 1.
std::vector<Vector> ProjectivePoints(int r, int q);

// ---- GF(2) word-level path ----

// Packs column c of a GF(2) matrix; bit i of the word is row i.
std::vector<std::uint64_t> PackColumns(const GFMatrix& m);

// Rank of the span of the given GF(2) vectors.
int Gf2Rank(std::span<const std::uint64_t> vectors);

// Rank of the span of vectors[i] for i in `subset`.
int Gf2RankOfSubset(std::span<const std::uint64_t> vectors, Mask subset);

// Incremental GF(2) basis with leading-bit reduction. Reduce() is a full
// reduction: vectors in the same coset of the span reduce to the same value.
class Gf2Basis {
 public:
  // Returns true iff v was independent of the current span (and adds it).
  bool Insert(std::uint64_t v);
  bool InSpan(std::uint64_t v) const { return Reduce(v) == 0; }
  std::uint64_t Reduce(std::uint64_t v) const;
  int rank() const { return rank_; }

 private:
  std::array<std::uint64_t, 64> by_lead_{};
  int rank_ = 0;
};

}  // namespace matroid

#endif  // MATROID_GF_H_
