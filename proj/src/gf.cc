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

#include "matroid/gf.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace matroid {

namespace {

void CheckDims(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw std::invalid_argument("matrix dimensions must lie in [0, 64], got " +
                                std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
}

}  // namespace

bool Field::IsSupported(int q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7;
}

const Field& Field::Get(int q) {
  static const Field kFields[] = {Field(2), Field(3), Field(4), Field(5),
                                  Field(7)};
  switch (q) {
    case 2: return kFields[0];
    case 3: return kFields[1];
    case 4: return kFields[2];
    case 5: return kFields[3];
    case 7: return kFields[4];
    default:
      throw std::invalid_argument("unsupported field order " +
                                  std::to_string(q));
  }
}

Field::Field(int q) : q_(q), p_(q == 4 ? 2 : q) {
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        add_[a][b] = static_cast<FieldElement>(a ^ b);
        // Polynomials in w of degree < 2 reduced by w^2 = w + 1.
        int prod = 0;
        for (int i = 0; i < 2; ++i) {
          if ((b >> i) & 1) prod ^= a << i;
        }
        if (prod & 4) prod ^= 0b111;
        mul_[a][b] = static_cast<FieldElement>(prod);
      } else {
        add_[a][b] = static_cast<FieldElement>((a + b) % q);
        mul_[a][b] = static_cast<FieldElement>((a * b) % q);
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = static_cast<FieldElement>(b);
      if (mul_[a][b] == 1) inv_[a] = static_cast<FieldElement>(b);
    }
  }
}

GFMatrix::GFMatrix(int q, int rows, int cols)
    : q_(q), rows_(rows), cols_(cols) {
  Field::Get(q);
  CheckDims(rows, cols);
  data_.assign(static_cast<size_t>(rows) * cols, 0);
}

GFMatrix GFMatrix::FromRows(int q, const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  GFMatrix m(q, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= q) {
        throw std::invalid_argument("matrix entry out of range for GF(" +
                                    std::to_string(q) + ")");
      }
      m.set(i, j, static_cast<FieldElement>(rows[i][j]));
    }
  }
  return m;
}

GFMatrix GFMatrix::Identity(int q, int n) {
  GFMatrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::FromColumns(int q, int rows,
                               const std::vector<Vector>& columns) {
  GFMatrix m(q, rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(columns[j].size()) != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (int i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void GFMatrix::set(int r, int c, FieldElement v) {
  if (v >= q_) throw std::invalid_argument("entry out of field range");
  data_[r * cols_ + c] = v;
}

Vector GFMatrix::Row(int r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector GFMatrix::Column(int c) const {
  Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

GFMatrix GFMatrix::Transpose() const {
  GFMatrix t(q_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

GFMatrix GFMatrix::SelectColumns(std::span<const int> cols) const {
  GFMatrix m(q_, rows_, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < rows_; ++i) m.set(i, j, at(i, cols[j]));
  }
  return m;
}

GFMatrix GFMatrix::SelectRows(std::span<const int> rows) const {
  GFMatrix m(q_, static_cast<int>(rows.size()), cols_);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(rows[i], j));
  }
  return m;
}

void GFMatrix::AppendRow(const Vector& row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw std::invalid_argument("row length mismatch");
  }
  CheckDims(rows_ + 1, cols_);
  for (FieldElement v : row) {
    if (v >= q_) throw std::invalid_argument("entry out of field range");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void GFMatrix::AppendColumn(const Vector& column) {
  if (static_cast<int>(column.size()) != rows_) {
    throw std::invalid_argument("column length mismatch");
  }
  CheckDims(rows_, cols_ + 1);
  GFMatrix m(q_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    m.set(i, cols_, column[i]);
  }
  *this = std::move(m);
}

EchelonForm Rref(const GFMatrix& m) {
  const Field& f = m.field();
  EchelonForm out{m, 0, {}};
  GFMatrix& a = out.matrix;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < a.cols(); ++j) {
        FieldElement t = a.at(row, j);
        a.set(row, j, a.at(pivot, j));
        a.set(pivot, j, t);
      }
    }
    FieldElement inv = f.Inv(a.at(row, col));
    for (int j = 0; j < a.cols(); ++j) a.set(row, j, f.Mul(a.at(row, j), inv));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      FieldElement factor = a.at(i, col);
      for (int j = 0; j < a.cols(); ++j) {
        a.set(i, j, f.Sub(a.at(i, j), f.Mul(factor, a.at(row, j))));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int MatrixRank(const GFMatrix& m) {
  if (m.q() == 2) return Gf2Rank(PackColumns(m));
  return Rref(m).rank;
}

int RankOfColumns(const GFMatrix& m, Mask columns) {
  if (columns == 0) return 0;
  if (HighestBit(columns) >= m.cols()) {
    throw std::out_of_range("column mask references a nonexistent column");
  }
  if (m.q() == 2) return Gf2RankOfSubset(PackColumns(m), columns);
  std::vector<int> cols = BitsOf(columns);
  return Rref(m.SelectColumns(cols)).rank;
}

std::vector<Vector> NullSpace(const GFMatrix& m) {
  const Field& f = m.field();
  EchelonForm e = Rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (int i = 0; i < e.rank; ++i) {
      v[e.pivots[i]] = f.Neg(e.matrix.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> ProjectivePoints(int r, int q) {
  if (r < 1) throw std::invalid_argument("projective points need rank >= 1");
  Field::Get(q);
  std::vector<Vector> points;
  // Leading 1 at position lead, zeros before it, anything after it.
  // Enumerating lead from last to first gives lexicographic order.
  for (int lead = r - 1; lead >= 0; --lead) {
    int free = r - 1 - lead;
    long long count = 1;
    for (int i = 0; i < free; ++i) count *= q;
    for (long long code = 0; code < count; ++code) {
      Vector v(r, 0);
      v[lead] = 1;
      long long c = code;
      for (int pos = r - 1; pos > lead; --pos) {
        v[pos] = static_cast<FieldElement>(c % q);
        c /= q;
      }
      points.push_back(std::move(v));
    }
  }
  return points;
}

std::vector<std::uint64_t> PackColumns(const GFMatrix& m) {
  if (m.q() != 2) throw std::invalid_argument("PackColumns needs GF(2)");
  std::vector<std::uint64_t> cols(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) cols[j] |= std::uint64_t{1} << i;
    }
  }
  return cols;
}

std::uint64_t Gf2Basis::Reduce(std::uint64_t v) const {
  // Full reduction, so the result is the same for every vector of a coset.
  if (v == 0) return 0;
  for (int b = HighestBit(v); b >= 0; --b) {
    if (Contains(v, b) && by_lead_[b] != 0) v ^= by_lead_[b];
  }
  return v;
}

bool Gf2Basis::Insert(std::uint64_t v) {
  v = Reduce(v);
  if (v == 0) return false;
  by_lead_[HighestBit(v)] = v;
  ++rank_;
  return true;
}

int Gf2Rank(std::span<const std::uint64_t> vectors) {
  Gf2Basis basis;
  for (std::uint64_t v : vectors) basis.Insert(v);
  return basis.rank();
}

int Gf2RankOfSubset(std::span<const std::uint64_t> vectors, Mask subset) {
  Gf2Basis basis;
  ForEachBit(subset, [&](int i) { basis.Insert(vectors[i]); });
  return basis.rank();
}

}  // namespace matroid
