/*
 * Copyright 2026 The shortblock authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shortblock/bitmat.hpp"
#include "shortblock/galois.hpp"

namespace sblk {

/// Sparse parity-check matrix with row and column adjacency views.  Entries
/// carry a nonzero coefficient; binary matrices use coefficient 1.
class SparseMatrix {
 public:
  struct Entry {
    int index;     // column index in a row view, row index in a column view
    Symbol coeff;  // nonzero
  };

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_adj_(rows), col_adj_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_edges() const { return edges_; }

  /// Throws std::invalid_argument on duplicate (row, col) or zero coeff.
  void add_entry(int r, int c, Symbol coeff = 1);

  const std::vector<Entry>& row(int r) const { return row_adj_[r]; }
  const std::vector<Entry>& col(int c) const { return col_adj_[c]; }

  int row_degree(int r) const { return static_cast<int>(row_adj_[r].size()); }
  int col_degree(int c) const { return static_cast<int>(col_adj_[c].size()); }
  int max_row_degree() const;
  int max_col_degree() const;

  bool is_binary() const;

  /// Sorts all adjacency lists by index.  Parsing and construction already
  /// leave the views consistent; this pins a canonical order for comparisons
  /// and serialization.
  void normalize();

  BitMatrix to_dense_binary() const;

  bool operator==(const SparseMatrix& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int edges_ = 0;
  std::vector<std::vector<Entry>> row_adj_;
  std::vector<std::vector<Entry>> col_adj_;
};

/// Parse MacKay alist text.  Layout: "n m" / "max_col_deg max_row_deg" /
/// column degrees / row degrees / per-column 1-based row indices
/// (zero-padded) / per-row column indices.  Non-binary matrices use
/// "index:coeff" tokens with a decimal coefficient.
/// Errors carry the 1-based line number.
SparseMatrix parse_alist(const std::string& text);

/// Canonical serialization: sorted indices, zero padding, and "index:coeff"
/// tokens whenever any coefficient differs from 1.
std::string serialize_alist(const SparseMatrix& m);

}  // namespace sblk
