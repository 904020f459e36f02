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

#include "shortblock/alist.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sblk {

void SparseMatrix::add_entry(int r, int c, Symbol coeff) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("SparseMatrix: entry out of range");
  if (coeff == 0) throw std::invalid_argument("SparseMatrix: zero coefficient");
  for (const Entry& e : row_adj_[r])
    if (e.index == c) throw std::invalid_argument("SparseMatrix: duplicate entry");
  row_adj_[r].push_back({c, coeff});
  col_adj_[c].push_back({r, coeff});
  ++edges_;
}

int SparseMatrix::max_row_degree() const {
  int d = 0;
  for (const auto& a : row_adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int SparseMatrix::max_col_degree() const {
  int d = 0;
  for (const auto& a : col_adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool SparseMatrix::is_binary() const {
  for (const auto& a : row_adj_)
    for (const Entry& e : a)
      if (e.coeff != 1) return false;
  return true;
}

void SparseMatrix::normalize() {
  auto by_index = [](const Entry& a, const Entry& b) { return a.index < b.index; };
  for (auto& a : row_adj_) std::sort(a.begin(), a.end(), by_index);
  for (auto& a : col_adj_) std::sort(a.begin(), a.end(), by_index);
}

BitMatrix SparseMatrix::to_dense_binary() const {
  BitMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const Entry& e : row_adj_[r]) m.set(r, e.index, true);
  return m;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || edges_ != o.edges_) return false;
  for (int r = 0; r < rows_; ++r) {
    if (row_adj_[r].size() != o.row_adj_[r].size()) return false;
    for (size_t i = 0; i < row_adj_[r].size(); ++i)
      if (row_adj_[r][i].index != o.row_adj_[r][i].index ||
          row_adj_[r][i].coeff != o.row_adj_[r][i].coeff)
        return false;
  }
  return true;
}

namespace {

struct AlistError : std::runtime_error {
  AlistError(int line, const std::string& what)
      : std::runtime_error("alist line " + std::to_string(line) + ": " + what) {}
};

struct TokenReader {
  std::vector<std::pair<std::string, int>> tokens;  // token, line number
  size_t pos = 0;

  explicit TokenReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.emplace_back(tok, lineno);
    }
  }

  bool done() const { return pos >= tokens.size(); }
  int last_line() const { return tokens.empty() ? 1 : tokens.back().second; }

  std::pair<std::string, int> next(const char* what) {
    if (done()) throw AlistError(last_line(), std::string("unexpected end of input, expected ") + what);
    return tokens[pos++];
  }

  int next_int(const char* what) {
    auto [tok, line] = next(what);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw AlistError(line, std::string("bad integer '") + tok + "' for " + what);
    }
  }

  // "index" or "index:coeff"
  std::pair<int, long> next_entry(const char* what) {
    auto [tok, line] = next(what);
    size_t colon = tok.find(':');
    try {
      if (colon == std::string::npos) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return {v, 1};
      }
      size_t used = 0;
      int idx = std::stoi(tok.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(tok);
      long coeff = std::stol(tok.substr(colon + 1), &used);
      if (used != tok.size() - colon - 1) throw std::invalid_argument(tok);
      return {idx, coeff};
    } catch (const std::exception&) {
      throw AlistError(line, std::string("bad entry '") + tok + "' for " + what);
    }
  }
};

}  // namespace

SparseMatrix parse_alist(const std::string& text) {
  TokenReader rd(text);
  int n = rd.next_int("n");
  int m = rd.next_int("m");
  if (n <= 0 || m <= 0) throw AlistError(1, "matrix dimensions must be positive");
  int max_col = rd.next_int("max column degree");
  int max_row = rd.next_int("max row degree");
  if (max_col < 0 || max_row < 0) throw AlistError(1, "negative max degree");

  std::vector<int> col_deg(n), row_deg(m);
  for (int c = 0; c < n; ++c) {
    col_deg[c] = rd.next_int("column degree");
    if (col_deg[c] < 0 || col_deg[c] > max_col)
      throw AlistError(rd.tokens[rd.pos - 1].second, "column degree out of range");
  }
  for (int r = 0; r < m; ++r) {
    row_deg[r] = rd.next_int("row degree");
    if (row_deg[r] < 0 || row_deg[r] > max_row)
      throw AlistError(rd.tokens[rd.pos - 1].second, "row degree out of range");
  }

  SparseMatrix out(m, n);

  // Per-column entries define the matrix; the per-row section is redundant
  // and validated against it.
  for (int c = 0; c < n; ++c) {
    int seen = 0;
    for (int j = 0; j < max_col; ++j) {
      auto [idx, coeff] = rd.next_entry("column entry");
      int line = rd.tokens[rd.pos - 1].second;
      if (idx == 0) continue;  // padding
      if (idx < 1 || idx > m) throw AlistError(line, "row index out of range");
      if (coeff < 1 || coeff > 0xffff) throw AlistError(line, "coefficient out of range");
      out.add_entry(idx - 1, c, static_cast<Symbol>(coeff));
      ++seen;
    }
    if (seen != col_deg[c])
      throw AlistError(rd.tokens[rd.pos - 1].second,
                       "column " + std::to_string(c + 1) + " has " + std::to_string(seen) +
                           " entries, degree says " + std::to_string(col_deg[c]));
  }

  for (int r = 0; r < m; ++r) {
    int seen = 0;
    for (int j = 0; j < max_row; ++j) {
      auto [idx, coeff] = rd.next_entry("row entry");
      int line = rd.tokens[rd.pos - 1].second;
      if (idx == 0) continue;
      if (idx < 1 || idx > n) throw AlistError(line, "column index out of range");
      bool found = false;
      for (const SparseMatrix::Entry& e : out.row(r))
        if (e.index == idx - 1 && e.coeff == coeff) {
          found = true;
          break;
        }
      if (!found) throw AlistError(line, "row section disagrees with column section");
      ++seen;
    }
    if (seen != row_deg[r])
      throw AlistError(rd.tokens[rd.pos - 1].second,
                       "row " + std::to_string(r + 1) + " has " + std::to_string(seen) +
                           " entries, degree says " + std::to_string(row_deg[r]));
  }

  out.normalize();
  return out;
}

std::string serialize_alist(const SparseMatrix& m_in) {
  SparseMatrix m = m_in;
  m.normalize();
  const bool binary = m.is_binary();
  const int n = m.cols();
  const int rows = m.rows();
  const int max_col = m.max_col_degree();
  const int max_row = m.max_row_degree();

  std::ostringstream out;
  out << n << ' ' << rows << '\n';
  out << max_col << ' ' << max_row << '\n';
  for (int c = 0; c < n; ++c) out << m.col_degree(c) << (c + 1 < n ? ' ' : '\n');
  for (int r = 0; r < rows; ++r) out << m.row_degree(r) << (r + 1 < rows ? ' ' : '\n');

  auto emit = [&](const SparseMatrix::Entry& e) {
    out << (e.index + 1);
    if (!binary) out << ':' << static_cast<int>(e.coeff);
  };
  for (int c = 0; c < n; ++c) {
    const auto& adj = m.col(c);
    for (size_t j = 0; j < static_cast<size_t>(max_col); ++j) {
      if (j) out << ' ';
      if (j < adj.size())
        emit(adj[j]);
      else
        out << 0;
    }
    out << '\n';
  }
  for (int r = 0; r < rows; ++r) {
    const auto& adj = m.row(r);
    for (size_t j = 0; j < static_cast<size_t>(max_row); ++j) {
      if (j) out << ' ';
      if (j < adj.size())
        emit(adj[j]);
      else
        out << 0;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sblk
