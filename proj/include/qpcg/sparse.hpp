// Copyright 2026 The qpcg Authors
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

// Sparse matrix storage (COO/CSR/CSC), format conversions, and the
// data-parallel kernels the solver is built from: SpMV, per-row norms as a
// segmented reduction, diagonal row/column scaling, and diagonal extraction.
//
// CSR is the canonical in-memory format; COO and CSC exist for ingestion and
// transposition. All formats are zero-based, sorted by row then column, with
// no duplicate entries. Explicitly stored zeros are kept structurally.

#ifndef QPCG_SPARSE_HPP
#define QPCG_SPARSE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpcg/types.hpp"

namespace qpcg {

template <typename T>
struct CooMatrix {
  index_t rows = 0;
  index_t cols = 0;
  std::vector<T> values;
  std::vector<index_t> row_indices;
  std::vector<index_t> col_indices;

  index_t nnz() const { return static_cast<index_t>(values.size()); }
};

template <typename T>
struct CsrMatrix {
  index_t rows = 0;
  index_t cols = 0;
  std::vector<T> values;
  std::vector<index_t> row_ptr;  // size rows + 1, row_ptr[rows] == nnz
  std::vector<index_t> col_indices;

  index_t nnz() const { return static_cast<index_t>(values.size()); }
};

template <typename T>
struct CscMatrix {
  index_t rows = 0;
  index_t cols = 0;
  std::vector<T> values;
  std::vector<index_t> row_indices;
  std::vector<index_t> col_ptr;  // size cols + 1, col_ptr[cols] == nnz

  index_t nnz() const { return static_cast<index_t>(values.size()); }
};

// Maps each stored entry back to its row, so row scaling can run as one flat
// pass over the value array.
struct RowIndexCache {
  std::vector<index_t> row_of_entry;
};

template <typename T>
void validate(const CooMatrix<T>& m) {
  const std::size_t nnz = m.values.size();
  if (m.row_indices.size() != nnz || m.col_indices.size() != nnz) {
    throw std::invalid_argument("coo: index/value array length mismatch");
  }
  for (std::size_t k = 0; k < nnz; ++k) {
    if (m.row_indices[k] >= m.rows || m.col_indices[k] >= m.cols) {
      throw std::invalid_argument("coo: entry index out of bounds");
    }
    if (k > 0) {
      const bool row_ok = m.row_indices[k] > m.row_indices[k - 1];
      const bool col_ok = m.row_indices[k] == m.row_indices[k - 1] &&
                          m.col_indices[k] > m.col_indices[k - 1];
      if (!row_ok && !col_ok) {
        throw std::invalid_argument(
            "coo: entries must be sorted by row then column, without "
            "duplicates");
      }
    }
  }
}

template <typename T>
void validate(const CsrMatrix<T>& m) {
  const std::size_t nnz = m.values.size();
  if (m.row_ptr.size() != static_cast<std::size_t>(m.rows) + 1) {
    throw std::invalid_argument("csr: row_ptr must have rows + 1 entries");
  }
  if (m.col_indices.size() != nnz) {
    throw std::invalid_argument("csr: col_indices/value length mismatch");
  }
  if (m.row_ptr.front() != 0 || m.row_ptr.back() != nnz) {
    throw std::invalid_argument("csr: row_ptr must start at 0 and end at nnz");
  }
  for (index_t r = 0; r < m.rows; ++r) {
    if (m.row_ptr[r + 1] < m.row_ptr[r]) {
      throw std::invalid_argument("csr: row_ptr must be nondecreasing");
    }
    for (index_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      if (m.col_indices[k] >= m.cols) {
        throw std::invalid_argument("csr: column index out of bounds");
      }
      if (k > m.row_ptr[r] && m.col_indices[k] <= m.col_indices[k - 1]) {
        throw std::invalid_argument(
            "csr: column indices must be strictly increasing within a row");
      }
    }
  }
}

template <typename T>
void validate(const CscMatrix<T>& m) {
  const std::size_t nnz = m.values.size();
  if (m.col_ptr.size() != static_cast<std::size_t>(m.cols) + 1) {
    throw std::invalid_argument("csc: col_ptr must have cols + 1 entries");
  }
  if (m.row_indices.size() != nnz) {
    throw std::invalid_argument("csc: row_indices/value length mismatch");
  }
  if (m.col_ptr.front() != 0 || m.col_ptr.back() != nnz) {
    throw std::invalid_argument("csc: col_ptr must start at 0 and end at nnz");
  }
  for (index_t c = 0; c < m.cols; ++c) {
    if (m.col_ptr[c + 1] < m.col_ptr[c]) {
      throw std::invalid_argument("csc: col_ptr must be nondecreasing");
    }
    for (index_t k = m.col_ptr[c]; k < m.col_ptr[c + 1]; ++k) {
      if (m.row_indices[k] >= m.rows) {
        throw std::invalid_argument("csc: row index out of bounds");
      }
      if (k > m.col_ptr[c] && m.row_indices[k] <= m.row_indices[k - 1]) {
        throw std::invalid_argument(
            "csc: row indices must be strictly increasing within a column");
      }
    }
  }
}

// Compresses the row index array into a row pointer: count entries per row,
// take the cumulative sum, prepend zero. Value and column arrays carry over
// unchanged. Rejects unsorted or duplicate input.
template <typename T>
CsrMatrix<T> coo_to_csr(const CooMatrix<T>& m) {
  validate(m);
  CsrMatrix<T> out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.values = m.values;
  out.col_indices = m.col_indices;
  out.row_ptr.assign(static_cast<std::size_t>(m.rows) + 1, 0);
  for (index_t k = 0; k < m.nnz(); ++k) {
    ++out.row_ptr[m.row_indices[k] + 1];
  }
  for (index_t r = 0; r < m.rows; ++r) {
    out.row_ptr[r + 1] += out.row_ptr[r];
  }
  return out;
}

template <typename T>
CooMatrix<T> csr_to_coo(const CsrMatrix<T>& m) {
  validate(m);
  CooMatrix<T> out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.values = m.values;
  out.col_indices = m.col_indices;
  out.row_indices.resize(m.values.size());
  for (index_t r = 0; r < m.rows; ++r) {
    for (index_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      out.row_indices[k] = r;
    }
  }
  return out;
}

// A CSC matrix reinterpreted entry-for-entry as the CSR form of its
// transpose: the column pointer becomes the row pointer and the row indices
// become column indices.
template <typename T>
CsrMatrix<T> csc_as_csr_transpose(const CscMatrix<T>& m) {
  validate(m);
  CsrMatrix<T> out;
  out.rows = m.cols;
  out.cols = m.rows;
  out.values = m.values;
  out.row_ptr = m.col_ptr;
  out.col_indices = m.row_indices;
  return out;
}

template <typename T>
CsrMatrix<T> transpose_csr(const CsrMatrix<T>& m) {
  CsrMatrix<T> out;
  out.rows = m.cols;
  out.cols = m.rows;
  out.values.resize(m.values.size());
  out.col_indices.resize(m.values.size());
  out.row_ptr.assign(static_cast<std::size_t>(m.cols) + 1, 0);
  for (index_t k = 0; k < m.nnz(); ++k) {
    ++out.row_ptr[m.col_indices[k] + 1];
  }
  for (index_t c = 0; c < m.cols; ++c) {
    out.row_ptr[c + 1] += out.row_ptr[c];
  }
  // Scatter in row-major scan order; per output row this visits source rows
  // in increasing order, so column indices come out sorted.
  std::vector<index_t> cursor(out.row_ptr.begin(), out.row_ptr.end() - 1);
  for (index_t r = 0; r < m.rows; ++r) {
    for (index_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      const index_t dst = cursor[m.col_indices[k]]++;
      out.values[dst] = m.values[k];
      out.col_indices[dst] = r;
    }
  }
  return out;
}

// Expands an upper-triangular matrix into the full symmetric one: each
// off-diagonal entry (r, c) is mirrored to (c, r); diagonal entries appear
// once. Input entries strictly below the diagonal are rejected.
template <typename T>
CsrMatrix<T> symmetrize_upper(const CsrMatrix<T>& upper) {
  validate(upper);
  if (upper.rows != upper.cols) {
    throw std::invalid_argument("symmetrize_upper: matrix must be square");
  }
  const index_t n = upper.rows;
  CsrMatrix<T> out;
  out.rows = n;
  out.cols = n;
  out.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (index_t r = 0; r < n; ++r) {
    for (index_t k = upper.row_ptr[r]; k < upper.row_ptr[r + 1]; ++k) {
      const index_t c = upper.col_indices[k];
      if (c < r) {
        throw std::invalid_argument(
            "symmetrize_upper: entry below the diagonal");
      }
      ++out.row_ptr[r + 1];
      if (c != r) ++out.row_ptr[c + 1];
    }
  }
  for (index_t r = 0; r < n; ++r) {
    out.row_ptr[r + 1] += out.row_ptr[r];
  }
  out.values.resize(out.row_ptr[n]);
  out.col_indices.resize(out.row_ptr[n]);
  // Mirrored entries of output row j come from earlier input rows and all
  // have column < j, so the scan order keeps every output row sorted.
  std::vector<index_t> cursor(out.row_ptr.begin(), out.row_ptr.end() - 1);
  for (index_t r = 0; r < n; ++r) {
    for (index_t k = upper.row_ptr[r]; k < upper.row_ptr[r + 1]; ++k) {
      const index_t c = upper.col_indices[k];
      index_t dst = cursor[r]++;
      out.values[dst] = upper.values[k];
      out.col_indices[dst] = c;
      if (c != r) {
        dst = cursor[c]++;
        out.values[dst] = upper.values[k];
        out.col_indices[dst] = r;
      }
    }
  }
  return out;
}

template <typename T>
void spmv(const CsrMatrix<T>& m, const std::vector<T>& x, std::vector<T>& y) {
  if (x.size() != m.cols) {
    throw std::invalid_argument("spmv: vector length does not match cols");
  }
  y.resize(m.rows);
  for (index_t r = 0; r < m.rows; ++r) {
    T s = T(0);
    for (index_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      s += m.values[k] * x[m.col_indices[k]];
    }
    y[r] = s;
  }
}

template <typename T>
std::vector<T> spmv(const CsrMatrix<T>& m, const std::vector<T>& x) {
  std::vector<T> y;
  spmv(m, x, y);
  return y;
}

// Reduces each segment [ptr[i], ptr[i+1]) of the value array with the given
// fold; empty segments yield the initial value. Per-row norms, sums, and
// sums of squares all run through this one path.
template <typename T, typename Acc, typename Fold>
std::vector<Acc> segmented_reduce(const std::vector<T>& values,
                                  const std::vector<index_t>& segment_ptr,
                                  Acc init, Fold fold) {
  const std::size_t segments = segment_ptr.empty() ? 0 : segment_ptr.size() - 1;
  std::vector<Acc> out(segments, init);
  for (std::size_t s = 0; s < segments; ++s) {
    Acc acc = init;
    for (index_t k = segment_ptr[s]; k < segment_ptr[s + 1]; ++k) {
      acc = fold(acc, values[k]);
    }
    out[s] = acc;
  }
  return out;
}

template <typename T>
std::vector<T> row_inf_norms(const CsrMatrix<T>& m) {
  return segmented_reduce(m.values, m.row_ptr, T(0), [](T acc, T v) {
    T a = std::abs(v);
    return a > acc ? a : acc;
  });
}

// Post-multiplication by a diagonal: entry k picks up d[col_indices[k]].
template <typename T>
void scale_columns_inplace(CsrMatrix<T>& m, const std::vector<T>& d) {
  if (d.size() != m.cols) {
    throw std::invalid_argument("scale_columns: diagonal length mismatch");
  }
  for (index_t k = 0; k < m.nnz(); ++k) {
    m.values[k] *= d[m.col_indices[k]];
  }
}

inline RowIndexCache build_row_index_cache(const std::vector<index_t>& row_ptr) {
  RowIndexCache cache;
  if (row_ptr.empty()) return cache;
  cache.row_of_entry.resize(row_ptr.back());
  for (std::size_t r = 0; r + 1 < row_ptr.size(); ++r) {
    for (index_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      cache.row_of_entry[k] = static_cast<index_t>(r);
    }
  }
  return cache;
}

template <typename T>
RowIndexCache build_row_index_cache(const CsrMatrix<T>& m) {
  return build_row_index_cache(m.row_ptr);
}

// Pre-multiplication by a diagonal. The cache supplies the row of each
// stored entry so the pass is flat over the value array.
template <typename T>
void scale_rows_inplace(CsrMatrix<T>& m, const RowIndexCache& cache,
                        const std::vector<T>& d) {
  if (d.size() != m.rows) {
    throw std::invalid_argument("scale_rows: diagonal length mismatch");
  }
  if (cache.row_of_entry.size() != m.values.size()) {
    throw std::invalid_argument("scale_rows: stale row index cache");
  }
  for (index_t r = 0; r < m.rows; ++r) {
    if (m.row_ptr[r] < m.row_ptr[r + 1] &&
        cache.row_of_entry[m.row_ptr[r]] != r) {
      throw std::invalid_argument("scale_rows: stale row index cache");
    }
  }
  for (index_t k = 0; k < m.nnz(); ++k) {
    m.values[k] *= d[cache.row_of_entry[k]];
  }
}

template <typename T>
std::vector<T> extract_diagonal(const CsrMatrix<T>& m) {
  if (m.rows != m.cols) {
    throw std::invalid_argument("extract_diagonal: matrix must be square");
  }
  std::vector<T> diag(m.rows, T(0));
  for (index_t r = 0; r < m.rows; ++r) {
    for (index_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      if (m.col_indices[k] == r) {
        diag[r] = m.values[k];
        break;
      }
    }
  }
  return diag;
}

// diag(A'A) without forming A'A: (A'A)_ii is the squared Euclidean norm of
// column i, accumulated by column index in one pass.
template <typename T>
std::vector<T> diag_ata(const CsrMatrix<T>& a) {
  std::vector<T> d(a.cols, T(0));
  for (index_t k = 0; k < a.nnz(); ++k) {
    d[a.col_indices[k]] += a.values[k] * a.values[k];
  }
  return d;
}

}  // namespace qpcg

#endif  // QPCG_SPARSE_HPP
