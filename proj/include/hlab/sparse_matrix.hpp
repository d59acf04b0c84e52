#pragma once

// Exact sparse matrices with rank / kernel / homology computations via
// fraction-free-friendly Gaussian elimination (pivoting RREF with systematic
// canonicalization through the field type).  Triplet build-up, row-major
// elimination, dense fallback below 64x64.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "hlab/errors.hpp"
#include "hlab/field.hpp"

namespace hlab {

template <class K>
using SparseVec = std::vector<std::pair<int, typename K::Scalar>>;  // sorted by index

namespace detail {

template <class K>
void add_scaled(SparseVec<K>& dst, const SparseVec<K>& src, const typename K::Scalar& factor) {
  if (factor.is_zero()) return;
  SparseVec<K> out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, src[j].second * factor);
      if (out.back().second.is_zero()) out.pop_back();
      ++j;
    } else {
      auto v = dst[i].second + src[j].second * factor;
      if (!v.is_zero()) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

// Row-echelon structure with full back-substitution (RREF).  Pivot columns
// are exactly the columns where the rank of the leading submatrix jumps, so
// the pivot/free split is canonical for a fixed column order.
template <class K>
class Echelon {
 public:
  // Reduces `row` against the current echelon; if a nonzero remainder is
  // left, normalizes and inserts it.  Returns true when the rank grew.
  bool insert(SparseVec<K> row) {
    reduce(row);
    if (row.empty()) return false;
    auto inv = row.front().second.inverse();
    for (auto& e : row) e.second = e.second * inv;
    // eliminate the new pivot from existing rows
    int pivot = row.front().first;
    for (auto& kv : rows_) {
      auto& r = kv.second;
      auto it = std::lower_bound(r.begin(), r.end(), pivot,
                                 [](const auto& a, int c) { return a.first < c; });
      if (it != r.end() && it->first == pivot) {
        auto factor = -it->second;
        add_scaled<K>(r, row, factor);
      }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  // Eliminates every pivot-column coordinate; afterwards the row is
  // supported on free columns only.
  void reduce(SparseVec<K>& row) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [col, coef] : row) {
        auto it = rows_.find(col);
        if (it != rows_.end()) {
          add_scaled<K>(row, it->second, -coef);
          changed = true;
          break;
        }
      }
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec<K>>& rows() const { return rows_; }  // keyed by pivot col

 private:
  std::map<int, SparseVec<K>> rows_;
};

}  // namespace detail

template <class K>
struct Subspace {
  int ambient_dim = 0;
  std::vector<SparseVec<K>> basis;  // linearly independent coordinate vectors
  int dim() const { return static_cast<int>(basis.size()); }
};

template <class K>
class SparseMatrix {
 public:
  using S = typename K::Scalar;

  SparseMatrix(K field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  }

  static SparseMatrix zero(K field, int rows, int cols) { return SparseMatrix(field, rows, cols); }

  void add(int r, int c, const S& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("entry out of range");
    if (v.is_zero()) return;
    auto key = std::make_pair(r, c);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      entries_.emplace(key, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const K& field() const { return field_; }
  long nonzeros() const { return static_cast<long>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }

  const std::map<std::pair<int, int>, S>& entries() const { return entries_; }

  SparseMatrix transpose() const {
    SparseMatrix t(field_, cols_, rows_);
    for (const auto& [rc, v] : entries_) t.add(rc.second, rc.first, v);
    return t;
  }

  // this * rhs, acting on column vectors.
  SparseMatrix multiply(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("product shape mismatch");
    SparseMatrix out(field_, rows_, rhs.cols_);
    // group rhs by row for the inner loop
    std::vector<SparseVec<K>> rhs_rows(rhs.rows_);
    for (const auto& [rc, v] : rhs.entries_) rhs_rows[rc.first].emplace_back(rc.second, v);
    for (const auto& [rc, v] : entries_)
      for (const auto& [c2, w] : rhs_rows[rc.second]) out.add(rc.first, c2, v * w);
    return out;
  }

  int rank() const {
    if (use_dense()) return dense_rref().first;
    detail::Echelon<K> ech;
    for (auto& row : row_vectors()) ech.insert(std::move(row));
    return ech.rank();
  }

  // Basis of { v : this * v = 0 }.
  Subspace<K> kernel_basis() const {
    std::map<int, SparseVec<K>> pivot_rows;  // pivot col -> reduced row
    if (use_dense()) {
      auto [rank, rref] = dense_rref();
      (void)rank;
      for (auto& r : rref)
        if (!r.empty()) pivot_rows.emplace(r.front().first, std::move(r));
    } else {
      detail::Echelon<K> ech;
      for (auto& row : row_vectors()) ech.insert(std::move(row));
      pivot_rows = ech.rows();
    }
    // free column -> contributions (pivot col, -coef) collected in one pass
    std::map<int, SparseVec<K>> free_col_deps;
    for (const auto& [pc, row] : pivot_rows)
      for (const auto& [col, coef] : row)
        if (col != pc) free_col_deps[col].emplace_back(pc, -coef);
    Subspace<K> ker;
    ker.ambient_dim = cols_;
    for (int c = 0; c < cols_; ++c) {
      if (pivot_rows.count(c)) continue;
      SparseVec<K> v;
      auto it = free_col_deps.find(c);
      if (it != free_col_deps.end()) v = it->second;
      v.emplace_back(c, field_.one());
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ker.basis.push_back(std::move(v));
    }
    return ker;
  }

  SparseVec<K> apply(const SparseVec<K>& v) const {
    SparseVec<K> out;
    std::map<int, S> acc;
    for (const auto& [rc, m] : entries_) {
      for (const auto& [idx, x] : v)
        if (idx == rc.second) acc[rc.first] += m * x;
    }
    for (auto& [i, s] : acc)
      if (!s.is_zero()) out.emplace_back(i, s);
    return out;
  }

 private:
  bool use_dense() const { return rows_ < 64 && cols_ < 64; }

  std::vector<SparseVec<K>> row_vectors() const {
    std::vector<SparseVec<K>> rows(rows_);
    for (const auto& [rc, v] : entries_) rows[rc.first].emplace_back(rc.second, v);
    return rows;  // entries_ map order keeps each row sorted by column
  }

  // Dense RREF; returns (rank, reduced rows as sparse vectors).
  std::pair<int, std::vector<SparseVec<K>>> dense_rref() const {
    std::vector<std::vector<S>> m(rows_, std::vector<S>(cols_, field_.zero()));
    for (const auto& [rc, v] : entries_) m[rc.first][rc.second] = v;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      int piv = -1;
      for (int r = rank; r < rows_; ++r)
        if (!m[r][c].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[rank], m[piv]);
      auto inv = m[rank][c].inverse();
      for (int j = c; j < cols_; ++j) m[rank][j] = m[rank][j] * inv;
      for (int r = 0; r < rows_; ++r) {
        if (r == rank || m[r][c].is_zero()) continue;
        auto f = m[r][c];
        for (int j = c; j < cols_; ++j) m[r][j] = m[r][j] - f * m[rank][j];
      }
      ++rank;
    }
    std::vector<SparseVec<K>> out;
    for (int r = 0; r < rank; ++r) {
      SparseVec<K> row;
      for (int j = 0; j < cols_; ++j)
        if (!m[r][j].is_zero()) row.emplace_back(j, m[r][j]);
      out.push_back(std::move(row));
    }
    return {rank, out};
  }

  K field_;
  int rows_, cols_;
  std::map<std::pair<int, int>, S> entries_;
};

// Homology dimension of  . --d_in--> M --d_out--> .  at the middle term:
// dim ker(d_out) - rank(d_in).  Requires d_out * d_in = 0 (checked exactly).
template <class K>
long homology_dim(const SparseMatrix<K>& d_in, const SparseMatrix<K>& d_out) {
  if (d_out.cols() != d_in.rows())
    throw ShapeError("homology_dim: cols(d_out)=" + std::to_string(d_out.cols()) +
                     " vs rows(d_in)=" + std::to_string(d_in.rows()));
  if (!d_out.multiply(d_in).is_zero()) throw NotAComplexError("d_out * d_in != 0");
  long k = d_out.cols() - d_out.rank();
  long r = d_in.rank();
  if (k < r) throw Error("internal: negative homology dimension");
  return k - r;
}

}  // namespace hlab
