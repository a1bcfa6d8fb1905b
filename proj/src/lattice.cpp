#include "burnside/lattice.hpp"

#include <algorithm>

namespace burnside {

namespace {

// In-place row HNF, pivoting only on the first `pivot_cols` columns. Rows may
// be wider (the extra columns just ride along under the same unimodular row
// operations, which is how the kernel computation extracts its basis).
// Returns the number of pivot rows.
int hnf_in_place(IntMat& rows, int pivot_cols) {
  const int m = static_cast<int>(rows.size());
  int r = 0;
  for (int col = 0; col < pivot_cols && r < m; ++col) {
    // Euclidean elimination below row r in this column.
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (rows[i][col] != 0 && (best < 0 || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[r][col];
        if (q != 0)
          for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m && rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (auto& x : rows[r]) x = -x;
      for (int i = 0; i < r; ++i) {
        Int q = floor_div(rows[i][col], rows[r][col]);
        if (q != 0)
          for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  return r;
}

bool row_is_zero(const IntVec& v, int cols) {
  for (int j = 0; j < cols; ++j)
    if (v[j] != 0) return false;
  return true;
}

}  // namespace

IntMat hermite_normal_form(IntMat rows, int cols) {
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != cols) throw Error("ragged matrix");
  int r = hnf_in_place(rows, cols);
  rows.resize(r);
  return rows;
}

IntegerLattice lattice_from_rows(int ambient_rank, IntMat rows) {
  IntegerLattice lat;
  lat.ambient_rank = ambient_rank;
  lat.basis = hermite_normal_form(std::move(rows), ambient_rank);
  return lat;
}

bool lattice_contains(const IntegerLattice& lat, const IntVec& v) {
  if (static_cast<int>(v.size()) != lat.ambient_rank) throw Error("vector has wrong length");
  IntVec t = v;
  for (const auto& row : lat.basis) {
    int pivot = 0;
    while (pivot < lat.ambient_rank && row[pivot] == 0) ++pivot;
    if (t[pivot] % row[pivot] != 0) return false;
    Int q = t[pivot] / row[pivot];
    if (q != 0)
      for (int j = 0; j < lat.ambient_rank; ++j) t[j] -= q * row[j];
  }
  return std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; });
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
  return a.ambient_rank == b.ambient_rank && a.basis == b.basis;
}

bool sublattice_of(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank != b.ambient_rank) return false;
  for (const auto& row : a.basis)
    if (!lattice_contains(b, row)) return false;
  return true;
}

IntegerLattice left_kernel(const IntMat& m, int rows, int cols) {
  if (static_cast<int>(m.size()) != rows) throw Error("matrix row count mismatch");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw Error("ragged matrix");

  // [m | I]: unimodular row operations that zero out a row of m leave the
  // identity part holding the kernel combination that did it.
  IntMat aug(rows, IntVec(cols + rows, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols + i] = 1;
  }
  int r = hnf_in_place(aug, cols);
  IntMat kernel_rows;
  for (int i = r; i < rows; ++i) {
    if (!row_is_zero(aug[i], cols)) throw Error("internal: residual row after elimination");
    kernel_rows.emplace_back(aug[i].begin() + cols, aug[i].end());
  }
  return lattice_from_rows(rows, std::move(kernel_rows));
}

IntegerLattice preimage_lattice(const IntMat& q, const IntegerLattice& l) {
  const int qr = static_cast<int>(q.size());
  for (const auto& row : q)
    if (static_cast<int>(row.size()) != l.ambient_rank) throw Error("map does not land in the lattice ambient");

  // x·q ∈ L  iff  (x, -y) kills the stacked matrix [q; basis(L)] for some y.
  IntMat stacked = q;
  for (const auto& row : l.basis) stacked.push_back(row);
  IntegerLattice ker = left_kernel(stacked, qr + l.rank(), l.ambient_rank);
  IntMat projected;
  for (const auto& row : ker.basis) projected.emplace_back(row.begin(), row.begin() + qr);
  return lattice_from_rows(qr, std::move(projected));
}

}  // namespace burnside
