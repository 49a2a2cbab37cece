#include "ccloops/bitmatrix.hpp"

#include <utility>

#include "ccloops/errors.hpp"

namespace ccl {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

BitMatrix BitMatrix::Identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::FromStrings(const std::vector<std::string>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw PreconditionError("ragged rows");
    for (int c = 0; c < cols; ++c) {
      if (rows[r][c] == '1') m.set(r, c);
      else if (rows[r][c] != '0') throw PreconditionError("row strings must be 0/1");
    }
  }
  return m;
}

void BitMatrix::set(int r, int c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (v) data_[r * words_ + c / 64] |= bit;
  else data_[r * words_ + c / 64] &= ~bit;
}

void BitMatrix::add_row(int dst, int src) {
  for (int w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
}

void BitMatrix::swap_rows(int a, int b) {
  for (int w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
}

bool BitMatrix::row_is_zero(int r) const {
  for (int w = 0; w < words_; ++w)
    if (data_[r * words_ + w]) return false;
  return true;
}

void BitMatrix::append_row(const BitMatrix& m, int r) {
  if (m.cols_ != cols_) throw PreconditionError("column count mismatch");
  data_.insert(data_.end(), m.data_.begin() + r * words_,
               m.data_.begin() + (r + 1) * words_);
  ++rows_;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::stack(const BitMatrix& below) const {
  if (below.cols_ != cols_) throw PreconditionError("column count mismatch");
  BitMatrix s = *this;
  s.rows_ += below.rows_;
  s.data_.insert(s.data_.end(), below.data_.begin(), below.data_.end());
  return s;
}

std::vector<int> BitMatrix::row_support(int r) const {
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c)
    if (get(r, c)) out.push_back(c);
  return out;
}

std::string BitMatrix::row_string(int r) const {
  std::string s(cols_, '0');
  for (int c = 0; c < cols_; ++c)
    if (get(r, c)) s[c] = '1';
  return s;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("inner dimensions differ");
  BitMatrix out(a.rows(), b.cols());
  BitMatrix bt = b.transpose();
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      bool v = false;
      for (int k : a.row_support(r)) v ^= bt.get(c, k);
      if (v) out.set(r, c);
    }
  }
  return out;
}

bool is_zero(const BitMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_is_zero(r)) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> reduce(BitMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    for (int r = 0; r < m.rows(); ++r)
      if (r != row && m.get(r, c)) m.add_row(r, row);
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_gf2(BitMatrix m) { return static_cast<int>(reduce(m).size()); }

BitMatrix kernel_basis(const BitMatrix& m) {
  BitMatrix r = m;
  const std::vector<int> pivots = reduce(r);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  BitMatrix basis(0, m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitMatrix v(1, m.cols());
    v.set(0, free);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (r.get(static_cast<int>(k), free)) v.set(0, pivots[k]);
    basis.append_row(v, 0);
  }
  return basis;
}

BitMatrix image_basis(const BitMatrix& m) {
  BitMatrix t = m.transpose();
  reduce(t);
  BitMatrix basis(0, m.rows());
  for (int r = 0; r < t.rows(); ++r)
    if (!t.row_is_zero(r)) basis.append_row(t, r);
  return basis;
}

bool row_span_contains(const BitMatrix& a, const BitMatrix& b) {
  return rank_gf2(a) == rank_gf2(a.stack(b));
}

}  // namespace ccl
