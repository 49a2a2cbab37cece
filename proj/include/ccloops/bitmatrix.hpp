#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccl {

// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix Identity(int n);
  // Rows given as 0/1 strings of equal length; used by tests.
  static BitMatrix FromStrings(const std::vector<std::string>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v = true);
  void flip(int r, int c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  // row(dst) += row(src)
  void add_row(int dst, int src);
  void swap_rows(int a, int b);
  bool row_is_zero(int r) const;
  void append_row(const BitMatrix& m, int r);

  BitMatrix transpose() const;
  // Row r of the result is row r of this and then row r of other's rows below.
  BitMatrix stack(const BitMatrix& below) const;
  std::vector<int> row_support(int r) const;
  std::string row_string(int r) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> data_;
};

// this * other over GF(2).
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
bool is_zero(const BitMatrix& m);

int rank_gf2(BitMatrix m);
// Rows form a basis of {x : m x^T = 0}, in reduced form.
BitMatrix kernel_basis(const BitMatrix& m);
// Rows form a basis of the column space of m (vectors of length m.rows()).
BitMatrix image_basis(const BitMatrix& m);
// Rows of b lie in the row span of a.
bool row_span_contains(const BitMatrix& a, const BitMatrix& b);

}  // namespace ccl
