#ifndef LINETREES_INT_MATRIX_HPP
#define LINETREES_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "linetrees/bigint.hpp"

namespace linetrees {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy with row `r` and column `c` removed.
  IntMatrix minor(std::size_t r, std::size_t c) const;

  IntMatrix operator*(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. The empty
/// matrix has determinant 1.
BigInt determinant(IntMatrix m);

struct SmithForm {
  /// min(rows, cols) diagonal entries, nonnegative, each dividing the next,
  /// zeros last.
  std::vector<BigInt> diagonal;
  /// When requested: unimodular U (rows x rows) and V (cols x cols) with
  /// U * M * V equal to the diagonal matrix.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

/// Smith normal form over the integers. Pivots on the smallest nonzero
/// entry and reduces by Euclidean division until the pivot divides its row,
/// its column and the remaining block.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

}  // namespace linetrees

#endif  // LINETREES_INT_MATRIX_HPP
