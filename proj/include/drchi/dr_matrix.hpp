#pragma once

#include "drchi/exact_math.hpp"
#include "drchi/partitions.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <span>
#include <vector>

namespace drchi {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const BigInt> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const BigInt> data() const { return data_; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Raised when a matrix fails the zero-row-sum condition. `row()` is
/// one-based.
class RowSumError : public std::invalid_argument {
 public:
  explicit RowSumError(std::size_t row);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// An r x n integer matrix with r, n >= 1 whose rows all sum to zero.
/// Immutable once constructed.
class DRMatrix {
 public:
  /// Throws RowSumError for the first offending row, std::invalid_argument
  /// for empty or ragged input.
  static DRMatrix validate(IntMatrix entries);
  static DRMatrix validate(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rank() const { return entries_.rows(); }
  std::size_t markings() const { return entries_.cols(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }

  bool operator==(const DRMatrix&) const = default;

 private:
  explicit DRMatrix(IntMatrix entries) : entries_(std::move(entries)) {}

  IntMatrix entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. The 0x0
/// determinant is 1.
BigInt determinant(const IntMatrix& square);

/// Determinant of the submatrix on the given row and column indices.
/// Throws std::invalid_argument when the index sets differ in size or are out
/// of range.
BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols);

/// gcd of all k x k minors: 1 for k == 0, 0 if every minor vanishes.
/// Throws std::out_of_range unless 0 <= k <= min(rows, cols).
BigInt gcd_minors(const IntMatrix& a, std::size_t k);
inline BigInt gcd_minors(const DRMatrix& a, std::size_t k) { return gcd_minors(a.entries(), k); }

/// Sums the columns of each block. Column j of the result is block j of the
/// partition (blocks ordered by minimum element).
DRMatrix contract(const DRMatrix& a, const SetPartition& partition);
/// Same, from a restricted growth string with `blocks` distinct labels.
IntMatrix contract_labels(const IntMatrix& a, std::span<const std::size_t> labels,
                          std::size_t blocks);

struct ReductionResult {
  IntMatrix transform;
  DRMatrix reduced;
};

/// Finds a unimodular M such that M*A has its last column zero below the
/// first row, with a nonnegative first entry equal to the gcd of A's last
/// column.
ReductionResult reduce_special_form(const DRMatrix& a);

/// M*A for unimodular M. Throws std::invalid_argument if M is not square of
/// the right size or det(M) != +-1.
DRMatrix gl_transform(const DRMatrix& a, const IntMatrix& m);

/// Deterministic byte serialization of the shape and entries. Structurally
/// equal matrices yield equal keys and the encoding is injective.
///
/// Layout: "r,n:" followed by the entries in row-major order, each written in
/// base 10 and terminated by ';'. [[0]] encodes as "1,1:0;".
std::string canonical_key(const DRMatrix& a);

/// Key invariant under column permutation and the GL_r(Z) row action up to
/// the reduction used here: columns sorted lexicographically, then reduced to
/// special form. Matrices sharing this key have the same Euler
/// characteristic.
std::string normalized_key(const DRMatrix& a);

/// Rows separated by "; ", entries by single spaces.
std::string render(const IntMatrix& a);

}  // namespace drchi
