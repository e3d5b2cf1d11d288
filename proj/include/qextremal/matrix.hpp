#ifndef QEXTREMAL_MATRIX_HPP
#define QEXTREMAL_MATRIX_HPP

#include "qextremal/field.hpp"
#include "qextremal/qcount.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qx {

/// Dense row-major matrix over F_q.
class MatrixFq {
public:
  MatrixFq(FieldRef field, std::size_t rows, std::size_t cols);
  /// Throws OutOfRange if entries has the wrong length or an invalid code.
  MatrixFq(FieldRef field, std::size_t rows, std::size_t cols,
           std::vector<Elem> entries);

  const FieldRef &field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem> &entries() const noexcept { return entries_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Elem &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Elem> row);
  /// Keeps only the first n rows.
  void truncate_rows(std::size_t n);

  friend bool operator==(const MatrixFq &a, const MatrixFq &b) {
    return a.field_->q() == b.field_->q() && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  MatrixFq reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form and rank. Zero rows stay at the bottom.
RrefResult rref_rank_fq(const MatrixFq &m);

/// Bit-packed matrix over F_2. Padding bits past cols are always zero.
class MatrixF2 {
public:
  MatrixF2(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v);
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {data_.data() + r * words_, words_};
  }

  static MatrixF2 identity(std::size_t m);
  /// J_m - I_m: ones everywhere except the diagonal.
  static MatrixF2 ones_minus_identity(std::size_t m);

  friend bool operator==(const MatrixF2 &, const MatrixF2 &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Rank over F_2 by word-parallel Gaussian elimination.
std::size_t rank_f2(const MatrixF2 &m);

/// Dense matrix of arbitrary-precision integers.
class MatrixInt {
public:
  MatrixInt(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const BigInt &at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  BigInt &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  static MatrixInt identity(std::size_t m);

  /// Entrywise reduction to F_2.
  MatrixF2 mod2() const;

  friend bool operator==(const MatrixInt &, const MatrixInt &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t exact_rank_int(const MatrixInt &m);

/// M * M^T.
MatrixInt gram(const MatrixInt &m);

} // namespace qx

#endif // QEXTREMAL_MATRIX_HPP
