#include "qextremal/matrix.hpp"

#include "qextremal/errors.hpp"

#include <algorithm>
#include <bit>

namespace qx {

MatrixFq::MatrixFq(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(rows * cols, 0) {}

MatrixFq::MatrixFq(FieldRef field, std::size_t rows, std::size_t cols,
                   std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw OutOfRange("matrix entry count does not match shape");
  for (Elem x : entries_)
    if (!field_->valid(x))
      throw OutOfRange("matrix entry " + std::to_string(x) +
                       " is not a code of F_" + std::to_string(field_->q()));
}

void MatrixFq::append_row(std::span<const Elem> row) {
  if (row.size() != cols_)
    throw LengthMismatch("row length " + std::to_string(row.size()) +
                         " != " + std::to_string(cols_));
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

void MatrixFq::truncate_rows(std::size_t n) {
  if (n < rows_) {
    rows_ = n;
    entries_.resize(rows_ * cols_);
  }
}

RrefResult rref_rank_fq(const MatrixFq &m) {
  MatrixFq a = m;
  const FieldSpec &f = *a.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pr = rank;
    while (pr < a.rows() && a.at(pr, c) == 0)
      ++pr;
    if (pr == a.rows())
      continue;
    if (pr != rank)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pr, j), a.at(rank, j));
    const Elem scale = f.inv(a.at(rank, c));
    for (std::size_t j = c; j < a.cols(); ++j)
      a.at(rank, j) = f.mul(a.at(rank, j), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a.at(r, c) == 0)
        continue;
      const Elem factor = a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(a), rank, std::move(pivots)};
}

MatrixF2::MatrixF2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(rows * words_, 0) {}

void MatrixF2::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  auto &w = data_[r * words_ + c / 64];
  w = v ? (w | mask) : (w & ~mask);
}

MatrixF2 MatrixF2::identity(std::size_t m) {
  MatrixF2 out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    out.set(i, i, true);
  return out;
}

MatrixF2 MatrixF2::ones_minus_identity(std::size_t m) {
  MatrixF2 out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.set(i, j, i != j);
  return out;
}

std::size_t rank_f2(const MatrixF2 &m) {
  MatrixF2 a = m;
  const std::size_t words = a.words_per_row();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pr = rank;
    while (pr < a.rows() && !(a.row_words(pr)[w] & mask))
      ++pr;
    if (pr == a.rows())
      continue;
    if (pr != rank) {
      auto x = a.row_words(pr);
      auto y = a.row_words(rank);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const auto pivot = a.row_words(rank);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      auto row = a.row_words(r);
      if (row[w] & mask)
        for (std::size_t k = w; k < words; ++k)
          row[k] ^= pivot[k];
    }
    ++rank;
  }
  return rank;
}

MatrixInt::MatrixInt(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixInt MatrixInt::identity(std::size_t m) {
  MatrixInt out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    out.at(i, i) = 1;
  return out;
}

MatrixF2 MatrixInt::mod2() const {
  MatrixF2 out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.set(r, c, boost::multiprecision::bit_test(at(r, c), 0));
  return out;
}

std::size_t exact_rank_int(const MatrixInt &m) {
  MatrixInt a = m;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pr = rank;
    while (pr < a.rows() && a.at(pr, c) == 0)
      ++pr;
    if (pr == a.rows())
      continue;
    if (pr != rank)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pr, j), a.at(rank, j));
    const BigInt pivot = a.at(rank, c);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      const BigInt lead = a.at(r, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a.at(r, j) = (pivot * a.at(r, j) - lead * a.at(rank, j)) / prev;
      a.at(r, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

MatrixInt gram(const MatrixInt &m) {
  MatrixInt out(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.rows(); ++j) {
      BigInt s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c)
        s += m.at(i, c) * m.at(j, c);
      out.at(i, j) = s;
      out.at(j, i) = s;
    }
  return out;
}

} // namespace qx
