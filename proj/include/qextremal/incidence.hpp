#ifndef QEXTREMAL_INCIDENCE_HPP
#define QEXTREMAL_INCIDENCE_HPP

#include "qextremal/matrix.hpp"
#include "qextremal/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace qx {

/// 0/1 vector over the projective points of a fixed PointOrder: bit j is set
/// iff point j lies in the subspace.
class IncidenceVector {
public:
  explicit IncidenceVector(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  bool test(std::size_t j) const { return (words_[j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t j);
  std::size_t weight() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const IncidenceVector &,
                         const IncidenceVector &) = default;

private:
  std::size_t length_;
  std::vector<std::uint64_t> words_;
};

using PointOrderRef = std::shared_ptr<const PointOrder>;

/// Throws AmbientMismatch if a and order differ in field or ambient space.
IncidenceVector incidence_vector(const Subspace &a, const PointOrder &order);

/// Number of common set bits. Throws LengthMismatch.
std::size_t scalar_product(const IncidenceVector &u, const IncidenceVector &v);

/// The matrix M whose row i is the incidence vector of member i.
class IncidenceMatrixRec {
public:
  IncidenceMatrixRec(PointOrderRef order, std::vector<IncidenceVector> rows);

  const PointOrderRef &point_order() const noexcept { return order_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return order_->size(); }
  const IncidenceVector &row(std::size_t i) const { return rows_[i]; }

  const MatrixInt &as_int() const noexcept { return as_int_; }
  const MatrixF2 &as_f2() const noexcept { return as_f2_; }

private:
  PointOrderRef order_;
  std::vector<IncidenceVector> rows_;
  MatrixInt as_int_;
  MatrixF2 as_f2_;
};

IncidenceMatrixRec incidence_matrix(std::span<const Subspace> members,
                                    PointOrderRef order);

/// Memoizes incidence vectors by canonical basis for one PointOrder.
/// Concurrent lookups share a reader lock; inserts take the writer lock.
class IncidenceCache {
public:
  explicit IncidenceCache(PointOrderRef order);

  const PointOrderRef &point_order() const noexcept { return order_; }
  /// The returned reference stays valid for the cache's lifetime.
  const IncidenceVector &get(const Subspace &a);
  std::size_t size() const;

private:
  PointOrderRef order_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Subspace, std::unique_ptr<const IncidenceVector>,
                     SubspaceHash>
      entries_;
};

} // namespace qx

#endif // QEXTREMAL_INCIDENCE_HPP
