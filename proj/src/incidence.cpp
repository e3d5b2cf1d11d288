#include "qextremal/incidence.hpp"

#include "qextremal/errors.hpp"

#include <bit>
#include <mutex>

namespace qx {

IncidenceVector::IncidenceVector(std::size_t length)
    : length_(length), words_((length + 63) / 64, 0) {}

void IncidenceVector::set(std::size_t j) {
  words_[j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t IncidenceVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto x : words_)
    w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

IncidenceVector incidence_vector(const Subspace &a, const PointOrder &order) {
  if (a.field()->q() != order.field()->q() || a.ambient() != order.ambient())
    throw AmbientMismatch("subspace and point order live in different spaces");
  IncidenceVector v(order.size());
  if (a.dim() == 0)
    return v;
  if (a.dim() == a.ambient()) {
    for (std::size_t j = 0; j < order.size(); ++j)
      v.set(j);
    return v;
  }
  for (std::size_t j = 0; j < order.size(); ++j)
    if (contains_point(a, order[j]))
      v.set(j);
  return v;
}

std::size_t scalar_product(const IncidenceVector &u, const IncidenceVector &v) {
  if (u.length() != v.length())
    throw LengthMismatch("incidence vectors of length " +
                         std::to_string(u.length()) + " and " +
                         std::to_string(v.length()));
  std::size_t s = 0;
  const auto a = u.words();
  const auto b = v.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return s;
}

IncidenceMatrixRec::IncidenceMatrixRec(PointOrderRef order,
                                       std::vector<IncidenceVector> rows)
    : order_(std::move(order)), rows_(std::move(rows)),
      as_int_(rows_.size(), order_->size()),
      as_f2_(rows_.size(), order_->size()) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].length() != order_->size())
      throw LengthMismatch("incidence row length differs from point order");
    for (std::size_t j = 0; j < order_->size(); ++j)
      if (rows_[i].test(j)) {
        as_int_.at(i, j) = 1;
        as_f2_.set(i, j, true);
      }
  }
}

IncidenceMatrixRec incidence_matrix(std::span<const Subspace> members,
                                    PointOrderRef order) {
  std::vector<IncidenceVector> rows;
  rows.reserve(members.size());
  for (const auto &a : members)
    rows.push_back(incidence_vector(a, *order));
  return IncidenceMatrixRec(std::move(order), std::move(rows));
}

IncidenceCache::IncidenceCache(PointOrderRef order) : order_(std::move(order)) {}

const IncidenceVector &IncidenceCache::get(const Subspace &a) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(a); it != entries_.end())
      return *it->second;
  }
  auto computed = std::make_unique<const IncidenceVector>(
      incidence_vector(a, *order_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(a, std::move(computed));
  return *it->second;
}

std::size_t IncidenceCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

} // namespace qx
