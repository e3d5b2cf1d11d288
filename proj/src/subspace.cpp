#include "qextremal/subspace.hpp"

#include "qextremal/errors.hpp"

#include <cstdio>
#include <sstream>

namespace qx {

Subspace::Subspace(FieldRef field, std::size_t n)
    : basis_(std::move(field), 0, n) {}

Subspace::Subspace(MatrixFq basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::canonicalize(const MatrixFq &rows) {
  auto r = rref_rank_fq(rows);
  r.reduced.truncate_rows(r.rank);
  return Subspace(std::move(r.reduced), std::move(r.pivots));
}

std::optional<Subspace> Subspace::from_rref(const MatrixFq &rows) {
  auto r = rref_rank_fq(rows);
  if (r.rank != rows.rows() || !(r.reduced == rows))
    return std::nullopt;
  return Subspace(std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::whole(FieldRef field, std::size_t n) {
  MatrixFq id(field, n, n);
  std::vector<std::size_t> pivots(n);
  for (std::size_t i = 0; i < n; ++i) {
    id.at(i, i) = 1;
    pivots[i] = i;
  }
  return Subspace(std::move(id), std::move(pivots));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (v.size() != ambient())
    throw AmbientMismatch("vector length " + std::to_string(v.size()) +
                          " != ambient dimension " +
                          std::to_string(ambient()));
  const FieldSpec &f = *field();
  std::vector<Elem> w(v.begin(), v.end());
  // Reduce against the RREF rows; membership iff the residue vanishes.
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0)
      continue;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j)
      w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
  }
  for (Elem x : w)
    if (x != 0)
      return false;
  return true;
}

bool Subspace::contains(const Subspace &other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis().row(i)))
      return false;
  return true;
}

std::string Subspace::to_string() const {
  std::ostringstream out;
  out << dim() << ' ' << ambient() << '\n';
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < ambient(); ++j)
      out << (j ? " " : "") << static_cast<int>(basis_.at(i, j));
    out << '\n';
  }
  return out.str();
}

std::size_t Subspace::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(field()->q()));
  mix(ambient());
  mix(dim());
  for (Elem x : basis_.entries())
    mix(x);
  return static_cast<std::size_t>(h);
}

void require_same_ambient(const Subspace &a, const Subspace &b) {
  if (a.field()->q() != b.field()->q() || a.ambient() != b.ambient())
    throw AmbientMismatch("subspaces of F_" + std::to_string(a.field()->q()) +
                          "^" + std::to_string(a.ambient()) + " and F_" +
                          std::to_string(b.field()->q()) + "^" +
                          std::to_string(b.ambient()));
}

Subspace intersect(const Subspace &a, const Subspace &b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient();
  // Rows (a_i | a_i) and (b_j | 0). After elimination, the rows whose left
  // half vanishes carry a basis of A ∩ B in their right half.
  MatrixFq stacked(a.field(), 0, 2 * n);
  std::vector<Elem> row(2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j)
      row[j] = row[n + j] = a.basis().at(i, j);
    stacked.append_row(row);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = b.basis().at(i, j);
      row[n + j] = 0;
    }
    stacked.append_row(row);
  }
  const auto r = rref_rank_fq(stacked);
  MatrixFq meet(a.field(), 0, n);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] < n)
      continue;
    meet.append_row(r.reduced.row(i).subspan(n, n));
  }
  return Subspace::canonicalize(meet);
}

Subspace sum(const Subspace &a, const Subspace &b) {
  require_same_ambient(a, b);
  MatrixFq stacked(a.field(), 0, a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    stacked.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i)
    stacked.append_row(b.basis().row(i));
  return Subspace::canonicalize(stacked);
}

std::size_t intersection_dim(const Subspace &a, const Subspace &b) {
  return a.dim() + b.dim() - sum(a, b).dim();
}

ProjectivePoint normalize_point(const FieldSpec &field,
                                std::span<const Elem> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0)
    ++lead;
  if (lead == v.size())
    throw OutOfRange("the zero vector is not a projective point");
  const Elem scale = field.inv(v[lead]);
  ProjectivePoint p;
  p.coords.reserve(v.size());
  for (Elem x : v)
    p.coords.push_back(field.mul(x, scale));
  return p;
}

bool contains_point(const Subspace &a, const ProjectivePoint &v) {
  return a.contains_vector(v.coords);
}

PointOrder::PointOrder(FieldRef field, std::size_t n)
    : field_(std::move(field)), n_(n) {
  const int q = field_->q();
  // Leading 1 at position lead, zeros before it, anything after. Iterating
  // lead from the right yields lexicographic order directly.
  for (std::size_t back = 0; back < n_; ++back) {
    const std::size_t lead = n_ - 1 - back;
    const std::size_t tail = n_ - 1 - lead;
    std::vector<Elem> coords(n_, 0);
    coords[lead] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < tail; ++i)
      count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      for (std::size_t i = 0; i < tail; ++i) {
        coords[n_ - 1 - i] = static_cast<Elem>(x % q);
        x /= q;
      }
      index_.emplace(key(coords), points_.size());
      points_.push_back(ProjectivePoint{coords});
    }
  }
}

std::uint64_t PointOrder::key(std::span<const Elem> coords) const {
  std::uint64_t k = 0;
  for (Elem x : coords)
    k = k * static_cast<std::uint64_t>(field_->q()) + x;
  return k;
}

std::optional<std::size_t> PointOrder::index_of(std::span<const Elem> v) const {
  if (v.size() != n_)
    throw AmbientMismatch("point length mismatch");
  bool nonzero = false;
  for (Elem x : v)
    nonzero = nonzero || x != 0;
  if (!nonzero)
    return std::nullopt;
  const auto p = normalize_point(*field_, v);
  const auto it = index_.find(key(p.coords));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::string PointOrder::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(field_->q()));
  mix(n_);
  for (const auto &p : points_)
    for (Elem x : p.coords)
      mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PointOrder enumerate_points(FieldRef field, std::size_t n) {
  if (n < 1)
    throw OutOfRange("enumerate_points needs n >= 1");
  return PointOrder(std::move(field), n);
}

SubspaceStream::SubspaceStream(FieldRef field, std::size_t n, std::size_t k)
    : field_(std::move(field)), n_(n), k_(k) {
  if (k_ > n_)
    throw OutOfRange("subspace dimension " + std::to_string(k_) +
                     " exceeds ambient " + std::to_string(n_));
  pivots_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i)
    pivots_[i] = i;
  reset_free();
}

void SubspaceStream::reset_free() {
  free_cells_.clear();
  for (std::size_t i = 0; i < k_; ++i) {
    std::size_t next_pivot = i + 1;
    for (std::size_t j = pivots_[i] + 1; j < n_; ++j) {
      if (next_pivot < k_ && pivots_[next_pivot] == j) {
        ++next_pivot;
        continue;
      }
      free_cells_.emplace_back(i, j);
    }
  }
  free_values_.assign(free_cells_.size(), 0);
}

bool SubspaceStream::advance_pattern() {
  // Next k-subset of {0..n-1} in lexicographic order.
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (pivots_[i] < n_ - k_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < k_; ++j)
        pivots_[j] = pivots_[j - 1] + 1;
      reset_free();
      return true;
    }
  }
  return false;
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_)
    return std::nullopt;
  if (started_) {
    // Odometer over free entries, last cell least significant.
    const Elem q = static_cast<Elem>(field_->q() - 1);
    std::size_t i = free_values_.size();
    bool carried_out = true;
    while (i > 0) {
      --i;
      if (free_values_[i] < q) {
        ++free_values_[i];
        for (std::size_t j = i + 1; j < free_values_.size(); ++j)
          free_values_[j] = 0;
        carried_out = false;
        break;
      }
    }
    if (carried_out && !advance_pattern()) {
      done_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  MatrixFq basis(field_, k_, n_);
  for (std::size_t i = 0; i < k_; ++i)
    basis.at(i, pivots_[i]) = 1;
  for (std::size_t c = 0; c < free_cells_.size(); ++c)
    basis.at(free_cells_[c].first, free_cells_[c].second) = free_values_[c];
  return Subspace(std::move(basis), pivots_);
}

SubspaceStream enumerate_subspaces(FieldRef field, std::size_t n,
                                   std::size_t k) {
  return SubspaceStream(std::move(field), n, k);
}

std::vector<Subspace> collect_subspaces(FieldRef field, std::size_t n,
                                        std::size_t k) {
  std::vector<Subspace> out;
  auto stream = enumerate_subspaces(std::move(field), n, k);
  while (auto s = stream.next())
    out.push_back(std::move(*s));
  return out;
}

std::vector<Subspace> all_subspaces(FieldRef field, std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = collect_subspaces(field, n, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

} // namespace qx
