#ifndef QEXTREMAL_SUBSPACE_HPP
#define QEXTREMAL_SUBSPACE_HPP

#include "qextremal/field.hpp"
#include "qextremal/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace qx {

/// A subspace of F_q^n held by its reduced row echelon basis. Equal row
/// spaces have identical bases, so equality and hashing are bytewise.
class Subspace {
public:
  /// The zero subspace of F_q^n.
  Subspace(FieldRef field, std::size_t n);

  /// Row space of the given rows (RREF, zero rows dropped).
  static Subspace canonicalize(const MatrixFq &rows);
  /// Builds a subspace from rows that must already be in RREF with full
  /// rank. Returns nullopt otherwise.
  static std::optional<Subspace> from_rref(const MatrixFq &rows);
  static Subspace whole(FieldRef field, std::size_t n);

  const FieldRef &field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const MatrixFq &basis() const noexcept { return basis_; }
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  /// True iff v (length n, any nonzero scaling) lies in the subspace.
  bool contains_vector(std::span<const Elem> v) const;
  bool contains(const Subspace &other) const;

  /// "k n" followed by k rows of codes.
  std::string to_string() const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.basis_ == b.basis_;
  }
  friend auto operator<=>(const Subspace &a, const Subspace &b) {
    if (auto c = a.dim() <=> b.dim(); c != 0)
      return c;
    return a.basis_.entries() <=> b.basis_.entries();
  }

  std::size_t hash() const noexcept;

private:
  friend class SubspaceStream;
  explicit Subspace(MatrixFq basis, std::vector<std::size_t> pivots);

  MatrixFq basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace &s) const noexcept { return s.hash(); }
};

/// Throws AmbientMismatch unless a and b live in the same F_q^n.
void require_same_ambient(const Subspace &a, const Subspace &b);

/// A ∩ B, computed from the kernel of the stacked system (Zassenhaus).
Subspace intersect(const Subspace &a, const Subspace &b);
/// A + B.
Subspace sum(const Subspace &a, const Subspace &b);
/// dim(A ∩ B) from dim A + dim B - rank of the stacked bases.
std::size_t intersection_dim(const Subspace &a, const Subspace &b);

/// Canonical spanning vector of a 1-dimensional subspace: first nonzero
/// coordinate is 1.
struct ProjectivePoint {
  std::vector<Elem> coords;

  friend bool operator==(const ProjectivePoint &,
                         const ProjectivePoint &) = default;
  friend auto operator<=>(const ProjectivePoint &,
                          const ProjectivePoint &) = default;
};

/// Scales a nonzero vector so its first nonzero entry is 1.
/// Throws OutOfRange for the zero vector.
ProjectivePoint normalize_point(const FieldSpec &field,
                                std::span<const Elem> v);

bool contains_point(const Subspace &a, const ProjectivePoint &v);

/// All [n]_q projective points of F_q^n in lexicographic code order, with the
/// inverse lookup.
class PointOrder {
public:
  PointOrder(FieldRef field, std::size_t n);

  const FieldRef &field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const ProjectivePoint &operator[](std::size_t i) const { return points_[i]; }
  const std::vector<ProjectivePoint> &points() const noexcept {
    return points_;
  }
  /// Index of the point spanned by v (any nonzero multiple).
  std::optional<std::size_t> index_of(std::span<const Elem> v) const;

  /// Stable FNV-1a digest of (q, n, points), hex encoded.
  std::string digest() const;

  friend bool operator==(const PointOrder &a, const PointOrder &b) {
    return a.field_->q() == b.field_->q() && a.n_ == b.n_;
  }

private:
  std::uint64_t key(std::span<const Elem> coords) const;

  FieldRef field_;
  std::size_t n_;
  std::vector<ProjectivePoint> points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

PointOrder enumerate_points(FieldRef field, std::size_t n);

/// Streams every k-dimensional subspace of F_q^n exactly once. Pivot
/// patterns are visited in lexicographic order; within a pattern the free
/// entries (row-major) count up lexicographically.
class SubspaceStream {
public:
  SubspaceStream(FieldRef field, std::size_t n, std::size_t k);

  std::optional<Subspace> next();

private:
  bool advance_pattern();
  void reset_free();

  FieldRef field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_cells_;
  std::vector<Elem> free_values_;
  bool done_ = false;
  bool started_ = false;
};

SubspaceStream enumerate_subspaces(FieldRef field, std::size_t n,
                                   std::size_t k);

/// Materializes a stream.
std::vector<Subspace> collect_subspaces(FieldRef field, std::size_t n,
                                        std::size_t k);
/// Every subspace of F_q^n, by increasing dimension.
std::vector<Subspace> all_subspaces(FieldRef field, std::size_t n);

} // namespace qx

#endif // QEXTREMAL_SUBSPACE_HPP
