#ifndef QEXTREMAL_FAMILY_HPP
#define QEXTREMAL_FAMILY_HPP

#include "qextremal/incidence.hpp"
#include "qextremal/qcount.hpp"
#include "qextremal/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qx {

/// Which intersection theorem a family is checked against.
class FamilyKind {
public:
  enum class Tag { FisherK, Oddtown, ReverseOddtown, SkewPairs };

  /// Pairwise intersections of dimension exactly k, k >= 1.
  static FamilyKind fisher(int k);
  /// Exploration mode that also accepts k = 0, outside the theorem.
  static FamilyKind fisher_relaxed(int k);
  static FamilyKind oddtown() { return FamilyKind(Tag::Oddtown, 0, false); }
  static FamilyKind reverse_oddtown() {
    return FamilyKind(Tag::ReverseOddtown, 0, false);
  }
  static FamilyKind skew_pairs() { return FamilyKind(Tag::SkewPairs, 0, false); }

  Tag tag() const noexcept { return tag_; }
  int k() const noexcept { return k_; }
  bool relaxed() const noexcept { return relaxed_; }
  /// "fisher", "oddtown", "reverse-oddtown" or "skew".
  std::string name() const;

  /// Member-level condition (dimension parity); always true for Fisher.
  bool member_ok(std::size_t dim) const;
  /// Pairwise condition on dim(A ∩ B) for A != B.
  bool pair_ok(std::size_t meet_dim) const;

  friend bool operator==(const FamilyKind &, const FamilyKind &) = default;

private:
  FamilyKind(Tag tag, int k, bool relaxed) : tag_(tag), k_(k), relaxed_(relaxed) {}

  Tag tag_;
  int k_;
  bool relaxed_;
};

/// Ordered, pairwise-distinct subspaces of one F_q^n.
class Family {
public:
  Family(FieldRef field, std::size_t n);
  /// Throws AmbientMismatch or DuplicateMember.
  Family(FieldRef field, std::size_t n, std::vector<Subspace> members);

  const FieldRef &field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Subspace> &members() const noexcept { return members_; }
  const Subspace &operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const Family &a, const Family &b) {
    return a.field_->q() == b.field_->q() && a.n_ == b.n_ &&
           a.members_ == b.members_;
  }

private:
  FieldRef field_;
  std::size_t n_;
  std::vector<Subspace> members_;
};

/// Paired sequences (A_i, B_i). Distinctness is enforced within the A
/// sequence and within the B sequence; A_i = B_j is allowed.
class SkewFamily {
public:
  SkewFamily(FieldRef field, std::size_t n,
             std::vector<std::pair<Subspace, Subspace>> pairs);

  const FieldRef &field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<Subspace, Subspace>> &pairs() const noexcept {
    return pairs_;
  }

private:
  FieldRef field_;
  std::size_t n_;
  std::vector<std::pair<Subspace, Subspace>> pairs_;
};

enum class Construction { F1, F2, F3 };

/// F1: all lines. F2 (n odd): all hyperplanes. F3 (n even): all
/// (n-2)-subspaces of span(e_1..e_{n-1}). Throws ParityMismatch.
Family construct_extremal(Construction which, FieldRef field, std::size_t n);

struct ConditionResult {
  bool holds = true;
  std::optional<std::string> failure_detail;
  /// First violating pair (i, j), i < j, or (i, i) for a member violation.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// Member conditions first in index order, then pairs in lexicographic (i, j)
/// order. A SkewPairs kind treats each member as the pair (A_i, A_i).
ConditionResult check_conditions(const Family &f, const FamilyKind &kind);
ConditionResult check_conditions(const SkewFamily &f);

enum class BoundStatus { Proven, Conjectured, Open };
std::string to_string(BoundStatus s);

struct BoundInfo {
  BoundStatus status = BoundStatus::Proven;
  /// The proven bound, or the odd-q formula as a reference when Open.
  QCount bound;
  /// [n-1]_q for reverse oddtown with n even and q odd.
  std::optional<QCount> conjectured;

  /// Throws EvenQUnproven unless the bound is proven.
  const QCount &require_proven() const;
};

BoundInfo bound_for(const FamilyKind &kind, std::size_t n, long long q);

struct VerificationReport {
  FamilyKind kind = FamilyKind::oddtown();
  bool conditions_hold = false;
  std::size_t size = 0;
  BoundInfo bound;
  bool bound_satisfied = false;
  /// Rank over Q of the incidence matrix (Fisher).
  std::optional<std::size_t> rank_witness;
  /// F_2 rank of the parity Gram matrix (oddtown, skew) or of M (reverse).
  std::optional<std::size_t> parity_witness;
  /// Gram matrix mod 2 has the shape the proof predicts.
  std::optional<bool> gram_structure_ok;
  /// Every row of M has even weight (reverse oddtown).
  std::optional<bool> even_row_weights;
  /// Proof-level witnesses agree with the theorem (true when no theorem
  /// applies).
  bool witness_ok = true;
  std::optional<std::string> failure_detail;

  /// Conditions hold, a proven bound is respected, witnesses agree.
  bool satisfied() const noexcept;
};

VerificationReport verify_family(const Family &f, const FamilyKind &kind,
                                 const PointOrderRef &order = nullptr);
VerificationReport verify_skew_family(const SkewFamily &f,
                                      const PointOrderRef &order = nullptr);

} // namespace qx

#endif // QEXTREMAL_FAMILY_HPP
