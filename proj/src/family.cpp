#include "qextremal/family.hpp"

#include "qextremal/errors.hpp"

#include <unordered_map>

namespace qx {

FamilyKind FamilyKind::fisher(int k) {
  if (k < 1)
    throw OutOfRange("FisherK needs k >= 1, got " + std::to_string(k));
  return FamilyKind(Tag::FisherK, k, false);
}

FamilyKind FamilyKind::fisher_relaxed(int k) {
  if (k < 0)
    throw OutOfRange("FisherK needs k >= 0, got " + std::to_string(k));
  return FamilyKind(Tag::FisherK, k, true);
}

std::string FamilyKind::name() const {
  switch (tag_) {
  case Tag::FisherK:
    return "fisher";
  case Tag::Oddtown:
    return "oddtown";
  case Tag::ReverseOddtown:
    return "reverse-oddtown";
  case Tag::SkewPairs:
    return "skew";
  }
  return "unknown";
}

bool FamilyKind::member_ok(std::size_t dim) const {
  switch (tag_) {
  case Tag::Oddtown:
    return dim % 2 == 1;
  case Tag::ReverseOddtown:
    return dim % 2 == 0;
  case Tag::SkewPairs: // the pair (A, A) meets in dim A, which must be odd
    return dim % 2 == 1;
  case Tag::FisherK:
    return true;
  }
  return false;
}

bool FamilyKind::pair_ok(std::size_t meet_dim) const {
  switch (tag_) {
  case Tag::FisherK:
    return meet_dim == static_cast<std::size_t>(k_);
  case Tag::Oddtown:
  case Tag::SkewPairs:
    return meet_dim % 2 == 0;
  case Tag::ReverseOddtown:
    return meet_dim % 2 == 1;
  }
  return false;
}

namespace {

template <class Range>
void require_distinct(const Range &members) {
  std::unordered_map<Subspace, std::size_t, SubspaceHash> seen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto [it, inserted] = seen.try_emplace(members[i], i);
    if (!inserted)
      throw DuplicateMember(it->second, i);
  }
}

void require_ambient(const Subspace &s, const FieldRef &field, std::size_t n) {
  if (s.field()->q() != field->q() || s.ambient() != n)
    throw AmbientMismatch("family member outside F_" +
                          std::to_string(field->q()) + "^" + std::to_string(n));
}

std::string dim_text(std::size_t d) { return std::to_string(d); }

PointOrderRef order_for(const FieldRef &field, std::size_t n,
                        const PointOrderRef &given) {
  if (given) {
    if (given->field()->q() != field->q() || given->ambient() != n)
      throw AmbientMismatch("point order does not match the family");
    return given;
  }
  return std::make_shared<const PointOrder>(field, n);
}

} // namespace

Family::Family(FieldRef field, std::size_t n) : field_(std::move(field)), n_(n) {}

Family::Family(FieldRef field, std::size_t n, std::vector<Subspace> members)
    : field_(std::move(field)), n_(n), members_(std::move(members)) {
  for (const auto &m : members_)
    require_ambient(m, field_, n_);
  require_distinct(members_);
}

SkewFamily::SkewFamily(FieldRef field, std::size_t n,
                       std::vector<std::pair<Subspace, Subspace>> pairs)
    : field_(std::move(field)), n_(n), pairs_(std::move(pairs)) {
  std::vector<Subspace> as;
  std::vector<Subspace> bs;
  for (const auto &[a, b] : pairs_) {
    require_ambient(a, field_, n_);
    require_ambient(b, field_, n_);
    as.push_back(a);
    bs.push_back(b);
  }
  require_distinct(as);
  require_distinct(bs);
}

Family construct_extremal(Construction which, FieldRef field, std::size_t n) {
  switch (which) {
  case Construction::F1:
    if (n < 1)
      throw OutOfRange("F1 needs n >= 1");
    return Family(field, n, collect_subspaces(field, n, 1));
  case Construction::F2:
    if (n % 2 == 0)
      throw ParityMismatch("F2 needs n odd, got n = " + std::to_string(n));
    return Family(field, n, collect_subspaces(field, n, n - 1));
  case Construction::F3: {
    if (n % 2 != 0 || n < 2)
      throw ParityMismatch("F3 needs n even and >= 2, got n = " +
                           std::to_string(n));
    // (n-2)-subspaces of F_q^(n-1), embedded with a zero last coordinate.
    std::vector<Subspace> members;
    auto stream = enumerate_subspaces(field, n - 1, n - 2);
    while (auto s = stream.next()) {
      MatrixFq rows(field, 0, n);
      std::vector<Elem> row(n, 0);
      for (std::size_t i = 0; i < s->dim(); ++i) {
        const auto src = s->basis().row(i);
        std::copy(src.begin(), src.end(), row.begin());
        rows.append_row(row);
      }
      members.push_back(Subspace::canonicalize(rows));
    }
    return Family(field, n, std::move(members));
  }
  }
  throw OutOfRange("unknown construction");
}

ConditionResult check_conditions(const Family &f, const FamilyKind &kind) {
  if (kind.tag() == FamilyKind::Tag::SkewPairs) {
    std::vector<std::pair<Subspace, Subspace>> pairs;
    for (const auto &m : f.members())
      pairs.emplace_back(m, m);
    return check_conditions(SkewFamily(f.field(), f.ambient(), std::move(pairs)));
  }
  ConditionResult result;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!kind.member_ok(f[i].dim())) {
      result.holds = false;
      result.failing_pair = std::pair{i, i};
      result.failure_detail = "member " + std::to_string(i) + " has dimension " +
                              dim_text(f[i].dim());
      return result;
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const std::size_t d = intersect(f[i], f[j]).dim();
      if (!kind.pair_ok(d)) {
        result.holds = false;
        result.failing_pair = std::pair{i, j};
        result.failure_detail = "members " + std::to_string(i) + " and " +
                                std::to_string(j) +
                                " intersect in dimension " + dim_text(d);
        return result;
      }
    }
  return result;
}

ConditionResult check_conditions(const SkewFamily &f) {
  ConditionResult result;
  const auto &pairs = f.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const std::size_t d = intersect(pairs[i].first, pairs[j].second).dim();
      const bool ok = (i == j) ? d % 2 == 1 : d % 2 == 0;
      if (!ok) {
        result.holds = false;
        result.failing_pair = std::pair{i, j};
        result.failure_detail = "A_" + std::to_string(i) + " and B_" +
                                std::to_string(j) + " intersect in dimension " +
                                dim_text(d);
        return result;
      }
    }
  return result;
}

std::string to_string(BoundStatus s) {
  switch (s) {
  case BoundStatus::Proven:
    return "proven";
  case BoundStatus::Conjectured:
    return "conjectured";
  case BoundStatus::Open:
    return "open";
  }
  return "open";
}

const QCount &BoundInfo::require_proven() const {
  if (status != BoundStatus::Proven)
    throw EvenQUnproven("no proven bound: status is " + to_string(status));
  return bound;
}

BoundInfo bound_for(const FamilyKind &kind, std::size_t n, long long q) {
  if (q < 2)
    throw OutOfRange("bound_for needs q >= 2");
  const unsigned nn = static_cast<unsigned>(n);
  const auto uq = static_cast<unsigned long long>(q);
  const bool odd_q = q % 2 == 1;
  BoundInfo info;
  switch (kind.tag()) {
  case FamilyKind::Tag::FisherK:
    info.bound = q_int(nn, uq);
    info.status = kind.k() >= 1 ? BoundStatus::Proven : BoundStatus::Open;
    break;
  case FamilyKind::Tag::Oddtown:
  case FamilyKind::Tag::SkewPairs:
    info.bound = q_int(nn, uq);
    info.status = odd_q ? BoundStatus::Proven : BoundStatus::Open;
    break;
  case FamilyKind::Tag::ReverseOddtown:
    info.bound = q_int(nn, uq);
    if (n % 2 == 0) {
      info.bound -= 1;
      if (odd_q && n >= 2)
        info.conjectured = q_int(nn - 1, uq);
    }
    info.status = odd_q ? BoundStatus::Proven : BoundStatus::Open;
    break;
  }
  return info;
}

bool VerificationReport::satisfied() const noexcept {
  if (!conditions_hold || !witness_ok)
    return false;
  return bound.status != BoundStatus::Proven || bound_satisfied;
}

VerificationReport verify_family(const Family &f, const FamilyKind &kind,
                                 const PointOrderRef &order) {
  if (kind.tag() == FamilyKind::Tag::SkewPairs) {
    std::vector<std::pair<Subspace, Subspace>> pairs;
    for (const auto &m : f.members())
      pairs.emplace_back(m, m);
    return verify_skew_family(SkewFamily(f.field(), f.ambient(), std::move(pairs)),
                              order);
  }
  VerificationReport report;
  report.kind = kind;
  report.size = f.size();
  report.bound = bound_for(kind, f.ambient(), f.field()->q());
  report.bound_satisfied = QCount(f.size()) <= report.bound.bound;

  const auto cond = check_conditions(f, kind);
  report.conditions_hold = cond.holds;
  report.failure_detail = cond.failure_detail;
  if (!cond.holds || f.size() == 0)
    return report;

  const auto points = order_for(f.field(), f.ambient(), order);
  const auto m = incidence_matrix(f.members(), points);
  const bool proven = report.bound.status == BoundStatus::Proven;
  const std::size_t size = f.size();

  switch (kind.tag()) {
  case FamilyKind::Tag::FisherK:
    // The incidence vectors are linearly independent over Q.
    report.rank_witness = exact_rank_int(m.as_int());
    report.witness_ok = !proven || *report.rank_witness == size;
    break;
  case FamilyKind::Tag::Oddtown: {
    // Diagonal [odd]_q is odd and off-diagonal [even]_q is even for q odd.
    const auto parity = gram(m.as_int()).mod2();
    report.gram_structure_ok = parity == MatrixF2::identity(size);
    report.parity_witness = rank_f2(parity);
    report.witness_ok =
        !proven || (*report.gram_structure_ok && *report.parity_witness == size);
    break;
  }
  case FamilyKind::Tag::ReverseOddtown: {
    const auto parity = gram(m.as_int()).mod2();
    report.gram_structure_ok = parity == MatrixF2::ones_minus_identity(size);
    bool even = true;
    for (std::size_t i = 0; i < size; ++i)
      even = even && m.row(i).weight() % 2 == 0;
    report.even_row_weights = even;
    report.parity_witness = rank_f2(m.as_f2());
    const std::size_t lower = size % 2 == 0 ? size : size - 1;
    // rank(J - I) <= rank(M) <= [n]_q - 1 once every row has even weight.
    report.witness_ok =
        !proven || (*report.gram_structure_ok && even &&
                    *report.parity_witness >= lower &&
                    *report.parity_witness + 1 <= points->size());
    break;
  }
  case FamilyKind::Tag::SkewPairs:
    break;
  }
  if (!report.witness_ok && !report.failure_detail)
    report.failure_detail = "proof witness disagrees with the theorem";
  return report;
}

VerificationReport verify_skew_family(const SkewFamily &f,
                                      const PointOrderRef &order) {
  VerificationReport report;
  report.kind = FamilyKind::skew_pairs();
  report.size = f.size();
  report.bound = bound_for(report.kind, f.ambient(), f.field()->q());
  report.bound_satisfied = QCount(f.size()) <= report.bound.bound;

  const auto cond = check_conditions(f);
  report.conditions_hold = cond.holds;
  report.failure_detail = cond.failure_detail;
  if (!cond.holds || f.size() == 0)
    return report;

  const auto points = order_for(f.field(), f.ambient(), order);
  std::vector<IncidenceVector> as;
  std::vector<IncidenceVector> bs;
  for (const auto &[a, b] : f.pairs()) {
    as.push_back(incidence_vector(a, *points));
    bs.push_back(incidence_vector(b, *points));
  }
  const std::size_t size = f.size();
  MatrixF2 cross(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      cross.set(i, j, scalar_product(as[i], bs[j]) % 2 == 1);
  report.gram_structure_ok = cross == MatrixF2::identity(size);
  report.parity_witness = rank_f2(cross);
  const bool proven = report.bound.status == BoundStatus::Proven;
  report.witness_ok =
      !proven || (*report.gram_structure_ok && *report.parity_witness == size);
  if (!report.witness_ok && !report.failure_detail)
    report.failure_detail = "proof witness disagrees with the theorem";
  return report;
}

} // namespace qx
