#include "qextremal/search.hpp"

#include "qextremal/errors.hpp"

#include <limits>
#include <unordered_map>

namespace qx {

namespace {

bool dimension_allowed(const FamilyKind &kind, std::size_t d) {
  switch (kind.tag()) {
  case FamilyKind::Tag::Oddtown:
  case FamilyKind::Tag::SkewPairs:
    return d % 2 == 1;
  case FamilyKind::Tag::ReverseOddtown:
    return d % 2 == 0 && d >= 2;
  case FamilyKind::Tag::FisherK:
    return d >= static_cast<std::size_t>(kind.k());
  }
  return false;
}

/// t with [t]_q == s, for s a count of points in an intersection.
std::size_t dim_from_point_count(std::size_t s, long long q) {
  std::size_t t = 0;
  QCount value = 0;
  while (value < s) {
    ++t;
    value = q_int(static_cast<unsigned>(t), static_cast<unsigned long long>(q));
  }
  if (value != s)
    throw InternalInconsistency("scalar product " + std::to_string(s) +
                                " is not a q-integer");
  return t;
}

std::vector<Family> seed_constructions(const FamilyKind &kind,
                                       const FieldRef &field, std::size_t n) {
  std::vector<Family> seeds;
  if (kind.tag() == FamilyKind::Tag::SkewPairs)
    return seeds;
  if (n >= 1)
    seeds.push_back(construct_extremal(Construction::F1, field, n));
  if (n % 2 == 1)
    seeds.push_back(construct_extremal(Construction::F2, field, n));
  else if (n >= 2)
    seeds.push_back(construct_extremal(Construction::F3, field, n));
  return seeds;
}

} // namespace

std::vector<Subspace> candidate_set(const FamilyKind &kind, const FieldRef &field,
                                    std::size_t n, std::size_t max_vertices) {
  QCount count = 0;
  for (std::size_t d = 0; d <= n; ++d)
    if (dimension_allowed(kind, d))
      count += q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(d),
                          static_cast<unsigned long long>(field->q()));
  if (count > max_vertices)
    throw TooLarge(count > QCount(std::numeric_limits<std::size_t>::max())
                       ? std::numeric_limits<std::size_t>::max()
                       : static_cast<std::size_t>(count),
                   max_vertices);
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::size_t d = 0; d <= n; ++d) {
    if (!dimension_allowed(kind, d))
      continue;
    auto stream = enumerate_subspaces(field, n, d);
    while (auto s = stream.next())
      out.push_back(std::move(*s));
  }
  return out;
}

CompatGraph build_compat_graph(const FamilyKind &kind, const FieldRef &field,
                               std::size_t n, const BuildOptions &opts) {
  CompatGraph g{kind, field, n, candidate_set(kind, field, n, opts.max_vertices),
                BitGraph()};
  const std::size_t size = g.vertices.size();
  g.graph = BitGraph(size);
  if (opts.method == EdgeMethod::Intersect) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        if (kind.pair_ok(intersect(g.vertices[i], g.vertices[j]).dim()))
          g.graph.add_edge(i, j);
  } else {
    IncidenceCache cache(std::make_shared<const PointOrder>(field, n));
    for (std::size_t i = 0; i < size; ++i) {
      const auto &fi = cache.get(g.vertices[i]);
      for (std::size_t j = i + 1; j < size; ++j) {
        const auto s = scalar_product(fi, cache.get(g.vertices[j]));
        if (kind.pair_ok(dim_from_point_count(s, field->q())))
          g.graph.add_edge(i, j);
      }
    }
  }
  return g;
}

ExtremalReport search_extremal(const FamilyKind &kind, const FieldRef &field,
                               std::size_t n, const SearchConfig &cfg,
                               const BuildOptions &opts) {
  if (n < 1)
    throw OutOfRange("search needs n >= 1");
  const auto g = build_compat_graph(kind, field, n, opts);

  std::unordered_map<Subspace, std::size_t, SubspaceHash> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index.emplace(g.vertices[i], i);
  std::vector<std::size_t> seed;
  for (const auto &family : seed_constructions(kind, field, n)) {
    std::vector<std::size_t> ids;
    for (const auto &m : family.members()) {
      auto it = index.find(m);
      if (it == index.end())
        break;
      ids.push_back(it->second);
    }
    if (ids.size() == family.size() && ids.size() > seed.size() &&
        is_clique(g.graph, ids))
      seed = std::move(ids);
  }

  ExtremalReport report;
  report.kind = kind;
  report.q = field->q();
  report.n = n;
  report.bound = bound_for(kind, n, field->q());
  report.vertex_count = g.vertices.size();
  report.seed_size = seed.size();
  report.clique = max_clique(g.graph, cfg, seed);

  std::vector<Subspace> members;
  for (auto v : report.clique.witness)
    members.push_back(g.vertices[v]);
  report.witness = Family(field, n, std::move(members));
  const auto order = std::make_shared<const PointOrder>(field, n);
  report.point_order_hash = order->digest();
  report.verification = verify_family(report.witness, kind, order);

  const std::size_t found = report.clique.max_size;
  if (!report.verification.conditions_hold)
    throw InternalInconsistency("search witness fails the " + kind.name() +
                                " conditions: " +
                                report.verification.failure_detail.value_or(""));
  report.within_bound = QCount(found) <= report.bound.bound;
  const bool proven = report.bound.status == BoundStatus::Proven;
  if (proven && (!report.within_bound || !report.verification.witness_ok))
    throw InternalInconsistency("witness of size " + std::to_string(found) +
                                " violates the proven bound " +
                                to_decimal(report.bound.bound));
  if (report.bound.conjectured)
    report.within_conjecture = QCount(found) <= *report.bound.conjectured;

  const bool optimal = report.clique.proven_optimal;
  if (!proven) {
    report.outcome = std::string("open: no proven bound; reference ") +
                     (report.within_bound ? "holds" : "exceeded") +
                     (optimal ? "" : " (search incomplete)");
  } else if (report.within_conjecture.has_value()) {
    if (!*report.within_conjecture)
      report.outcome = "exceeds conjectured bound";
    else if (optimal)
      report.outcome = "consistent with conjecture";
    else
      report.outcome = "undecided: search incomplete below conjectured bound";
  } else if (optimal && QCount(found) == report.bound.bound) {
    report.outcome = "tight";
  } else {
    report.outcome = optimal ? "below bound" : "below bound (search incomplete)";
  }
  return report;
}

std::string to_string(Experiment e) {
  return e == Experiment::Conjecture ? "conjecture" : "explore_even_q";
}

BatchReport run_experiment(Experiment which, std::span<const GridPoint> grid,
                           const SearchConfig &cfg,
                           std::span<const FamilyKind> kinds,
                           const BuildOptions &opts) {
  BatchReport batch{to_string(which), {}};
  std::vector<FamilyKind> selected(kinds.begin(), kinds.end());
  if (selected.empty()) {
    if (which == Experiment::Conjecture)
      selected = {FamilyKind::reverse_oddtown()};
    else
      selected = {FamilyKind::oddtown(), FamilyKind::reverse_oddtown()};
  }
  for (const auto &point : grid) {
    for (const auto &kind : selected) {
      BatchEntry entry{point, kind.name(), std::nullopt, std::nullopt};
      try {
        if (which == Experiment::Conjecture &&
            (point.q % 2 == 0 || point.n % 2 == 1))
          throw OutOfRange("the reverse oddtown conjecture concerns n even "
                           "and q odd");
        if (which == Experiment::ExploreEvenQ && point.q % 2 == 1)
          throw OutOfRange("explore_even_q needs q a power of two");
        entry.report = search_extremal(kind, make_field(point.q), point.n, cfg,
                                       opts);
      } catch (const InternalInconsistency &) {
        throw;
      } catch (const Error &e) {
        entry.error = e.what();
      }
      batch.entries.push_back(std::move(entry));
    }
  }
  return batch;
}

} // namespace qx
