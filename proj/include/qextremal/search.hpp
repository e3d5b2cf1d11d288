#ifndef QEXTREMAL_SEARCH_HPP
#define QEXTREMAL_SEARCH_HPP

#include "qextremal/clique.hpp"
#include "qextremal/family.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qx {

enum class EdgeMethod {
  /// dim(A ∩ B) from subspace intersection.
  Intersect,
  /// dim(A ∩ B) recovered from <f_A, f_B> = [dim(A ∩ B)]_q.
  ScalarProduct,
};

struct BuildOptions {
  std::size_t max_vertices = 20000;
  EdgeMethod method = EdgeMethod::Intersect;
};

/// Candidate subspaces of one family kind, with an edge wherever a pair
/// satisfies the kind's pairwise condition.
struct CompatGraph {
  FamilyKind kind;
  FieldRef field;
  std::size_t n = 0;
  std::vector<Subspace> vertices;
  BitGraph graph;
};

/// Oddtown: odd dimensions. Reverse oddtown: even dimensions >= 2. FisherK:
/// dimensions >= k. Enumeration order: by dimension, then stream order.
/// Throws TooLarge before materializing when the count exceeds max_vertices.
std::vector<Subspace> candidate_set(const FamilyKind &kind, const FieldRef &field,
                                    std::size_t n, std::size_t max_vertices);

CompatGraph build_compat_graph(const FamilyKind &kind, const FieldRef &field,
                               std::size_t n, const BuildOptions &opts = {});

struct ExtremalReport {
  FamilyKind kind = FamilyKind::oddtown();
  long long q = 0;
  std::size_t n = 0;
  BoundInfo bound;
  std::size_t vertex_count = 0;
  std::size_t seed_size = 0;
  CliqueResult clique;
  Family witness{nullptr, 0};
  VerificationReport verification;
  std::string point_order_hash;
  /// max_size <= bound (for Open status, against the reference value).
  bool within_bound = true;
  /// max_size <= conjectured bound, when one is attached.
  std::optional<bool> within_conjecture;
  /// Human-readable summary: "tight", "below bound", "consistent with
  /// conjecture", "exceeds conjectured bound", "open: ...".
  std::string outcome;
};

/// Builds the graph, seeds the clique search with the known constructions,
/// verifies the witness. Throws InternalInconsistency if the witness breaks a
/// proven bound or fails verification.
ExtremalReport search_extremal(const FamilyKind &kind, const FieldRef &field,
                               std::size_t n, const SearchConfig &cfg,
                               const BuildOptions &opts = {});

enum class Experiment { Conjecture, ExploreEvenQ };

struct GridPoint {
  std::size_t n = 0;
  long long q = 0;
};

struct BatchEntry {
  GridPoint point;
  std::string kind;
  std::optional<ExtremalReport> report;
  std::optional<std::string> error;
};

struct BatchReport {
  std::string name;
  std::vector<BatchEntry> entries;
};

/// Conjecture: reverse oddtown at each (n even, q odd) point.
/// ExploreEvenQ: the given kinds (default oddtown and reverse oddtown) at
/// each point with q a power of two. Per-instance failures become error
/// entries and the batch continues.
BatchReport run_experiment(Experiment which, std::span<const GridPoint> grid,
                           const SearchConfig &cfg,
                           std::span<const FamilyKind> kinds = {},
                           const BuildOptions &opts = {});

std::string to_string(Experiment e);

} // namespace qx

#endif // QEXTREMAL_SEARCH_HPP
