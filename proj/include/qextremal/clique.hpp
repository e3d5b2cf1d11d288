#ifndef QEXTREMAL_CLIQUE_HPP
#define QEXTREMAL_CLIQUE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qx {

/// Undirected simple graph with bit-packed adjacency rows.
class BitGraph {
public:
  explicit BitGraph(std::size_t n = 0);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {adj_.data() + u * words_, words_};
  }
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  /// Graph on the same vertices relabelled so that old vertex perm[i]
  /// becomes vertex i.
  BitGraph permuted(std::span<const std::size_t> perm) const;

private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

struct SearchConfig {
  std::chrono::milliseconds time_limit{std::chrono::minutes(10)};
  unsigned worker_count = 1;
  /// With one worker, report the lexicographically smallest maximum clique.
  bool deterministic_witness = true;
};

struct CliqueResult {
  std::size_t max_size = 0;
  /// Sorted vertex indices of one clique of size max_size.
  std::vector<std::size_t> witness;
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

bool is_clique(const BitGraph &g, std::span<const std::size_t> vertices);

/// Maximum clique by branch and bound with greedy-colouring bounds. A valid
/// clique passed as seed becomes the initial incumbent.
CliqueResult max_clique(const BitGraph &g, const SearchConfig &cfg,
                        std::span<const std::size_t> seed = {});

} // namespace qx

#endif // QEXTREMAL_CLIQUE_HPP
