#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "qextremal/errors.hpp"

#include <numeric>

using namespace qx;

namespace {

SearchConfig config(unsigned workers, bool deterministic = true) {
  SearchConfig cfg;
  cfg.worker_count = workers;
  cfg.deterministic_witness = deterministic;
  return cfg;
}

} // namespace

TEST_CASE("small graphs") {
  BitGraph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  auto r = max_clique(k3, config(1));
  CHECK(r.max_size == 3);
  CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.proven_optimal);

  r = max_clique(BitGraph(5), config(1));
  CHECK(r.max_size == 1);
  CHECK(r.witness == std::vector<std::size_t>{0});
  CHECK(r.proven_optimal);

  r = max_clique(BitGraph(0), config(1));
  CHECK(r.max_size == 0);
  CHECK(r.witness.empty());
  CHECK(r.proven_optimal);

  CHECK_THROWS_AS(max_clique(k3, config(0)), OutOfRange);
  CHECK_THROWS_AS(k3.add_edge(0, 3), OutOfRange);
}

TEST_CASE("bit graph basics") {
  BitGraph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  g.add_edge(5, 5);
  CHECK(g.adjacent(129, 0));
  CHECK_FALSE(g.adjacent(5, 5));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 2);
  CHECK(is_clique(g, std::vector<std::size_t>{64, 65}));
  CHECK_FALSE(is_clique(g, std::vector<std::size_t>{0, 64}));
  CHECK_FALSE(is_clique(g, std::vector<std::size_t>{0, 0}));
  CHECK_FALSE(is_clique(g, std::vector<std::size_t>{200}));
}

TEST_CASE("random graphs against exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 18;
    const double density = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto g = testing::random_graph(rng, n, density);
    const auto expected = testing::exhaustive_max_clique(g);
    CAPTURE(t);
    CAPTURE(n);

    const auto serial = max_clique(g, config(1));
    REQUIRE(serial.proven_optimal);
    REQUIRE(serial.max_size == expected.size());
    REQUIRE(serial.witness == expected); // deterministic: lexicographically smallest

    const auto parallel = max_clique(g, config(4, false));
    REQUIRE(parallel.proven_optimal);
    REQUIRE(parallel.max_size == expected.size());
    REQUIRE(is_clique(g, parallel.witness));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto shuffled = max_clique(g.permuted(perm), config(1));
    REQUIRE(shuffled.max_size == expected.size());
  }
}

TEST_CASE("larger random graphs agree across worker counts") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    const auto g = testing::random_graph(rng, 90, 0.5);
    const auto a = max_clique(g, config(1));
    const auto b = max_clique(g, config(4, false));
    REQUIRE(a.max_size == b.max_size);
    REQUIRE(is_clique(g, a.witness));
    REQUIRE(is_clique(g, b.witness));
  }
}

TEST_CASE("seed is a lower bound and invalid seeds are ignored") {
  std::mt19937_64 rng(5);
  const auto g = testing::random_graph(rng, 40, 0.6);
  const auto plain = max_clique(g, config(1));
  const auto seeded = max_clique(g, config(1), plain.witness);
  CHECK(seeded.max_size == plain.max_size);
  CHECK(seeded.witness == plain.witness);
  const std::vector<std::size_t> bogus{0, 0};
  CHECK(max_clique(g, config(1), bogus).max_size == plain.max_size);
}

TEST_CASE("a zero time limit keeps a valid witness") {
  std::mt19937_64 rng(17);
  const auto g = testing::random_graph(rng, 200, 0.9);
  SearchConfig cfg = config(1);
  cfg.time_limit = std::chrono::milliseconds(0);
  const auto r = max_clique(g, cfg);
  CHECK_FALSE(r.proven_optimal);
  CHECK(r.max_size >= 1);
  CHECK(r.witness.size() == r.max_size);
  CHECK(is_clique(g, r.witness));
}
