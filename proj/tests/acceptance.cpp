// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "test_support.hpp"

#include "qextremal/errors.hpp"
#include "qextremal/family_io.hpp"
#include "qextremal/incidence.hpp"
#include "qextremal/qcount.hpp"
#include "qextremal/search.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <sys/wait.h>

using namespace qx;

namespace {

/// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string &what) {
    if (!ok)
      failures.push_back(what);
  }
};

long long power_sum(unsigned d, long long q) {
  long long s = 0;
  long long p = 1;
  for (unsigned i = 0; i < d; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

SearchConfig budget(std::chrono::milliseconds limit) {
  SearchConfig cfg;
  cfg.time_limit = limit;
  return cfg;
}

void counting(Check &c) {
  for (int q : {2, 3, 4, 5}) {
    const auto f = make_field(q);
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        std::set<std::string> distinct;
        auto stream = enumerate_subspaces(f, n, k);
        while (auto s = stream.next())
          distinct.insert(s->to_string());
        c.expect(distinct.size() == q_binomial(static_cast<unsigned>(n),
                                               static_cast<unsigned>(k), q),
                 "subspace count q=" + std::to_string(q) + " n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
      }
      if (n >= 1)
        c.expect(enumerate_points(f, n).size() == q_int(static_cast<unsigned>(n), q),
                 "point count q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
  c.expect(collect_subspaces(make_field(3), 4, 2).size() == 130, "binom(4,2)_3 = 130");
  c.expect(enumerate_points(make_field(3), 3).size() == 13, "[3]_3 = 13");
}

void scalar_products(Check &c) {
  for (auto [q, n, expected] : {std::tuple{2, 3, 16}, std::tuple{3, 2, 6}}) {
    const auto f = make_field(q);
    const auto order = enumerate_points(f, n);
    const auto all = all_subspaces(f, n);
    c.expect(all.size() == static_cast<std::size_t>(expected), "subspace total");
    std::size_t pairs = 0;
    for (const auto &a : all)
      for (const auto &b : all) {
        ++pairs;
        const auto got = scalar_product(incidence_vector(a, order),
                                        incidence_vector(b, order));
        if (static_cast<long long>(got) !=
            power_sum(static_cast<unsigned>(intersect(a, b).dim()), q))
          c.expect(false, "pair mismatch at q=" + std::to_string(q));
      }
    c.expect(pairs == all.size() * all.size(), "pair count");
  }
}

void ones_minus_identity(Check &c) {
  for (std::size_t m = 1; m <= 64; ++m) {
    const auto r = rank_f2(MatrixF2::ones_minus_identity(m));
    c.expect(r == (m % 2 == 0 ? m : m - 1), "rank(J-I) at m=" + std::to_string(m));
  }
}

void expect_search(Check &c, const FamilyKind &kind, int q, std::size_t n,
                   std::size_t expected) {
  const auto r = search_extremal(kind, make_field(q), n, budget(std::chrono::minutes(1)));
  const std::string at = kind.name() + " q=" + std::to_string(q) + " n=" + std::to_string(n);
  c.expect(r.clique.max_size == expected, at + " max " + std::to_string(r.clique.max_size));
  c.expect(r.clique.proven_optimal, at + " not proven optimal");
  c.expect(r.witness.size() == expected, at + " witness size");
  c.expect(verify_family(r.witness, kind).satisfied(), at + " witness fails verification");
}

void oddtown_searches(Check &c) {
  expect_search(c, FamilyKind::oddtown(), 3, 2, 4);
  expect_search(c, FamilyKind::oddtown(), 3, 3, 13);
  expect_search(c, FamilyKind::oddtown(), 5, 2, 6);
}

void reverse_searches(Check &c) {
  expect_search(c, FamilyKind::reverse_oddtown(), 3, 3, 13);
  expect_search(c, FamilyKind::reverse_oddtown(), 3, 2, 1);
  c.expect(bound_for(FamilyKind::reverse_oddtown(), 2, 3).bound == 3, "[2]_3 - 1 = 3");
}

void fisher_rank(Check &c) {
  std::size_t families = 0;
  for (int q : {2, 3}) {
    const auto f = make_field(q);
    for (std::size_t n = 1; n <= 3; ++n)
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        const auto kind = FamilyKind::fisher(k);
        const auto g = build_compat_graph(kind, f, n);
        for (const auto &clique : testing::maximal_cliques(g.graph)) {
          std::vector<Subspace> members;
          for (auto v : clique)
            members.push_back(g.vertices[v]);
          const Family family(f, n, members);
          const auto m = incidence_matrix(
              family.members(), std::make_shared<const PointOrder>(f, n));
          ++families;
          c.expect(exact_rank_int(m.as_int()) == family.size(),
                   "rank deficit in a Fisher family");
          c.expect(static_cast<long long>(family.size()) <=
                       power_sum(static_cast<unsigned>(n), q),
                   "Fisher family above [n]_q");
        }
      }
  }
  c.expect(families > 0, "no families examined");
}

void conjecture(Check &c) {
  const GridPoint point{4, 3};
  try {
    const auto batch = run_experiment(Experiment::Conjecture, std::span(&point, 1),
                                      budget(std::chrono::minutes(10)));
    const auto &entry = batch.entries.front();
    c.expect(entry.report.has_value(), "no report");
    if (!entry.report)
      return;
    const auto &r = *entry.report;
    c.expect(r.vertex_count >= 130, "candidate graph too small");
    c.expect(r.clique.max_size >= 13, "below the seed");
    c.expect(r.clique.max_size <= 39, "above [4]_3");
    std::cout << "    conjecture q=3 n=4: max_size " << r.clique.max_size
              << ", proven_optimal " << (r.clique.proven_optimal ? "true" : "false")
              << ", outcome \"" << r.outcome << "\"\n";
  } catch (const InternalInconsistency &e) {
    // Flagging the inconsistency is an allowed outcome.
    std::cout << "    conjecture q=3 n=4 flagged: " << e.what() << '\n';
  }
}

void explore(Check &c) {
  const GridPoint point{3, 2};
  const std::vector<FamilyKind> kinds{FamilyKind::oddtown()};
  const auto batch = run_experiment(Experiment::ExploreEvenQ, std::span(&point, 1),
                                    budget(std::chrono::minutes(1)), kinds);
  const auto &entry = batch.entries.front();
  c.expect(entry.report.has_value(), "no report");
  if (entry.report) {
    c.expect(entry.report->clique.max_size == 7, "max != 7");
    c.expect(entry.report->bound.status == BoundStatus::Open, "status not open");
  }
  for (int q : {2, 4, 8, 16})
    for (const auto &kind : {FamilyKind::oddtown(), FamilyKind::reverse_oddtown(),
                             FamilyKind::skew_pairs()})
      for (std::size_t n = 1; n <= 6; ++n)
        c.expect(bound_for(kind, n, q).status != BoundStatus::Proven,
                 "proven bound claimed for even q");
}

void cliques(Check &c) {
  std::mt19937_64 rng(1729);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 18;
    const auto g = testing::random_graph(rng, n, 0.2 + 0.7 * (rng() % 100) / 100.0);
    const auto expected = testing::exhaustive_max_clique(g).size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (unsigned workers : {1u, 4u}) {
      SearchConfig cfg;
      cfg.worker_count = workers;
      const auto a = max_clique(g, cfg);
      const auto b = max_clique(g.permuted(perm), cfg);
      c.expect(a.proven_optimal && a.max_size == expected && is_clique(g, a.witness),
               "graph " + std::to_string(t) + " threads " + std::to_string(workers));
      c.expect(b.max_size == expected,
               "shuffled graph " + std::to_string(t) + " threads " + std::to_string(workers));
    }
  }
}

int exit_status(const std::string &command) {
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void serialization(Check &c) {
  std::mt19937_64 rng(4242);
  const int orders[] = {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32};
  for (int t = 0; t < 100; ++t) {
    const int q = orders[rng() % std::size(orders)];
    const std::size_t n = 1 + rng() % 4;
    const auto f = make_field(q);
    std::vector<Subspace> members;
    std::set<std::string> seen;
    const std::size_t want = rng() % 10;
    for (std::size_t tries = 0; members.size() < want && tries < 60; ++tries) {
      const std::size_t rows = rng() % (n + 1);
      std::vector<Elem> entries(rows * n);
      for (auto &e : entries)
        e = static_cast<Elem>(rng() % static_cast<unsigned>(q));
      auto s = Subspace::canonicalize(MatrixFq(f, rows, n, std::move(entries)));
      if (seen.insert(s.to_string()).second)
        members.push_back(std::move(s));
    }
    const Family family(f, n, members);
    std::istringstream in(format_family(family));
    c.expect(parse_family(in) == family, "round trip " + std::to_string(t));
  }

  const std::string cli = QEXTREMAL_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = (dir / "qextremal_acc_f3.fam").string();
  const auto bad = (dir / "qextremal_acc_bad.fam").string();
  const auto quiet = " >/dev/null 2>&1";
  c.expect(exit_status(cli + " construct --kind f3 --q 3 --n 4 --out " + good + quiet) == 0,
           "construct exit");
  c.expect(exit_status(cli + " verify --family " + good + " --kind reverse-oddtown" + quiet) == 0,
           "verify satisfied should exit 0");
  c.expect(exit_status(cli + " verify --family " + good + " --kind oddtown" + quiet) == 1,
           "verify violated should exit 1");
  std::ofstream(bad) << "3 2 1\n1\n2 1\n";
  c.expect(exit_status(cli + " verify --family " + bad + " --kind oddtown" + quiet) == 2,
           "malformed file should exit 2");
  c.expect(exit_status(cli + " verify --kind oddtown" + quiet) == 2,
           "missing --family should exit 2");
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria = {
      {"counting identities", counting},
      {"scalar products equal [dim(A meet B)]_q", scalar_products},
      {"F_2 rank of J - I", ones_minus_identity},
      {"oddtown searches", oddtown_searches},
      {"reverse oddtown searches", reverse_searches},
      {"Fisher rank witness", fisher_rank},
      {"reverse oddtown conjecture at q=3 n=4", conjecture},
      {"even q exploration", explore},
      {"clique oracle", cliques},
      {"serialization and exit codes", serialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception &e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << ms << " ms)\n";
    for (std::size_t f = 0; f < c.failures.size() && f < 5; ++f)
      std::cout << "    " << c.failures[f] << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
