#include "qextremal/clique.hpp"

#include "qextremal/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace qx {

BitGraph::BitGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), adj_(n * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_)
    throw OutOfRange("edge endpoint out of range");
  if (u == v)
    return;
  adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t BitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (auto w : row(u))
    d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t BitGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u)
    total += degree(u);
  return total / 2;
}

BitGraph BitGraph::permuted(std::span<const std::size_t> perm) const {
  BitGraph out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adjacent(perm[i], perm[j]))
        out.add_edge(i, j);
  return out;
}

bool is_clique(const BitGraph &g, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size())
      return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
        return false;
  }
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;
using Clock = std::chrono::steady_clock;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](auto w) { return w != 0; });
}

void reset_bit(Bits &b, std::size_t v) {
  b[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool test_bit(const Bits &b, std::size_t v) { return (b[v / 64] >> (v % 64)) & 1u; }

/// Shared incumbent. The size only grows; the witness is guarded by a mutex.
class Incumbent {
public:
  explicit Incumbent(std::size_t target) : target_(target) {}

  std::size_t size() const { return size_.load(std::memory_order_acquire); }

  void offer(const std::vector<std::size_t> &clique) {
    if (clique.size() <= size())
      return;
    std::lock_guard lock(mutex_);
    if (clique.size() <= size_.load(std::memory_order_relaxed))
      return;
    witness_ = clique;
    size_.store(clique.size(), std::memory_order_release);
  }

  bool reached_target() const { return target_ != 0 && size() >= target_; }

  std::vector<std::size_t> witness() const {
    std::lock_guard lock(mutex_);
    return witness_;
  }

private:
  std::atomic<std::size_t> size_{0};
  std::size_t target_;
  mutable std::mutex mutex_;
  std::vector<std::size_t> witness_;
};

struct Control {
  Clock::time_point deadline;
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
};

/// Sequential branch and bound below one node of the search tree.
class Expander {
public:
  Expander(const BitGraph &g, Incumbent &best, Control &control)
      : g_(g), best_(best), control_(control) {}

  ~Expander() { control_.nodes.fetch_add(local_nodes_); }

  void expand(std::vector<std::size_t> &clique, Bits candidates) {
    if (stopped())
      return;
    ++local_nodes_;
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (clique.size() + bound[i] <= best_.size())
        return;
      const std::size_t v = order[i];
      clique.push_back(v);
      Bits next(candidates.size());
      const auto nbr = g_.row(v);
      for (std::size_t w = 0; w < next.size(); ++w)
        next[w] = candidates[w] & nbr[w];
      if (any(next))
        expand(clique, std::move(next));
      else
        best_.offer(clique);
      clique.pop_back();
      reset_bit(candidates, v);
      if (stopped())
        return;
    }
  }

  /// Greedy sequential colouring of the candidate set; bound[i] is the colour
  /// of order[i] and is non-decreasing.
  void colour(const Bits &candidates, std::vector<std::size_t> &order,
              std::vector<std::size_t> &bound) const {
    Bits uncoloured = candidates;
    std::size_t colour = 0;
    while (any(uncoloured)) {
      ++colour;
      Bits available = uncoloured;
      for (std::size_t w = 0; w < available.size(); ++w) {
        while (available[w]) {
          const std::size_t v =
              w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
          reset_bit(uncoloured, v);
          reset_bit(available, v);
          const auto nbr = g_.row(v);
          for (std::size_t x = w; x < available.size(); ++x)
            available[x] &= ~nbr[x];
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
  }

private:
  bool stopped() {
    if (best_.reached_target() || control_.timed_out.load(std::memory_order_relaxed))
      return true;
    if ((local_nodes_ & 0x3ff) == 0 && Clock::now() >= control_.deadline) {
      control_.timed_out.store(true);
      return true;
    }
    return false;
  }

  const BitGraph &g_;
  Incumbent &best_;
  Control &control_;
  std::uint64_t local_nodes_ = 0;
};

Bits full_set(std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (std::size_t v = 0; v < n; ++v)
    b[v / 64] |= std::uint64_t{1} << (v % 64);
  return b;
}

/// Root split: branch i explores cliques whose first vertex is order[i] and
/// whose remaining vertices come from order[0..i). Workers pull branches from
/// a shared counter, highest colour first.
void search_root(const BitGraph &g, const Bits &candidates, Incumbent &best,
                 Control &control, unsigned workers) {
  std::vector<std::size_t> order;
  std::vector<std::size_t> bound;
  {
    Expander e(g, best, control);
    e.colour(candidates, order, bound);
  }
  control.nodes.fetch_add(1);
  std::vector<Bits> prefix(order.size());
  {
    Bits seen(candidates.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      prefix[i] = seen;
      seen[order[i] / 64] |= std::uint64_t{1} << (order[i] % 64);
    }
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Expander e(g, best, control);
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= order.size())
        return;
      const std::size_t i = order.size() - 1 - slot;
      if (bound[i] <= best.size() || control.timed_out.load() ||
          best.reached_target())
        return; // bounds only shrink along the branch order
      const std::size_t v = order[i];
      std::vector<std::size_t> clique{v};
      Bits sub(candidates.size());
      const auto nbr = g.row(v);
      for (std::size_t w = 0; w < sub.size(); ++w)
        sub[w] = prefix[i][w] & nbr[w];
      if (any(sub))
        e.expand(clique, std::move(sub));
      else
        best.offer(clique);
    }
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back(work);
}

/// True iff candidates (in g's labelling) contain a clique of size target.
/// Returns nullopt on timeout.
std::optional<bool> has_clique(const BitGraph &g, const Bits &candidates,
                               std::size_t target, Control &control) {
  if (target == 0)
    return true;
  Incumbent best(target);
  if (target > 1)
    best.offer(std::vector<std::size_t>(target - 1, 0)); // size floor only
  search_root(g, candidates, best, control, 1);
  if (best.size() >= target)
    return true;
  if (control.timed_out.load())
    return std::nullopt;
  return false;
}

} // namespace

CliqueResult max_clique(const BitGraph &g, const SearchConfig &cfg,
                        std::span<const std::size_t> seed) {
  if (cfg.worker_count < 1)
    throw OutOfRange("worker_count must be >= 1");
  const auto start = Clock::now();
  Control control;
  control.deadline = start + cfg.time_limit;
  CliqueResult result;
  const std::size_t n = g.size();
  if (n == 0) {
    result.proven_optimal = true;
    return result;
  }

  // Relabel by non-increasing degree; ties keep the original order.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v)
    degree[v] = g.degree(v);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](auto a, auto b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i)
    position[perm[i]] = i;
  const BitGraph h = g.permuted(perm);

  Incumbent best(0);
  best.offer({position[0]});
  if (!seed.empty() && is_clique(g, seed)) {
    std::vector<std::size_t> mapped;
    for (auto v : seed)
      mapped.push_back(position[v]);
    best.offer(mapped);
  }
  search_root(h, full_set(n), best, control, cfg.worker_count);

  std::vector<std::size_t> witness;
  for (auto v : best.witness())
    witness.push_back(perm[v]);
  std::sort(witness.begin(), witness.end());
  result.max_size = witness.size();
  result.proven_optimal = !control.timed_out.load();

  if (result.proven_optimal && cfg.deterministic_witness &&
      cfg.worker_count == 1) {
    // Smallest-first greedy: keep v iff the remaining candidates after v
    // still hold a clique completing the chosen prefix to max_size.
    std::vector<std::size_t> chosen;
    Bits candidates = full_set(n);
    bool complete = true;
    for (std::size_t v = 0; v < n && chosen.size() < result.max_size; ++v) {
      if (!test_bit(candidates, v))
        continue;
      Bits after(candidates.size(), 0);
      const auto nbr = g.row(v);
      for (std::size_t w = 0; w < after.size(); ++w)
        after[w] = candidates[w] & nbr[w];
      for (std::size_t u = 0; u <= v; ++u)
        reset_bit(after, u);
      const std::size_t need = result.max_size - chosen.size() - 1;
      const auto found = has_clique(g, after, need, control);
      if (!found) {
        complete = false;
        break;
      }
      if (*found) {
        chosen.push_back(v);
        candidates = std::move(after);
      } else {
        reset_bit(candidates, v);
      }
    }
    if (complete && chosen.size() == result.max_size)
      witness = std::move(chosen);
  }

  result.witness = std::move(witness);
  result.nodes_explored = control.nodes.load();
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return result;
}

} // namespace qx
