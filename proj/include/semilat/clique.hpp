#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "semilat/bitset.hpp"

namespace semilat {

namespace detail {

// Pivoting Bron-Kerbosch: the pivot maximises |P & N(pivot)| over P | X and
// only the vertices of P outside N(pivot) are branched on.
template <typename Emit>
void expand_cliques(const std::vector<Bitset>& rows, std::vector<std::size_t>& clique,
                    Bitset candidates, Bitset excluded, Emit& emit) {
  if (candidates.none()) {
    if (excluded.none()) emit(clique);
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  auto consider = [&](std::size_t v) {
    auto c = candidates.count_and(rows[v]);
    if (!have_pivot || c > best) {
      pivot = v;
      best = c;
      have_pivot = true;
    }
  };
  candidates.for_each(consider);
  excluded.for_each(consider);

  const auto branch = candidates.minus(rows[pivot]);
  branch.for_each([&](std::size_t v) {
    clique.push_back(v);
    expand_cliques(rows, clique, candidates & rows[v], excluded & rows[v], emit);
    clique.pop_back();
    candidates.reset(v);
    excluded.set(v);
  });
}

struct CliqueTask {
  std::size_t root;
  Bitset candidates;
  Bitset excluded;
};

}  // namespace detail

/// All maximal cliques of the graph given by symmetric, irreflexive bit
/// rows. Each clique is a sorted vertex list; the result is sorted.
///
/// The top level of the search is split into independent branches that
/// `workers` threads claim in turn; results are merged by branch index and
/// then sorted, so the output does not depend on the worker count.
inline std::vector<std::vector<std::size_t>> maximal_cliques(
    const std::vector<Bitset>& rows, unsigned workers = 1) {
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  const auto n = rows.size();
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;

  Bitset candidates(n);
  candidates.set_all();
  Bitset excluded(n);

  std::size_t pivot = 0;
  std::size_t best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto c = rows[v].count();
    if (v == 0 || c > best) {
      pivot = v;
      best = c;
    }
  }
  std::vector<detail::CliqueTask> tasks;
  candidates.minus(rows[pivot]).for_each([&](std::size_t v) {
    tasks.push_back({v, candidates & rows[v], excluded & rows[v]});
    candidates.reset(v);
    excluded.set(v);
  });

  std::vector<std::vector<std::vector<std::size_t>>> per_task(tasks.size());
  auto run_task = [&](std::size_t i) {
    std::vector<std::size_t> clique{tasks[i].root};
    auto emit = [&](const std::vector<std::size_t>& c) {
      auto sorted = c;
      std::sort(sorted.begin(), sorted.end());
      per_task[i].push_back(std::move(sorted));
    };
    detail::expand_cliques(rows, clique, tasks[i].candidates, tasks[i].excluded, emit);
  };

  if (workers == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const auto count = std::min<std::size_t>(workers, tasks.size());
    for (std::size_t w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (auto i = next++; i < tasks.size(); i = next++) run_task(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (auto& part : per_task)
    for (auto& c : part) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semilat
