#include <algorithm>
#include <atomic>
#include <thread>

#include "kernel.hpp"
#include "toric3/toriccode.hpp"
#include "workers.hpp"

namespace toric3::codes {

namespace {

struct Task {
  std::size_t lead;
  int second;  // value index of the digit after the lead, -1 when there is none
};

}  // namespace

MinWeightResult min_weight_exhaustive(const FiniteField& f, const Matrix& g0, const EngineOptions& opt) {
  const Matrix g = row_reduce(f, g0);
  const std::size_t k = g.size();
  if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  const std::size_t n = g.front().size();
  const std::uint32_t q = f.q();
  const auto cost = exhaustive_cost(q, k, n);
  if (static_cast<double>(cost) > opt.budget)
    throw BudgetExceeded("exhaustive search needs ~" + std::to_string(cost) + " coordinate updates (budget " +
                         std::to_string(static_cast<std::uint64_t>(opt.budget)) + "); use the bz engine");

  // order[0] = 0, order[t] = g^(t-1); digit t -> t+1 adds delta[t] * row
  std::vector<gfq::Elem> order(q);
  for (std::uint32_t t = 1; t < q; ++t) order[t] = f.exp(t - 1);
  const detail::AddKernel kernel(f);
  std::vector<std::vector<Row>> step(k, std::vector<Row>(q));
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t t = 0; t < q; ++t)
      step[i][t] = kernel.encode(detail::scaled(f, g[i], f.sub(order[(t + 1) % q], order[t])));

  std::vector<Task> tasks;
  for (std::size_t l = 0; l < k; ++l) {
    if (l + 1 == k) {
      tasks.push_back({l, -1});
    } else {
      for (std::uint32_t v = 0; v < q; ++v) tasks.push_back({l, static_cast<int>(v)});
    }
  }

  detail::BestWord best(n + 1);
  std::atomic<std::uint64_t> visited{0};
  std::atomic<bool> stop{false};
  auto hit = [&](std::uint64_t w, const Row& c) {
    best.offer(w, c.data(), n);
    if (opt.early_stop && w <= *opt.early_stop) stop = true;
  };

  detail::run_tasks(tasks.size(), opt.threads, [&](std::size_t ti) {
    if (stop) return;
    const Task task = tasks[ti];
    Row c = kernel.encode(g[task.lead]);
    std::size_t first_free = task.lead + 1;
    if (task.second >= 0) {
      if (task.second > 0) kernel.add(c.data(), kernel.encode(detail::scaled(f, g[task.lead + 1], order[task.second])).data(), n);
      first_free = task.lead + 2;
    }
    std::uint64_t local = 1;
    hit(detail::weight(c.data(), n), c);
    const std::size_t r = k - first_free;
    std::vector<std::uint32_t> counter(r, 0), gray(r, 0);
    for (;;) {
      std::size_t j = 0;
      while (j < r && counter[j] == q - 1) counter[j++] = 0;
      if (j == r) break;
      ++counter[j];
      const std::size_t row = first_free + j;
      const std::size_t w = kernel.add_weight(c.data(), step[row][gray[j]].data(), n);
      gray[j] = (gray[j] + 1) % q;
      ++local;
      if (w < best.get()) hit(w, c);
      if ((local & 0xFFFF) == 0 && stop) break;
    }
    visited += local;
  });

  MinWeightResult res;
  res.d = best.get();
  res.codewords = visited;
  res.exact = !stop;
  res.witness = kernel.decode(best.word());
  return res;
}

}  // namespace toric3::codes
