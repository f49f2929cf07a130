#include "pbw/max_profit_flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace pbw {

MaxProfitFlow::MaxProfitFlow(int nodes) : nodes_(nodes), out_(static_cast<std::size_t>(nodes)) {}

void MaxProfitFlow::add_arc(int from, int to, std::int64_t capacity, std::int64_t profit) {
  if (from < 0 || to < 0 || from >= nodes_ || to >= nodes_) throw std::out_of_range("arc endpoint");
  out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity, profit});
  out_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, -profit});
}

std::int64_t MaxProfitFlow::solve(int source, int sink) {
  constexpr std::int64_t minus_inf = std::numeric_limits<std::int64_t>::min() / 4;
  const auto n = static_cast<std::size_t>(nodes_);
  std::int64_t total = 0;
  std::vector<std::int64_t> best(n);
  std::vector<int> via(n);
  std::vector<char> queued(n);

  while (true) {
    // Longest path by label-correcting relaxation (SPFA).
    std::fill(best.begin(), best.end(), minus_inf);
    std::fill(via.begin(), via.end(), -1);
    std::fill(queued.begin(), queued.end(), 0);
    std::deque<int> queue{source};
    best[static_cast<std::size_t>(source)] = 0;
    queued[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(u)] = 0;
      for (int k : out_[static_cast<std::size_t>(u)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(k)];
        if (arc.capacity <= 0) continue;
        const std::int64_t cand = best[static_cast<std::size_t>(u)] + arc.profit;
        const auto v = static_cast<std::size_t>(arc.to);
        if (cand > best[v]) {
          best[v] = cand;
          via[v] = k;
          if (!queued[v]) {
            queued[v] = 1;
            queue.push_back(arc.to);
          }
        }
      }
    }
    const std::int64_t gain = best[static_cast<std::size_t>(sink)];
    if (gain <= 0) break;

    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = sink; v != source;) {
      const int k = via[static_cast<std::size_t>(v)];
      push = std::min(push, arcs_[static_cast<std::size_t>(k)].capacity);
      v = arcs_[static_cast<std::size_t>(k ^ 1)].to;
    }
    for (int v = sink; v != source;) {
      const int k = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(k)].capacity -= push;
      arcs_[static_cast<std::size_t>(k ^ 1)].capacity += push;
      v = arcs_[static_cast<std::size_t>(k ^ 1)].to;
    }
    total += push * gain;
  }
  return total;
}

std::int64_t MaxProfitFlow::flow_on(std::size_t k) const { return arcs_.at(2 * k + 1).capacity; }

}  // namespace pbw
