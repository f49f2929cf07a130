#ifndef PBW_MAX_PROFIT_FLOW_HPP
#define PBW_MAX_PROFIT_FLOW_HPP

#include <cstdint>
#include <vector>

namespace pbw {

/**
 * Integer max-profit flow from a source to a sink, with free flow value.
 *
 * Augments along a most profitable residual path until no path has positive
 * profit. The input network must have no positive-profit cycle (it is a DAG
 * in every use here); successive augmentation preserves that property in the
 * residual graph, so the accumulated profit is optimal over all flow values.
 */
class MaxProfitFlow {
 public:
  explicit MaxProfitFlow(int nodes);

  void add_arc(int from, int to, std::int64_t capacity, std::int64_t profit);

  /// Returns the optimal total profit (>= 0; zero flow is always feasible).
  std::int64_t solve(int source, int sink);

  /// Flow on arc number k (in insertion order) after solve().
  std::int64_t flow_on(std::size_t k) const;

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
    std::int64_t profit;
  };
  int nodes_;
  std::vector<Arc> arcs_;  // arc 2k is forward, 2k+1 its residual twin
  std::vector<std::vector<int>> out_;
};

}  // namespace pbw

#endif
