#ifndef PBW_POSET_HPP
#define PBW_POSET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pbw/flag_type.hpp"

namespace pbw {

/**
 * The root poset P_d of a flag type: pairs (i, j) with j <= d_a < i for some
 * a, ordered componentwise. Elements are kept in canonical (i, j)
 * lexicographic order; this order also indexes lattice point coordinates.
 */
class RootPoset {
 public:
  explicit RootPoset(FlagType type);

  const FlagType& flag_type() const { return type_; }
  int n() const { return type_.n(); }
  std::span<const PosetElement> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const PosetElement& operator[](std::size_t k) const { return elements_[k]; }

  bool contains(PosetElement e) const { return index_of(e).has_value(); }
  std::optional<std::size_t> index_of(PosetElement e) const;

  /// Elements of the layer P_d (d must be part of the flag type).
  std::vector<PosetElement> layer(int d) const;

  /// Throws ValidationError unless every element of subset belongs to the poset.
  void check_subset(std::span<const PosetElement> subset) const;

 private:
  FlagType type_;
  std::vector<PosetElement> elements_;
  std::vector<int> index_;  // (i-1)*n + (j-1) -> position or -1
};

RootPoset build_poset(const FlagType& type);

/// A totally ordered list of poset elements, increasing.
struct Chain {
  std::vector<PosetElement> elements;

  /// j of the minimal element.
  int start() const { return elements.front().j; }
  /// i of the maximal element.
  int finish() const { return elements.back().i; }
  bool meets_layer(int d) const;
  bool is_chain() const;

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Widths. The subset must be duplicate-free.

/// Exhaustive maximum-antichain search; exponential, for small subsets.
std::vector<PosetElement> max_antichain_bruteforce(std::span<const PosetElement> subset);
int width_bruteforce(std::span<const PosetElement> subset);

/// Minimum chain cover via bipartite matching (Dilworth / Koenig).
std::vector<Chain> minimum_chain_cover(std::span<const PosetElement> subset);
int width_matching(std::span<const PosetElement> subset);

inline constexpr std::size_t kBruteforceWidthLimit = 20;

/// Brute force up to kBruteforceWidthLimit elements, matching beyond.
int width(const RootPoset& poset, std::span<const PosetElement> subset);
int width(std::span<const PosetElement> subset);

/**
 * The greedy layered chain cover: take the element of minimal j (then minimal
 * i), absorb its whole column, jump to the least larger column that has an
 * element at or above the current row, repeat; remove the chain and recurse
 * on what is left. For every layer d, the number of returned chains meeting
 * P_d equals the width of subset ∩ P_d.
 */
std::vector<Chain> chain_cover(const RootPoset& poset, std::span<const PosetElement> subset);

}  // namespace pbw

#endif
