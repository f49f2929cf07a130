#ifndef PBW_ADMISSIBLE_HPP
#define PBW_ADMISSIBLE_HPP

#include <vector>

#include "pbw/flag_type.hpp"

namespace pbw {

/// Sorted, duplicate-free subset of [n].
using IndexSet = std::vector<int>;

/**
 * A tuple (J_{d_1}, ..., J_{d_s}) of index sets with |J_{d_a}| = d_a that
 * labels a torus fixed point of the degenerate flag variety. Consecutive
 * members satisfy J_{d_a} \ {d_a+1, ..., d_{a+1}} ⊆ J_{d_{a+1}}, which is
 * J_d ⊂ J_{d+1} ∪ {d+1} for full flags.
 */
class AdmissibleCollection {
 public:
  /// Validates sizes, ranges and the containment condition.
  AdmissibleCollection(FlagType type, std::vector<IndexSet> sets);

  /// J_d = [d] for every d: the point of the open cell.
  static AdmissibleCollection standard(const FlagType& type);

  const FlagType& flag_type() const { return type_; }
  const std::vector<IndexSet>& sets() const { return sets_; }
  /// J_d for a member d of the flag type.
  const IndexSet& at(int d) const;
  /// Membership i ∈ J_d, with the conventions J_0 = ∅ and J_n = [n].
  bool holds(int d, int i) const;

  bool is_standard() const;
  std::string to_string() const;

  friend bool operator==(const AdmissibleCollection&, const AdmissibleCollection&) = default;
  friend auto operator<=>(const AdmissibleCollection& a, const AdmissibleCollection& b) {
    return a.sets_ <=> b.sets_;
  }

 private:
  FlagType type_;
  std::vector<IndexSet> sets_;
};

bool is_admissible(const FlagType& type, const std::vector<IndexSet>& sets);

/// All admissible collections, lexicographic in (J_{d_1}, ..., J_{d_s}).
std::vector<AdmissibleCollection> admissible_collections(const FlagType& type);

/**
 * Mutation labeled by a > b (full flags): every J_d with b <= d < a that
 * contains b but not a becomes J_d \ {b} ∪ {a}.
 */
AdmissibleCollection mutate(const AdmissibleCollection& J, int a, int b);

}  // namespace pbw

#endif
