#ifndef PBW_POLYTOPE_HPP
#define PBW_POLYTOPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pbw/flag_type.hpp"
#include "pbw/poset.hpp"

namespace pbw {

/**
 * The marked poset polytope X_{d,m,M} ⊂ R_{>=0}^{P_d}: points with
 *   sum_{α ∈ P'} x_α <= M + sum_a m_{d_a} width(P' ∩ P_{d_a})
 * for every subposet P'. The weight must vanish off the flag type.
 */
struct PolytopeSpec {
  FlagType flag_type;
  Weight weight;
  int M = 0;

  PolytopeSpec(FlagType type, Weight w, int level);

  /// Same polytope dilated by t: (t m, t M).
  PolytopeSpec dilate(int t) const;
};

/// Coordinates indexed by the canonical element order of the flag type's poset.
struct LatticePoint {
  std::vector<int> x;

  int total() const;
  LatticePoint operator+(const LatticePoint& other) const;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint zero_point(const RootPoset& poset);
LatticePoint unit_point(const RootPoset& poset, PosetElement e);

enum class Provenance { enumerated, minkowski_sum };

/// Sorted, duplicate-free set of lattice points over one flag type.
struct PointSet {
  FlagType flag_type;
  std::vector<LatticePoint> points;
  Provenance provenance = Provenance::enumerated;

  std::size_t size() const { return points.size(); }
  bool contains(const LatticePoint& p) const;
  /// Same underlying set, ignoring provenance.
  bool same_set(const PointSet& other) const;
};

inline constexpr std::size_t kBruteforceDefectLimit = 24;
inline constexpr double kBoxVolumeLimit = 1e8;

/// max over subposets P' of sum_{P'} x - sum_a m_{d_a} width(P' ∩ P_{d_a}).
/// Exponential in the support of x; refuses posets beyond kBruteforceDefectLimit.
int defect_bruteforce(const PolytopeSpec& spec, const LatticePoint& x);

/**
 * The same maximum over collections of disjoint chains, scoring
 * sum of x on the chains minus sum of (Λ_{finish} - Λ_{start}), solved as a
 * max-profit flow on the node-split comparability DAG. Polynomial time.
 */
int defect_flow(const PolytopeSpec& spec, const LatticePoint& x);

/// x ∈ X_{d,m,M}, i.e. defect_flow(x) <= M.
bool contains(const PolytopeSpec& spec, const LatticePoint& x);

/// Per-coordinate upper bound M + Λ_i - Λ_j from singleton subposets.
std::vector<int> coordinate_bounds(const PolytopeSpec& spec);

struct EnumerationOptions {
  unsigned jobs = 1;
  double volume_limit = kBoxVolumeLimit;
};

/// All integer points, in lexicographic coordinate order.
PointSet lattice_points(const PolytopeSpec& spec, const EnumerationOptions& options = {});

/// {a + b}, deduplicated.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

struct MinkowskiReport {
  bool match = false;
  std::size_t lhs_size = 0;  // |S_{m,M} + S_{m',M'}|
  std::size_t rhs_size = 0;  // |S_{m+m',M+M'}|
};

/// Compares a + b with an already enumerated target set.
MinkowskiReport minkowski_report(const PointSet& a, const PointSet& b, const PointSet& target);
MinkowskiReport minkowski_report(const FlagType& type, const Weight& m, int M, const Weight& m2, int M2,
                                 const EnumerationOptions& options = {});
bool minkowski_verify(const FlagType& type, const Weight& m, int M, const Weight& m2, int M2);

/// [|S_{t m, t M}|] for t = 1..t_max.
std::vector<std::uint64_t> dilation_counts(const PolytopeSpec& spec, int t_max,
                                           const EnumerationOptions& options = {});

}  // namespace pbw

#endif
