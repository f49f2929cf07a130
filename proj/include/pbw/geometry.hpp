#ifndef PBW_GEOMETRY_HPP
#define PBW_GEOMETRY_HPP

#include <map>
#include <vector>

#include "pbw/admissible.hpp"
#include "pbw/linalg.hpp"
#include "pbw/poset.hpp"

namespace pbw {

/**
 * A point (U_d) of the degenerate partial flag variety: for each d of the
 * flag type an n x d matrix whose columns span U_d. Construction validates
 * full column rank and pr_{d_a+1} ... pr_{d_{a+1}} U_{d_a} ⊆ U_{d_{a+1}},
 * where pr_i kills the i-th coordinate.
 */
class FlagPoint {
 public:
  FlagPoint(FlagType type, std::map<int, RationalMatrix> subspaces);

  const FlagType& flag_type() const { return type_; }
  const RationalMatrix& subspace(int d) const;
  const std::map<int, RationalMatrix>& subspaces() const { return subspaces_; }

 private:
  FlagType type_;
  std::map<int, RationalMatrix> subspaces_;
};

/// Strictly lower triangular n x n matrix supported on the radical of the
/// flag type (entry (i, j) allowed iff (i, j) is in the root poset).
class RadicalElement {
 public:
  RadicalElement(FlagType type, RationalMatrix f);
  /// Coordinates in poset order.
  static RadicalElement from_coordinates(const FlagType& type, const std::vector<Rational>& coords);

  const FlagType& flag_type() const { return type_; }
  const RationalMatrix& matrix() const { return f_; }
  /// f_d as an (n-d) x d block: rows d+1..n, columns 1..d.
  RationalMatrix block(int d) const;

 private:
  FlagType type_;
  RationalMatrix f_;
};

/// span{ℓ_i : i ∈ J_d} for each d.
FlagPoint fixed_point_subspaces(const AdmissibleCollection& J);

/// The open-cell point ι(f): U_d = span{ℓ_a + f_d ℓ_a : a <= d}.
FlagPoint cell_point(const RadicalElement& f);

/// Every U_d projects isomorphically onto span{ℓ_1, ..., ℓ_d}.
bool cell_membership(const FlagPoint& U);

/**
 * A fiber of the graph-closure projection, as a linear space whose
 * projectivization is the fiber. linear_dim == 0 encodes an empty boundary
 * fiber; open_cell marks points where the fiber is the single graph point.
 */
struct FiberDescription {
  int linear_dim = 0;
  bool open_cell = false;
  /// Matrix units spanning the space, when it is a coordinate subspace.
  std::vector<PosetElement> unit_basis;
  bool is_coordinate = false;
  /// Basis in poset coordinates.
  std::vector<std::vector<Rational>> basis;

  int projective_dim() const { return linear_dim - 1; }
};

/// span{E_{i,j} : i > j, i ∈ J_j, j ∉ J_{i-1}} (full flags).
FiberDescription fiber_fixed_point(const AdmissibleCollection& J);

/// {f : Im f_d ⊆ U_d and ker f_d ⊇ pr_{[d+1,n]} U_d for all d}, by exact
/// elimination. Rejects points of the open cell.
FiberDescription fiber_general(const FlagPoint& U);

/// dim Hom_Q(P/N_P, N_I) at a fixed point, as a FiberDescription dimension.
int fiber_quiver_dim(const AdmissibleCollection& J);

struct GrassPhiFiber {
  int quotient_dim = 0;      // dim L_d^- / pr_{[d+1,n]}(U)
  int intersection_dim = 0;  // dim U ∩ L_d^+
  int linear_dim() const { return quotient_dim * intersection_dim; }
};

/// Fiber of φ over U ∈ Gr(d, n), U given by an n x d spanning matrix.
GrassPhiFiber grass_phi_fiber(const RationalMatrix& U, int d);

struct GrassPsiFiber {
  int k = 0;  // d - rank f
  int m = 0;  // dim ker(f) ⊕ L_d^+
  int dimension() const { return k * (m - k); }
};

/// Fiber of ψ over [f], f ≠ 0 supported on r_d: Gr(k, m).
GrassPsiFiber grass_psi_fiber(const RationalMatrix& f, int d);

}  // namespace pbw

#endif
