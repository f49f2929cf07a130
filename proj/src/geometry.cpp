#include "pbw/geometry.hpp"

#include "pbw/quiver.hpp"

namespace pbw {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

// U with the coordinates lo..hi (1-based, inclusive) set to zero.
RationalMatrix kill_rows(RationalMatrix U, int lo, int hi) {
  for (int r = lo; r <= hi; ++r)
    for (std::size_t c = 0; c < U.cols(); ++c) U(idx(r), c) = 0;
  return U;
}

RationalMatrix coordinate_span(int n, const IndexSet& s) {
  RationalMatrix m(static_cast<std::size_t>(n), s.size());
  for (std::size_t c = 0; c < s.size(); ++c) m(idx(s[c]), c) = 1;
  return m;
}

// Rows w with w U = 0.
std::vector<std::vector<Rational>> left_null_space(const RationalMatrix& U) { return U.transpose().kernel(); }

bool is_unit_vector(const std::vector<Rational>& v, std::size_t& where) {
  int nonzero = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (v[k] != 1 || ++nonzero > 1) return false;
    where = k;
  }
  return nonzero == 1;
}

}  // namespace

FlagPoint::FlagPoint(FlagType type, std::map<int, RationalMatrix> subspaces)
    : type_(std::move(type)), subspaces_(std::move(subspaces)) {
  const int n = type_.n();
  if (subspaces_.size() != type_.length()) throw ValidationError("flag point: expected one subspace per entry of d");
  for (int d : type_.d()) {
    auto it = subspaces_.find(d);
    if (it == subspaces_.end()) throw ValidationError("flag point: missing U_" + std::to_string(d));
    const auto& U = it->second;
    if (U.rows() != static_cast<std::size_t>(n) || U.cols() != static_cast<std::size_t>(d))
      throw ValidationError("flag point: U_" + std::to_string(d) + " must be " + std::to_string(n) + " x " +
                            std::to_string(d));
    if (U.rank() != static_cast<std::size_t>(d)) throw ValidationError("flag point: U_" + std::to_string(d) + " is rank deficient");
  }
  const auto& d = type_.d();
  for (std::size_t a = 0; a + 1 < d.size(); ++a) {
    const auto projected = kill_rows(subspaces_.at(d[a]), d[a] + 1, d[a + 1]);
    if (!column_span_contains(subspaces_.at(d[a + 1]), projected))
      throw ValidationError("flag point: pr U_" + std::to_string(d[a]) + " not contained in U_" +
                            std::to_string(d[a + 1]));
  }
}

const RationalMatrix& FlagPoint::subspace(int d) const {
  auto it = subspaces_.find(d);
  if (it == subspaces_.end()) throw ValidationError("flag point: no subspace of dimension " + std::to_string(d));
  return it->second;
}

RadicalElement::RadicalElement(FlagType type, RationalMatrix f) : type_(std::move(type)), f_(std::move(f)) {
  const auto n = static_cast<std::size_t>(type_.n());
  if (f_.rows() != n || f_.cols() != n) throw ValidationError("radical element: matrix must be n x n");
  const RootPoset poset(type_);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (f_(r, c) != 0 && !poset.contains({static_cast<int>(r) + 1, static_cast<int>(c) + 1}))
        throw ValidationError("radical element: entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                              ") outside the radical");
}

RadicalElement RadicalElement::from_coordinates(const FlagType& type, const std::vector<Rational>& coords) {
  const RootPoset poset(type);
  if (coords.size() != poset.size()) throw ValidationError("radical element: coordinate count mismatch");
  const auto n = static_cast<std::size_t>(type.n());
  RationalMatrix f(n, n);
  for (std::size_t k = 0; k < coords.size(); ++k) f(idx(poset[k].i), idx(poset[k].j)) = coords[k];
  return RadicalElement(type, std::move(f));
}

RationalMatrix RadicalElement::block(int d) const {
  const int n = type_.n();
  RationalMatrix out(static_cast<std::size_t>(n - d), static_cast<std::size_t>(d));
  for (int i = d + 1; i <= n; ++i)
    for (int j = 1; j <= d; ++j) out(static_cast<std::size_t>(i - d - 1), idx(j)) = f_(idx(i), idx(j));
  return out;
}

FlagPoint fixed_point_subspaces(const AdmissibleCollection& J) {
  std::map<int, RationalMatrix> subspaces;
  for (int d : J.flag_type().d()) subspaces.emplace(d, coordinate_span(J.flag_type().n(), J.at(d)));
  return FlagPoint(J.flag_type(), std::move(subspaces));
}

FlagPoint cell_point(const RadicalElement& f) {
  const auto& type = f.flag_type();
  const int n = type.n();
  std::map<int, RationalMatrix> subspaces;
  for (int d : type.d()) {
    RationalMatrix U(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
    for (int a = 1; a <= d; ++a) {
      U(idx(a), idx(a)) = 1;
      for (int i = d + 1; i <= n; ++i) U(idx(i), idx(a)) = f.matrix()(idx(i), idx(a));
    }
    subspaces.emplace(d, std::move(U));
  }
  return FlagPoint(type, std::move(subspaces));
}

bool cell_membership(const FlagPoint& U) {
  for (const auto& [d, M] : U.subspaces())
    if (M.row_block(0, static_cast<std::size_t>(d)).rank() != static_cast<std::size_t>(d)) return false;
  return true;
}

FiberDescription fiber_fixed_point(const AdmissibleCollection& J) {
  const auto& type = J.flag_type();
  if (!type.is_full()) throw ValidationError("fiber_fixed_point needs a full flag type; use fiber_general");
  const RootPoset poset(type);
  FiberDescription out;
  out.is_coordinate = true;
  out.open_cell = J.is_standard();
  for (std::size_t k = 0; k < poset.size(); ++k) {
    const auto e = poset[k];
    if (!J.holds(e.j, e.i) || J.holds(e.i - 1, e.j)) continue;
    out.unit_basis.push_back(e);
    std::vector<Rational> v(poset.size());
    v[k] = 1;
    out.basis.push_back(std::move(v));
  }
  out.linear_dim = static_cast<int>(out.unit_basis.size());
  return out;
}

FiberDescription fiber_general(const FlagPoint& U) {
  if (cell_membership(U)) throw ValidationError("fiber_general: point lies in the open cell");
  const auto& type = U.flag_type();
  const int n = type.n();
  const RootPoset poset(type);
  const std::size_t vars = poset.size();
  std::vector<std::vector<Rational>> rows;
  auto var = [&](int i, int j) { return *poset.index_of({i, j}); };

  for (int d : type.d()) {
    const auto& Ud = U.subspace(d);
    // Im f_d ⊆ U_d: every column f_d ℓ_j is annihilated by the left null space.
    for (const auto& w : left_null_space(Ud))
      for (int j = 1; j <= d; ++j) {
        std::vector<Rational> row(vars);
        bool any = false;
        for (int i = d + 1; i <= n; ++i)
          if (w[idx(i)] != 0) {
            row[var(i, j)] += w[idx(i)];
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
    // ker f_d ⊇ pr_{[d+1,n]} U_d: f_d kills the top d entries of each column.
    for (std::size_t c = 0; c < Ud.cols(); ++c)
      for (int i = d + 1; i <= n; ++i) {
        std::vector<Rational> row(vars);
        bool any = false;
        for (int j = 1; j <= d; ++j)
          if (Ud(idx(j), c) != 0) {
            row[var(i, j)] += Ud(idx(j), c);
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
  }

  RationalMatrix system(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) system(r, c) = rows[r][c];

  FiberDescription out;
  out.basis = system.kernel();
  out.linear_dim = static_cast<int>(out.basis.size());
  out.is_coordinate = true;
  for (const auto& v : out.basis) {
    std::size_t where = 0;
    if (!is_unit_vector(v, where)) {
      out.is_coordinate = false;
      out.unit_basis.clear();
      break;
    }
    out.unit_basis.push_back(poset[where]);
  }
  return out;
}

int fiber_quiver_dim(const AdmissibleCollection& J) {
  const auto [quotient, injective_part] = quiver_decomposition(J);
  return hom_dim(quotient, injective_part);
}

GrassPhiFiber grass_phi_fiber(const RationalMatrix& U, int d) {
  const auto n = U.rows();
  if (d < 1 || static_cast<std::size_t>(d) >= n) throw ValidationError("grass_phi_fiber: need 1 <= d < n");
  if (U.cols() != static_cast<std::size_t>(d) || U.rank() != static_cast<std::size_t>(d))
    throw ValidationError("grass_phi_fiber: U must have full column rank d");
  const auto du = static_cast<std::size_t>(d);
  GrassPhiFiber out;
  out.quotient_dim = d - static_cast<int>(U.row_block(0, du).rank());
  RationalMatrix plus(n, n - du);
  for (std::size_t k = 0; k < n - du; ++k) plus(du + k, k) = 1;
  out.intersection_dim = static_cast<int>(intersection_dim(U, plus));
  return out;
}

GrassPsiFiber grass_psi_fiber(const RationalMatrix& f, int d) {
  const auto n = f.rows();
  if (f.cols() != n) throw ValidationError("grass_psi_fiber: f must be square");
  if (d < 1 || static_cast<std::size_t>(d) >= n) throw ValidationError("grass_psi_fiber: need 1 <= d < n");
  const auto du = static_cast<std::size_t>(d);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (f(r, c) != 0 && !(r >= du && c < du))
        throw ValidationError("grass_psi_fiber: f must be supported on rows > d, columns <= d");
  if (f.is_zero()) throw ValidationError("grass_psi_fiber: f must be nonzero");
  GrassPsiFiber out;
  out.k = d - static_cast<int>(f.rank());
  out.m = out.k + static_cast<int>(n) - d;
  return out;
}

}  // namespace pbw
