#include <doctest.h>

#include <random>

#include "pbw/geometry.hpp"
#include "pbw/quiver.hpp"

using namespace pbw;

namespace {

RationalMatrix columns(int n, const std::vector<std::vector<long>>& cols) {
  RationalMatrix m(static_cast<std::size_t>(n), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  return m;
}

RationalMatrix span_of(int n, const std::vector<int>& idx) {
  RationalMatrix m(static_cast<std::size_t>(n), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) m(static_cast<std::size_t>(idx[c] - 1), c) = 1;
  return m;
}

}  // namespace

TEST_CASE("fixed_point_subspaces examples") {
  const auto t = FlagType::full(3);
  const auto std_point = fixed_point_subspaces(AdmissibleCollection::standard(t));
  CHECK(std_point.subspace(1) == span_of(3, {1}));
  CHECK(std_point.subspace(2) == span_of(3, {1, 2}));
  const auto p = fixed_point_subspaces(AdmissibleCollection(t, {{2}, {2, 3}}));
  CHECK(p.subspace(1) == span_of(3, {2}));
  CHECK(p.subspace(2) == span_of(3, {2, 3}));
  CHECK_NOTHROW(fixed_point_subspaces(AdmissibleCollection(t, {{3}, {1, 3}})));
}

TEST_CASE("flag point validation") {
  const auto t = FlagType::full(3);
  CHECK_THROWS_AS(FlagPoint(t, {{1, span_of(3, {1})}, {2, span_of(3, {2, 3})}}), ValidationError);
  CHECK_THROWS_AS(FlagPoint(t, {{1, span_of(3, {1})}}), ValidationError);
  CHECK_THROWS_AS(FlagPoint(t, {{1, span_of(3, {1})}, {2, columns(3, {{1, 0, 0}, {2, 0, 0}})}}), ValidationError);
  // pr_2 kills coordinate 2, so U_1 = span(e_1 + e_2) projects into span{e_1, e_3}.
  CHECK_NOTHROW(FlagPoint(t, {{1, columns(3, {{1, 1, 0}})}, {2, span_of(3, {1, 3})}}));
}

TEST_CASE("cell membership") {
  const auto t = FlagType::full(3);
  CHECK(cell_membership(fixed_point_subspaces(AdmissibleCollection::standard(t))));
  CHECK_FALSE(cell_membership(fixed_point_subspaces(AdmissibleCollection(t, {{2}, {2, 3}}))));
  std::mt19937 rng(1);
  for (int n = 2; n <= 5; ++n)
    for (const auto& ft : all_flag_types(n)) {
      const RootPoset P(ft);
      std::vector<Rational> coords;
      for (std::size_t k = 0; k < P.size(); ++k) coords.emplace_back(static_cast<int>(rng() % 7) - 3, 1 + rng() % 3);
      const auto f = RadicalElement::from_coordinates(ft, coords);
      CHECK(cell_membership(cell_point(f)));
      CHECK_THROWS_AS(fiber_general(cell_point(f)), ValidationError);
    }
  RationalMatrix bad(3, 3);
  bad(0, 2) = 1;
  CHECK_THROWS_AS(RadicalElement(t, bad), ValidationError);
}

TEST_CASE("fiber examples") {
  const auto t = FlagType::full(3);
  const auto open = fiber_fixed_point(AdmissibleCollection::standard(t));
  CHECK(open.linear_dim == 0);
  CHECK(open.open_cell);

  const AdmissibleCollection a(t, {{2}, {2, 3}});
  const auto fa = fiber_fixed_point(a);
  CHECK(fa.linear_dim == 1);
  CHECK(fa.unit_basis == std::vector<PosetElement>{{2, 1}});
  const auto ga = fiber_general(fixed_point_subspaces(a));
  CHECK(ga.linear_dim == 1);
  CHECK(ga.is_coordinate);
  CHECK(ga.unit_basis == std::vector<PosetElement>{{2, 1}});

  const AdmissibleCollection b(t, {{3}, {1, 3}});
  CHECK(fiber_fixed_point(b).unit_basis == std::vector<PosetElement>{{3, 2}});
  CHECK(fiber_general(fixed_point_subspaces(b)).unit_basis == std::vector<PosetElement>{{3, 2}});

  CHECK_THROWS_AS(fiber_fixed_point(AdmissibleCollection::standard(FlagType(3, {1}))), ValidationError);
}

TEST_CASE("fiber_general basis satisfies the defining conditions") {
  for (const auto& J : admissible_collections(FlagType::full(4))) {
    const auto U = fixed_point_subspaces(J);
    if (cell_membership(U)) continue;
    const auto fib = fiber_general(U);
    CHECK(static_cast<int>(fib.basis.size()) == fib.linear_dim);
    for (const auto& v : fib.basis) {
      const auto f = RadicalElement::from_coordinates(U.flag_type(), v);
      for (int d : U.flag_type().d()) {
        const auto& Ud = U.subspace(d);
        // f_d as an n x n map: columns 1..d, rows d+1..n.
        RationalMatrix fd(4, 4);
        for (int i = d + 1; i <= 4; ++i)
          for (int j = 1; j <= d; ++j) fd(i - 1, j - 1) = f.matrix()(i - 1, j - 1);
        CHECK(column_span_contains(Ud, fd));
        auto top = Ud;
        for (int r = d; r < 4; ++r)
          for (std::size_t c = 0; c < top.cols(); ++c) top(r, c) = 0;
        CHECK((fd * top).is_zero());
      }
    }
  }
}

TEST_CASE("three fiber routes agree and vanish only at the open cell") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& J : admissible_collections(FlagType::full(n))) {
      const auto fixed = fiber_fixed_point(J);
      CHECK(fixed.linear_dim == fiber_quiver_dim(J));
      const auto U = fixed_point_subspaces(J);
      if (J.is_standard()) {
        CHECK(fixed.linear_dim == 0);
        CHECK(cell_membership(U));
      } else {
        CHECK(fixed.linear_dim > 0);
        CHECK_FALSE(cell_membership(U));
        const auto general = fiber_general(U);
        CHECK(general.linear_dim == fixed.linear_dim);
        CHECK(general.unit_basis == fixed.unit_basis);
      }
      for (int a = 2; a <= n; ++a)
        for (int b = 1; b < a; ++b) {
          const auto K = mutate(J, a, b);
          CHECK(fiber_fixed_point(K).linear_dim == fiber_quiver_dim(K));
        }
    }
}

TEST_CASE("grass_phi_fiber examples") {
  const auto open = grass_phi_fiber(span_of(4, {1, 2}), 2);
  CHECK(open.quotient_dim == 0);
  CHECK(open.intersection_dim == 0);
  const auto top = grass_phi_fiber(span_of(4, {3, 4}), 2);
  CHECK(top.quotient_dim == 2);
  CHECK(top.intersection_dim == 2);
  CHECK(top.linear_dim() == 4);
  const auto mixed = grass_phi_fiber(span_of(4, {1, 3}), 2);
  CHECK(mixed.quotient_dim == 1);
  CHECK(mixed.intersection_dim == 1);
  CHECK_THROWS_AS(grass_phi_fiber(columns(4, {{1, 0, 0, 0}, {2, 0, 0, 0}}), 2), ValidationError);
}

TEST_CASE("grass_psi_fiber examples") {
  RationalMatrix f(4, 4);
  f(2, 0) = 1;
  const auto r = grass_psi_fiber(f, 2);
  CHECK(r.k == 1);
  CHECK(r.m == 3);
  CHECK(r.dimension() == 2);
  f(3, 1) = 1;
  const auto full = grass_psi_fiber(f, 2);
  CHECK(full.k == 0);
  CHECK(full.m == 2);
  CHECK(full.dimension() == 0);
  RationalMatrix g(3, 3);
  g(1, 0) = 1;
  CHECK(grass_psi_fiber(g, 1).k == 0);
  CHECK(grass_psi_fiber(g, 1).m == 2);
  CHECK_THROWS_AS(grass_psi_fiber(RationalMatrix(3, 3), 1), ValidationError);
  g(0, 1) = 1;
  CHECK_THROWS_AS(grass_psi_fiber(g, 1), ValidationError);
}

TEST_CASE("Grassmannian flag types: general fibers match the phi formula") {
  std::mt19937 rng(2);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      const FlagType t(n, {d});
      for (int trial = 0; trial < 30; ++trial) {
        RationalMatrix U(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < d; ++c) U(r, c) = static_cast<int>(rng() % 5) - 2;
        // Every other trial kills a top row so the point lies on the boundary.
        if (trial % 2 == 0) {
          const auto row = rng() % static_cast<unsigned>(d);
          for (int c = 0; c < d; ++c) U(row, c) = 0;
        }
        if (U.rank() != static_cast<std::size_t>(d)) continue;
        const FlagPoint point(t, {{d, U}});
        const auto phi = grass_phi_fiber(U, d);
        if (cell_membership(point)) {
          CHECK(phi.linear_dim() == 0);
          continue;
        }
        CHECK(fiber_general(point).linear_dim == phi.linear_dim());
        CHECK(phi.quotient_dim == phi.intersection_dim);
      }
      for (const auto& J : admissible_collections(t)) {
        const auto U = fixed_point_subspaces(J);
        const auto phi = grass_phi_fiber(U.subspace(d), d);
        if (J.is_standard()) {
          CHECK(phi.linear_dim() == 0);
          continue;
        }
        CHECK(fiber_general(U).linear_dim == phi.linear_dim());
      }
    }
}
