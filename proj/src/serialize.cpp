#include "pbw/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace pbw {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const FlagType& type) { return Json{{"n", type.n()}, {"d", type.d()}}; }

FlagType flag_type_from_json(const Json& j) {
  return guarded("flag_type", [&] { return FlagType(j.at("n").get<int>(), j.at("d").get<std::vector<int>>()); });
}

Json to_json(const Weight& w) { return Json(w.m()); }

Json to_json(PosetElement e) { return Json::array({e.i, e.j}); }

Json to_json(const std::vector<PosetElement>& elements) {
  Json out = Json::array();
  for (auto e : elements) out.push_back(to_json(e));
  return out;
}

Json to_json(const Chain& c) { return to_json(c.elements); }

Json to_json(const PointSet& s) {
  const RootPoset poset(s.flag_type);
  Json points = Json::array();
  for (const auto& p : s.points) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < p.x.size(); ++k)
      if (p.x[k] != 0) entries.push_back(Json::array({to_json(poset[k]), p.x[k]}));
    points.push_back(std::move(entries));
  }
  return Json{{"flag_type", to_json(s.flag_type)}, {"size", s.size()}, {"points", std::move(points)}};
}

PointSet point_set_from_json(const Json& j) {
  return guarded("point set", [&] {
    PointSet s{flag_type_from_json(j.at("flag_type")), {}, Provenance::enumerated};
    const RootPoset poset(s.flag_type);
    for (const auto& entries : j.at("points")) {
      LatticePoint p{std::vector<int>(poset.size(), 0)};
      for (const auto& entry : entries) {
        const PosetElement e{entry.at(0).at(0).get<int>(), entry.at(0).at(1).get<int>()};
        const auto k = poset.index_of(e);
        if (!k) throw ValidationError("point set: (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                      ") is not a poset element");
        const int v = entry.at(1).get<int>();
        if (v < 0) throw ValidationError("point set: negative coordinate");
        p.x[*k] = v;
      }
      s.points.push_back(std::move(p));
    }
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    return s;
  });
}

Json to_json(const AdmissibleCollection& J) { return Json(J.sets()); }

AdmissibleCollection admissible_from_json(const FlagType& type, const Json& j) {
  return guarded("admissible collection",
                 [&] { return AdmissibleCollection(type, j.get<std::vector<IndexSet>>()); });
}

Json to_json(const FlagPoint& U) {
  Json subspaces = Json::object();
  for (const auto& [d, M] : U.subspaces()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(to_string(M(r, c)));
      rows.push_back(std::move(row));
    }
    subspaces[std::to_string(d)] = std::move(rows);
  }
  return Json{{"flag_type", to_json(U.flag_type())}, {"subspaces", std::move(subspaces)}};
}

FlagPoint flag_point_from_json(const Json& j) {
  return guarded("flag point", [&] {
    FlagType type = flag_type_from_json(j.at("flag_type"));
    std::map<int, RationalMatrix> subspaces;
    for (const auto& [key, rows] : j.at("subspaces").items()) {
      int d = 0;
      try {
        d = std::stoi(key);
      } catch (const std::exception&) {
        throw ValidationError("flag point: subspace key '" + key + "' is not an integer");
      }
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(type.n()))
        throw ValidationError("flag point: U_" + key + " needs " + std::to_string(type.n()) + " rows");
      RationalMatrix M(rows.size(), static_cast<std::size_t>(d));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(d))
          throw ValidationError("flag point: U_" + key + " rows need " + key + " entries");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
          M(r, c) = rows[r][c].is_string() ? parse_rational(rows[r][c].get<std::string>())
                                           : Rational(rows[r][c].get<long>());
      }
      subspaces.emplace(d, std::move(M));
    }
    return FlagPoint(std::move(type), std::move(subspaces));
  });
}

Json to_json(const FiberDescription& f) {
  Json out{{"linear_dim", f.linear_dim}, {"projective_dim", f.projective_dim()}, {"open_cell", f.open_cell}};
  if (f.is_coordinate) {
    out["basis"] = to_json(f.unit_basis);
  } else {
    Json basis = Json::array();
    for (const auto& v : f.basis) {
      Json row = Json::array();
      for (const auto& q : v) row.push_back(to_string(q));
      basis.push_back(std::move(row));
    }
    out["dense_basis"] = std::move(basis);
  }
  return out;
}

Json to_json(const QuiverModule& m) {
  Json summands = Json::array();
  for (const auto& s : m.summands()) summands.push_back(Json::array({s.a, s.b}));
  return Json{{"summands", std::move(summands)}, {"dimension_vector", m.dimension_vector()}};
}

Json to_json(const RelationSpec& spec, const HilbertReport& r) {
  return Json{{"flag_type", to_json(spec.type)}, {"lambda", to_json(spec.weight)}, {"M", spec.M},
              {"K", spec.K},                     {"quotient_dims", r.quotient_dims},
              {"lattice_dims", r.lattice_dims},  {"match", r.match},
              {"tail_zero", r.tail_zero}};
}

std::string dilation_csv(const std::vector<std::uint64_t>& counts) {
  std::ostringstream os;
  os << "t,count\n";
  for (std::size_t t = 0; t < counts.size(); ++t) os << t + 1 << "," << counts[t] << "\n";
  return os.str();
}

}  // namespace pbw
