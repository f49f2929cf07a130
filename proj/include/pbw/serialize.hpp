#ifndef PBW_SERIALIZE_HPP
#define PBW_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "pbw/admissible.hpp"
#include "pbw/geometry.hpp"
#include "pbw/polytope.hpp"
#include "pbw/quiver.hpp"
#include "pbw/rep_oracle.hpp"

namespace pbw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const FlagType& type);
FlagType flag_type_from_json(const Json& j);

Json to_json(const Weight& w);
Json to_json(PosetElement e);
Json to_json(const std::vector<PosetElement>& elements);
Json to_json(const Chain& c);

/// {"flag_type", "points": [[[[i,j],v], ...], ...]}; zero coordinates omitted.
Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

Json to_json(const AdmissibleCollection& J);
AdmissibleCollection admissible_from_json(const FlagType& type, const Json& j);

/// {"flag_type", "subspaces": {"d": n rows of d "p/q" strings}}.
Json to_json(const FlagPoint& U);
FlagPoint flag_point_from_json(const Json& j);

Json to_json(const FiberDescription& f);
Json to_json(const QuiverModule& m);
Json to_json(const RelationSpec& spec, const HilbertReport& r);

/// "t,count" lines after a header.
std::string dilation_csv(const std::vector<std::uint64_t>& counts);

}  // namespace pbw

#endif
