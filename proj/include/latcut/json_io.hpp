#ifndef LATCUT_JSON_IO_HPP
#define LATCUT_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "latcut/cgf.hpp"
#include "latcut/exactgeo.hpp"
#include "latcut/groupfn.hpp"
#include "latcut/latticefree.hpp"
#include "latcut/lifting.hpp"
#include "latcut/oracle.hpp"

namespace latcut {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rationals serialize as strings "p/q" (or "p" when q = 1).
Json to_json(const Rat& x);
Json to_json(const RatVec& v);
Json to_json(const HPolyhedron& P);
Json to_json(const VPolytope& V);
Json to_json(const IntBox& box);
Json to_json(const SSpec& S);
Json to_json(const SFreeScene& scene);
Json to_json(const MaxForm& f);
Json to_json(const CornerTableau& t);
Json to_json(const Cut& cut);
Json to_json(const PwlPeriodic1D& pi);
Json to_json(const PwlComplex2D& pi);
Json to_json(const MinimalityReport& report);
Json to_json(const Class2D& cls);
Json to_json(const TranslationGroup& W);
Json to_json(const LiftingRegion& region);
Json to_json(const ExtremeCertificate& cert);
Json to_json(const ValidityVerdict& verdict, const EnumBudget& budget);

Rat rat_from_json(const Json& j);
RatVec vec_from_json(const Json& j);
HPolyhedron polyhedron_from_json(const Json& j);
IntBox intbox_from_json(const Json& j);
SSpec sspec_from_json(const Json& j);
SFreeScene scene_from_json(const Json& j);
MaxForm maxform_from_json(const Json& j);
CornerTableau tableau_from_json(const Json& j);
Cut cut_from_json(const Json& j);
PwlPeriodic1D pwl1d_from_json(const Json& j);
PwlComplex2D complex2d_from_json(const Json& j);
LiftingRegion region_from_json(const Json& j);
EnumBudget budget_from_json(const Json& j);

// Wraps a payload with the schema version tag carried by every file.
Json stamp(Json j);
void check_schema(const Json& j);

std::string dump_json(const Json& j);

}  // namespace latcut

#endif
