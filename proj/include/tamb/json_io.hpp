#pragma once

#include <string>

#include "json.hpp"
#include "tamb/bispan.hpp"
#include "tamb/free_tambara.hpp"
#include "tamb/green.hpp"
#include "tamb/mackey.hpp"
#include "tamb/tnr.hpp"
#include "tamb/xi.hpp"

namespace tamb {

using json = nlohmann::json;

// Reads a file or, when the text starts with '{' or '[', parses it as
// inline JSON. InputError(BadJson) / InputError(FileNotFound).
json load_json(const std::string& path_or_text);

// "trivial", "C<n>", "D<n>", "S<n>", a JSON object {"table": [[...]]}, or a
// path to a file holding one.
GroupPtr group_from_ref(const std::string& ref);
GroupPtr group_from_json(const json& j);
json to_json(const FiniteGroup& g);

// {"size": m, "action": [[g.0, g.1, ...] per group element]},
// {"orbits": [[subgroup elements], ...]} or {"trivial": m}.
GSet gset_from_json(const GroupPtr& g, const json& j);
json to_json(const GSet& x);
// {"source": gset, "target": gset, "values": [...]}.
GMap gmap_from_json(const GroupPtr& g, const json& j);
json to_json(const GMap& f);
json to_json(const Subgroup& h);

json to_json(const Pullback& p);
json to_json(const ExponentialDiagram& d);
json to_json(const Bispan& b);
json to_json(const EffectiveElement& e);
json to_json(const MackeyTable& t);
json to_json(const MackeyTableMap& m);
json to_json(const TambaraReport& r);
json to_json(const CompatReport& r);
json to_json(const PolyReport& r);
json to_json(const GradedIso& iso);
json to_json(const PhiSubgroup& p);
json to_json(const XiSweepReport& r);
json to_json(const XiWitness& w);
json to_json(const TruncPoly& f);
json to_json(const Certificate& c);
json to_json(const NormCandidate& c);
json to_json(const DistinctReport& r);

// {"group": ref, "T": name, "sets": {name: gset}, "maps": {name: {"source":
// set name, "target": set name, "values": [...]}}}.
MapContext context_from_json(const json& j);

// Flattened "path = value" lines (text) or "path,value" rows (csv).
std::string flatten(const json& j, bool csv);

}  // namespace tamb
