#include "tamb/json_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "tamb/error.hpp"

namespace tamb {

json load_json(const std::string& path_or_text) {
  std::string text = path_or_text;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
    std::ifstream in(path_or_text);
    if (!in) throw InputError("FileNotFound", "cannot open '" + path_or_text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("BadJson", e.what());
  }
}

namespace {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError("BadJson", std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError("BadJson", std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError("BadJson", std::string(what) + ": " + e.what());
  }
}

}  // namespace

GroupPtr group_from_ref(const std::string& ref) {
  std::smatch m;
  static const std::regex named("^([CDS])([0-9]+)$");
  if (ref == "trivial" || ref == "e" || ref == "C1") return trivial_group();
  if (std::regex_match(ref, m, named)) {
    int n = std::stoi(m[2]);
    if (n < 1 || n > 720) throw InputError("BadGroup", "group size out of range in '" + ref + "'");
    if (m[1] == "C") return cyclic_group(n);
    if (m[1] == "D") return dihedral_group(n);
    if (n > 6) throw InputError("BadGroup", "S<n> is supported for n <= 6");
    return symmetric_group(n);
  }
  return group_from_json(load_json(ref));
}

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return group_from_ref(j.get<std::string>());
  if (j.is_object() && j.contains("group")) return group_from_json(j.at("group"));
  auto table = get<std::vector<std::vector<int>>>(j, "table");
  return validate_group(table);
}

json to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"table", g.table()}}; }

GSet gset_from_json(const GroupPtr& g, const json& j) {
  if (j.is_object() && j.contains("orbits")) {
    std::vector<Subgroup> stabs;
    for (const auto& o : j.at("orbits")) stabs.emplace_back(g, as<std::vector<int>>(o, "orbit stabilizer"));
    return disjoint_union_of_orbits(g, stabs);
  }
  if (j.is_object() && j.contains("trivial")) return GSet::trivial(g, get<int>(j, "trivial"));
  int size = get<int>(j, "size");
  auto rows = get<std::vector<std::vector<int>>>(j, "action");
  if (static_cast<int>(rows.size()) != g->order()) throw InputError("BadAction", "need one action row per group element");
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != size) throw InputError("BadAction", "action row has the wrong length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return GSet(g, size, flat);
}

json to_json(const GSet& x) { return json{{"size", x.size()}, {"action", x.action_rows()}}; }

GMap gmap_from_json(const GroupPtr& g, const json& j) {
  auto src = gset_from_json(g, j.at("source"));
  auto tgt = gset_from_json(g, j.at("target"));
  return make_map(src, tgt, get<std::vector<int>>(j, "values"));
}

json to_json(const GMap& f) { return json{{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"values", f.values}}; }

json to_json(const Subgroup& h) { return h.elements(); }

json to_json(const Pullback& p) {
  json pairs = json::array();
  for (const auto& [a, b] : p.pairs) pairs.push_back({a, b});
  return json{{"object", to_json(p.object)}, {"p1", p.p1.values}, {"p2", p.p2.values}, {"pairs", pairs}};
}

json to_json(const ExponentialDiagram& d) {
  return json{{"pi", to_json(d.pi)},
              {"a", to_json(d.a)},
              {"p", d.p.values},
              {"e", d.e.values},
              {"pi2", d.pi2.values},
              {"section_base", d.section_base},
              {"section_values", d.section_values}};
}

json to_json(const Bispan& b) {
  return json{{"T", to_json(b.T)}, {"U", to_json(b.U)}, {"V", to_json(b.V)}, {"X", to_json(b.X)},
              {"a", b.a},          {"b", b.b},          {"c", b.c}};
}

json to_json(const EffectiveElement& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back(json{{"key", k}, {"label", key_to_string(k)}, {"count", c}, {"degree", key_degree(k)}});
  return json{{"T", to_json(e.T())}, {"X", to_json(e.X())}, {"components", e.component_count()}, {"terms", terms}};
}

json to_json(const MackeyTable& t) {
  json levels = json::array();
  for (const auto& l : t.levels)
    levels.push_back(json{{"subgroup", to_json(l.subgroup)}, {"rank", l.rank()}, {"basis", l.labels}});
  json maps = json::array();
  for (const auto& m : t.maps)
    maps.push_back(json{{"from", m.from}, {"to", m.to}, {"coset", m.coset}, {"restriction", m.restriction},
                        {"transfer", m.transfer}});
  return json{{"group_order", t.group->order()}, {"semi", t.semi}, {"levels", levels}, {"maps", maps}};
}

json to_json(const MackeyTableMap& m) { return json{{"components", m.components}}; }

json to_json(const TambaraReport& r) {
  return json{{"ok", r.ok()}, {"checks", r.checks}, {"failures", r.failures}};
}

json to_json(const CompatReport& r) {
  return json{{"ok", r.ok()}, {"basis_pairs", r.basis_pairs}, {"checks", r.checks}, {"failures", r.failures}};
}

json to_json(const PolyReport& r) {
  return json{{"ok", r.ok()},
              {"basis_counts", r.basis_counts},
              {"monomial_counts", r.monomial_counts},
              {"products_checked", r.products_checked},
              {"failures", r.failures}};
}

json to_json(const GradedIso& iso) {
  json levels = json::array();
  for (std::size_t l = 0; l < iso.source.levels.size(); ++l) {
    json pairs = json::array();
    const auto& c = iso.map.components[l];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (c[i][j] != 0) pairs.push_back({iso.source.levels[l].labels[j], iso.target.levels[l].labels[i]});
    levels.push_back(json{{"subgroup", to_json(iso.source.levels[l].subgroup)}, {"pairs", pairs}});
  }
  return json{{"levels", levels}, {"maps_checked", iso.source.maps.size()}};
}

json to_json(const PhiSubgroup& p) {
  json phi = json::array();
  for (int h : p.H.elements()) phi.push_back(p.perm(h));
  return json{{"H", to_json(p.H)}, {"n", p.n}, {"phi", phi}};
}

json to_json(const XiSweepReport& r) {
  return json{{"ok", r.ok()},
              {"pairs", r.pairs},
              {"connections", r.connections},
              {"checks", r.checks},
              {"failures", r.failures}};
}

json to_json(const XiWitness& w) {
  return json{{"basis", key_to_string(w.basis)},
              {"key", w.basis},
              {"phi", to_json(w.phi)},
              {"f", w.f},
              {"adjoint", w.adjoint},
              {"verified", w.verified}};
}

json to_json(const TruncPoly& f) { return f.to_string(); }

json to_json(const Certificate& c) {
  json cands = json::array();
  for (const auto& k : c.candidates)
    cands.push_back(json{{"candidate", k.candidate.to_string()},
                         {"restriction", k.restriction.to_string()},
                         {"frobenius", k.frobenius},
                         {"reason", k.reason}});
  return json{{"p", c.p},
              {"D", c.D},
              {"target", c.target},
              {"target_nonconstant", c.target_nonconstant},
              {"candidates", cands},
              {"no_tambara_structure", c.no_tambara_structure}};
}

json to_json(const NormCandidate& c) {
  return json{{"image", c.image.to_string()},
              {"multiplicative_checks", c.multiplicative_checks},
              {"skipped_overflow", c.skipped_overflow}};
}

json to_json(const DistinctReport& r) {
  json dups = json::array();
  for (const auto& [a, b] : r.duplicates) dups.push_back({a, b});
  return json{{"ok", r.ok()},
              {"count", r.count},
              {"distinct", r.distinct},
              {"duplicates", dups},
              {"monomial_bound", r.monomial_bound},
              {"meets_bound", r.meets_bound}};
}

MapContext context_from_json(const json& j) {
  if (!j.is_object()) throw InputError("BadJson", "context must be an object");
  GroupPtr g = group_from_json(j.contains("group") ? j.at("group") : json("trivial"));
  MapContext ctx;
  ctx.T = get<std::string>(j, "T");
  if (j.contains("sets"))
    for (const auto& [name, s] : j.at("sets").items()) ctx.add_set(name, gset_from_json(g, s));
  ctx.set(ctx.T);
  if (j.contains("maps"))
    for (const auto& [name, m] : j.at("maps").items())
      ctx.add_map(name, get<std::string>(m, "source"), get<std::string>(m, "target"),
                  get<std::vector<int>>(m, "values"));
  return ctx;
}

namespace {

void flatten_into(const json& j, const std::string& path, bool csv, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten_into(v, path.empty() ? k : path + "." + k, csv, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], path + "[" + std::to_string(i) + "]", csv, out);
  } else {
    std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    if (csv) {
      if (v.find_first_of(",\"\n") != std::string::npos) {
        std::string q;
        for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        v = "\"" + q + "\"";
      }
      out << path << "," << v << "\n";
    } else {
      out << path << " = " << v << "\n";
    }
  }
}

}  // namespace

std::string flatten(const json& j, bool csv) {
  std::ostringstream out;
  if (csv) out << "path,value\n";
  flatten_into(j, "", csv, out);
  return out.str();
}

}  // namespace tamb
