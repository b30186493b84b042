#include <cstdio>
#include <iostream>
#include <iterator>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "tamb/json_io.hpp"

using namespace tamb;

namespace {

struct Options {
  std::string format = "json";
  bool parallel = false;
  unsigned seed = 20240601u;
  std::string group = "trivial";
  std::string t_set, x_set, i_map, j_map, f_map, g_map, subgroup, ctx, expr, input;
  int k = 4;
  int n = 2;
  int max_degree = 2;
  int p = 2;
  int s = 2;
  int D = -1;
  int trials = 20;
  int max_size = 5;
  bool corrupt = false;
};

// Data on stdout; the verdict decides the exit code.
int emit(const Options& o, const json& j, bool ok = true) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << flatten(j, o.format == "csv");
  return ok ? 0 : 1;
}

ExecPolicy policy(const Options& o) { return o.parallel ? ExecPolicy::parallel : ExecPolicy::serial; }

GroupPtr group_of(const Options& o) { return group_from_ref(o.group); }

GSet gset_arg(const GroupPtr& g, const std::string& arg, const char* flag) {
  if (arg.empty()) throw InputError("MissingArgument", std::string(flag) + " is required");
  // shorthand: "free", "point", "free+point"
  if (arg == "point") return GSet::point(g);
  if (arg == "free") return make_orbit(g, trivial_subgroup(g));
  if (arg == "free+point") return coproduct(make_orbit(g, trivial_subgroup(g)), GSet::point(g)).object;
  json j = load_json(arg);
  if (j.is_object() && j.contains("gset")) j = j.at("gset");
  return gset_from_json(g, j);
}

GMap gmap_arg(const GroupPtr& g, const std::string& arg, const char* flag) {
  if (arg.empty()) throw InputError("MissingArgument", std::string(flag) + " is required");
  return gmap_from_json(g, load_json(arg));
}

Subgroup subgroup_arg(const GroupPtr& g, const std::string& arg) {
  if (arg.empty()) throw InputError("MissingArgument", "--subgroup is required");
  return Subgroup(g, load_json(arg).get<std::vector<int>>());
}

json orbits_json(const GSet& x) {
  json out = json::array();
  for (const auto& orb : orbit_decompose(x))
    out.push_back(json{{"points", orb.points}, {"representative", orb.representative},
                       {"stabilizer", to_json(orb.stabilizer)}});
  return out;
}

json subgroups_json(const GroupPtr& g) {
  json subs = json::array();
  for (const auto& h : all_subgroups(g)) subs.push_back(to_json(h));
  json classes = json::array();
  for (const auto& c : conj_classes(g)) {
    json members = json::array();
    for (const auto& h : c.members) members.push_back(to_json(h));
    classes.push_back(members);
  }
  return json{{"count", subs.size()}, {"subgroups", subs}, {"conjugacy_classes", classes}};
}

// Random G-set with at most max_size points, built from orbits.
GSet random_gset(const GroupPtr& g, int max_size, std::mt19937& rng) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> stabs;
  int size = 0;
  int want = static_cast<int>(rng() % static_cast<unsigned>(max_size + 1));
  for (int tries = 0; tries < 20 && size < want; ++tries) {
    const auto& h = subs[rng() % subs.size()];
    if (size + h.index() > max_size) continue;
    stabs.push_back(h);
    size += h.index();
  }
  return disjoint_union_of_orbits(g, stabs);
}

std::optional<GMap> random_gmap(const GSet& x, const GSet& y, std::mt19937& rng) {
  auto orbs = orbit_decompose(x);
  std::vector<int> imgs;
  for (const auto& orb : orbs) {
    std::vector<int> ok;
    for (int q = 0; q < y.size(); ++q) {
      auto st = stabilizer(y, q);
      bool fixes = true;
      for (int h : orb.stabilizer.elements()) fixes = fixes && std::binary_search(st.begin(), st.end(), h);
      if (fixes) ok.push_back(q);
    }
    if (ok.empty()) return std::nullopt;
    imgs.push_back(ok[rng() % ok.size()]);
  }
  return extend_from_orbit_reps(x, y, imgs);
}

int cmd_group(const std::string& sub, const Options& o) {
  auto ref = o.input.empty() ? o.group : o.input;
  auto g = group_from_ref(ref);
  if (sub == "validate") return emit(o, json{{"valid", true}, {"order", g->order()}});
  return emit(o, subgroups_json(g));
}

int cmd_gset(const std::string& sub, const Options& o) {
  auto g = group_of(o);
  if (sub == "validate" || sub == "orbits") {
    auto x = gset_arg(g, o.input.empty() ? o.x_set : o.input, "input");
    if (sub == "validate") return emit(o, json{{"valid", true}, {"size", x.size()}, {"orbits", orbit_decompose(x).size()}});
    return emit(o, json{{"size", x.size()}, {"orbits", orbits_json(x)}});
  }
  if (sub == "subgroups") return emit(o, subgroups_json(g));
  if (sub == "pullback") return emit(o, to_json(pullback(gmap_arg(g, o.f_map, "--f"), gmap_arg(g, o.g_map, "--g"))));
  if (sub == "depprod") {
    auto i = gmap_arg(g, o.i_map, "--i"), j = gmap_arg(g, o.j_map, "--j");
    auto d = dependent_product(i, j);
    auto chk = is_exponential(i, j, d.e, d.pi2, d.p);
    auto out = to_json(d);
    out["exponential"] = chk.exponential;
    return emit(o, out, chk.exponential);
  }
  // depprod-check: randomized dependent products, each checked against the
  // universal property through is_exponential
  std::mt19937 rng(o.seed);
  int done = 0, failed = 0;
  json fails = json::array();
  for (int t = 0; t < o.trials * 20 && done < o.trials; ++t) {
    auto x = random_gset(g, o.max_size, rng), y = random_gset(g, o.max_size, rng), z = random_gset(g, o.max_size, rng);
    auto i = random_gmap(x, y, rng);
    auto j = random_gmap(y, z, rng);
    if (!i || !j) continue;
    auto d = dependent_product(*i, *j);
    auto chk = is_exponential(*i, *j, d.e, d.pi2, d.p);
    ++done;
    if (!chk.exponential) {
      ++failed;
      fails.push_back(chk.reason);
    }
  }
  return emit(o, json{{"seed", o.seed}, {"instances", done}, {"failures", fails}}, failed == 0);
}

int cmd_tambara(const std::string& sub, const Options& o) {
  auto g = group_of(o);
  if (sub == "res-compat") {
    auto T = gset_arg(g, o.t_set, "--t");
    auto r = restriction_compat(subgroup_arg(g, o.subgroup), T, std::min(o.k, 2), o.max_degree, policy(o));
    return emit(o, to_json(r), r.ok());
  }
  auto T = gset_arg(g, o.t_set, "--t");
  if (sub == "basis") {
    auto X = o.x_set.empty() ? GSet::point(g) : gset_arg(g, o.x_set, "--x");
    auto keys = ft_basis(T, X, o.n >= 0 ? std::optional<int>(o.n) : std::nullopt, o.max_degree);
    json items = json::array();
    for (const auto& k : keys)
      items.push_back(json{{"key", k}, {"label", key_to_string(k)}, {"degree", key_degree(k)}});
    return emit(o, json{{"count", keys.size()}, {"basis", items}});
  }
  if (sub == "ranks") {
    json rows = json::array();
    for (int d = 0; d <= o.max_degree; ++d) {
      auto t = ft_table(T, d, policy(o));
      for (const auto& l : t.levels) rows.push_back(json{{"degree", d}, {"subgroup", to_json(l.subgroup)}, {"rank", l.rank()}});
    }
    return emit(o, json{{"ranks", rows}});
  }
  if (sub == "verify") {
    VerifyOptions vo;
    vo.k = o.k;
    vo.max_degree = o.max_degree;
    vo.corrupt_norm = o.corrupt;
    vo.policy = policy(o);
    auto r = verify_semi_tambara(T, vo);
    return emit(o, to_json(r), r.ok());
  }
  auto iso = sub == "iso0" ? ft0_iso(T, policy(o)) : ft1_iso(T, policy(o));
  return emit(o, to_json(iso));
}

int cmd_xi(const std::string& sub, const Options& o) {
  auto g = group_of(o);
  if (sub == "family") {
    json fam = json::array();
    for (const auto& p : family_FGn(g, o.n)) fam.push_back(to_json(p));
    return emit(o, json{{"n", o.n}, {"count", fam.size()}, {"family", fam}});
  }
  auto T = gset_arg(g, o.t_set.empty() ? "free" : o.t_set, "--t");
  if (sub == "check") {
    auto r = xi_naturality_sweep(T, o.n, o.corrupt, policy(o));
    return emit(o, to_json(r), r.ok());
  }
  json ws = json::array();
  bool ok = true;
  for (const auto& w : xi_surjectivity(T, o.n, policy(o))) {
    ws.push_back(to_json(w));
    ok = ok && w.verified;
  }
  return emit(o, json{{"n", o.n}, {"count", ws.size()}, {"witnesses", ws}}, ok);
}

int cmd_green(const std::string& sub, const Options& o) {
  if (sub == "obstruct") {
    auto c = obstruction_61(o.p, o.D < 0 ? o.p : o.D);
    return emit(o, to_json(c), c.no_tambara_structure);
  }
  auto cands = enumerate_63(o.p, o.s, o.D < 0 ? o.p : o.D, policy(o));
  auto rep = check_distinct(cands, o.p, o.s);
  json list = json::array();
  for (const auto& c : cands) list.push_back(to_json(c));
  return emit(o, json{{"candidates", list}, {"distinct", to_json(rep)}}, rep.ok());
}

int cmd_tnr(const Options& o) {
  if (o.ctx.empty()) throw InputError("MissingArgument", "--ctx is required");
  auto ctx = context_from_json(load_json(o.ctx));
  std::string text = o.expr;
  if (text.empty()) text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  auto e = parse_tnr(text);
  auto port = typecheck(e, ctx).root;
  auto v = evaluate(e, ctx);
  return emit(o, json{{"expression", pretty_print(e)}, {"port", port}, {"element", to_json(v)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free Tambara functor toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--parallel", o.parallel, "Use the OpenMP kernels");
  app.add_option("--seed", o.seed, "Seed for randomized runs");

  auto add_group = [&](CLI::App* c) { c->add_option("--group", o.group, "trivial, C<n>, D<n>, S<n> or a JSON file"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* c = parent->add_subcommand(name, help);
    add_group(c);
    return c;
  };

  auto* group = app.add_subcommand("group", "Finite groups")->require_subcommand(1);
  for (const char* s : {"validate", "subgroups"}) leaf(group, s, "")->add_option("input", o.input, "Group reference");

  auto* gset = app.add_subcommand("gset", "Finite G-sets")->require_subcommand(1);
  for (const char* s : {"validate", "orbits"}) leaf(gset, s, "")->add_option("input", o.input, "G-set JSON");
  leaf(gset, "subgroups", "Subgroups of the group");
  auto* pb = leaf(gset, "pullback", "Pullback of f and g");
  pb->add_option("--f", o.f_map)->required();
  pb->add_option("--g", o.g_map)->required();
  auto* dp = leaf(gset, "depprod", "Dependent product of i and j");
  dp->add_option("--i", o.i_map)->required();
  dp->add_option("--j", o.j_map)->required();
  auto* dc = leaf(gset, "depprod-check", "Randomized dependent products");
  dc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  dc->add_option("--max-size", o.max_size)->check(CLI::PositiveNumber);

  auto* tamb = app.add_subcommand("tambara", "Free semi-Tambara functor")->require_subcommand(1);
  for (const char* s : {"basis", "ranks", "verify", "iso0", "iso1", "res-compat"}) {
    auto* c = leaf(tamb, s, "");
    c->add_option("--t", o.t_set, "Generator G-set: JSON, or free / point / free+point");
    c->add_option("--max-degree", o.max_degree)->check(CLI::NonNegativeNumber);
    if (std::string(s) == "basis") {
      c->add_option("--x", o.x_set);
      c->add_option("--n", o.n, "Degree; -1 for all up to --max-degree");
    }
    if (std::string(s) == "verify" || std::string(s) == "res-compat") c->add_option("-k", o.k)->check(CLI::PositiveNumber);
    if (std::string(s) == "verify") c->add_flag("--corrupt", o.corrupt, "Perturb norms (negative control)");
    if (std::string(s) == "res-compat") c->add_option("--subgroup", o.subgroup, "JSON list of elements")->required();
  }

  auto* xi = app.add_subcommand("xi", "Comparison map")->require_subcommand(1);
  for (const char* s : {"family", "check", "surjectivity"}) {
    auto* c = leaf(xi, s, "");
    c->add_option("--n", o.n)->check(CLI::PositiveNumber);
    if (std::string(s) != "family") c->add_option("--t", o.t_set);
    if (std::string(s) == "check") c->add_flag("--corrupt", o.corrupt, "Drop the twist (negative control)");
  }

  auto* green = app.add_subcommand("green", "Green functors on C_p")->require_subcommand(1);
  for (const char* s : {"obstruct", "enumerate"}) {
    auto* c = green->add_subcommand(s, "");
    c->add_option("-p", o.p)->check(CLI::PositiveNumber);
    c->add_option("-D", o.D, "Degree cap (default p)");
    if (std::string(s) == "enumerate") c->add_option("-s", o.s)->check(CLI::NonNegativeNumber);
  }

  auto* tnr = app.add_subcommand("tnr", "Expression language")->require_subcommand(1);
  auto* ev = tnr->add_subcommand("eval", "Evaluate an expression");
  ev->add_option("--ctx", o.ctx, "Context JSON")->required();
  ev->add_option("expr", o.expr, "Expression (stdin when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  apply_env_overrides(limits());
  try {
    auto* top = app.get_subcommands().front();
    auto* sub = top->get_subcommands().front();
    const std::string t = top->get_name(), s = sub->get_name();
    if (t == "group") return cmd_group(s, o);
    if (t == "gset") return cmd_gset(s, o);
    if (t == "tambara") return cmd_tambara(s, o);
    if (t == "xi") return cmd_xi(s, o);
    if (t == "green") return cmd_green(s, o);
    return cmd_tnr(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
