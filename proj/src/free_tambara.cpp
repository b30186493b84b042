#include "tamb/free_tambara.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tamb/error.hpp"
#include "tamb/parallel.hpp"

namespace tamb {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string vec_string(const std::vector<int>& v) {
  std::ostringstream o;
  o << "[";
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << "]";
  return o.str();
}

std::vector<int> fixed_points(const GSet& s, const std::vector<int>& k) {
  std::vector<int> out;
  for (int p = 0; p < s.size(); ++p) {
    bool ok = true;
    for (int e : k)
      if (s.act(e, p) != p) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

Coeffs to_coeffs(const EffectiveElement& e) {
  Coeffs c;
  for (const auto& [k, n] : e.terms()) c[k] = static_cast<std::int64_t>(n);
  return c;
}

}  // namespace

std::vector<OrbitKey> ft_basis(const GSet& T, const GSet& X, std::optional<int> n, int max_degree) {
  const auto& g = X.group();
  if (!same_group(T.group(), g)) throw InputError("GroupMismatch", "generator and evaluation set over different groups");
  int lo = n ? *n : 0, hi = n ? *n : max_degree;
  if (lo < 0) throw InputError("BadDegree", "degree must be nonnegative");
  auto subs = all_subgroups(g);
  std::set<OrbitKey> keys;
  std::uint64_t budget = limits().enum_cap;
  for (const auto& cls : conj_classes(g)) {
    const Subgroup& K = cls.representative;
    auto xs = fixed_points(X, K.elements());
    if (xs.empty()) continue;
    // K-orbit types on the fiber, one (L, t) per K-conjugacy class
    struct Entry {
      std::vector<int> L;
      int t;
      int weight;
    };
    std::vector<Entry> entries;
    std::set<std::pair<std::vector<int>, int>> seen;
    for (const auto& L : subs) {
      if (!L.is_subgroup_of(K)) continue;
      for (int t : fixed_points(T, L.elements())) {
        std::pair<std::vector<int>, int> best{L.elements(), t};
        for (int k : K.elements()) {
          std::pair<std::vector<int>, int> c{L.conjugate(k).elements(), T.act(k, t)};
          if (c < best) best = c;
        }
        if (seen.insert(best).second) entries.push_back({best.first, best.second, K.order() / L.order()});
      }
    }
    std::vector<int> pick;
    auto emit = [&](int x) {
      OrbitKeyView view{K.elements(), x, {}};
      for (int e : pick) view.fiber.emplace_back(entries[e].L, entries[e].t);
      auto b = realize_key(T, X, make_key(view));
      auto cls2 = bispan_canonical(b);
      if (cls2.components.size() != 1) throw InternalError("basis diagram with V not an orbit");
      keys.insert(cls2.components[0]);
    };
    auto rec = [&](auto&& self, std::size_t start, int left, int x) -> void {
      if (budget-- == 0) throw ResourceBound("enum_cap", "free Tambara basis enumeration exceeded the budget");
      if (left == 0) {
        emit(x);
        return;
      }
      for (std::size_t e = start; e < entries.size(); ++e) {
        if (entries[e].weight > left) continue;
        pick.push_back(static_cast<int>(e));
        self(self, e, left - entries[e].weight, x);
        pick.pop_back();
      }
    };
    for (int x : xs)
      for (int d = lo; d <= hi; ++d) rec(rec, 0, d, x);
  }
  return {keys.begin(), keys.end()};
}

int FreeTambaraWindow::object_index(const GSet& x) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == x) return static_cast<int>(i);
  return -1;
}

FreeTambaraWindow build_window(const GSet& T, int k, int max_degree, ExecPolicy policy) {
  FreeTambaraWindow w;
  w.T = T;
  w.k = k;
  w.max_degree = max_degree;
  w.objects = gsets_up_to(T.group(), k);
  w.basis = indexed_map<std::map<int, std::vector<OrbitKey>>>(w.objects.size(), policy, [&](std::size_t i) {
    std::map<int, std::vector<OrbitKey>> by_degree;
    for (int d = 0; d <= max_degree; ++d) by_degree[d] = ft_basis(T, w.objects[i], d);
    return by_degree;
  });
  return w;
}

IntMatrix ft_structure(const FreeTambaraWindow& w, const GMap& f, StructureKind kind, int degree) {
  int xs = w.object_index(f.source), ys = w.object_index(f.target);
  if (xs < 0 || ys < 0) throw InputError("WindowMiss", "map endpoints are not window objects");
  if (degree < 0 || degree > w.max_degree) throw InputError("WindowMiss", "degree outside the window");
  const auto& bx = w.basis[xs].at(degree);
  const auto& by = w.basis[ys].at(degree);
  const auto& from = kind == StructureKind::restriction ? by : bx;
  const auto& to = kind == StructureKind::restriction ? bx : by;
  std::map<OrbitKey, int> pos;
  for (std::size_t i = 0; i < to.size(); ++i) pos[to[i]] = static_cast<int>(i);
  IntMatrix m(to.size(), std::vector<std::int64_t>(from.size(), 0));
  for (std::size_t j = 0; j < from.size(); ++j) {
    auto e = EffectiveElement::basis(w.T, kind == StructureKind::restriction ? f.target : f.source, from[j]);
    auto img = kind == StructureKind::restriction ? restrict(e, f) : transfer(e, f);
    for (const auto& [k, c] : img.terms()) {
      auto it = pos.find(k);
      if (it == pos.end()) throw InternalError("structure map leaves the degree");
      m[it->second][j] += static_cast<std::int64_t>(c);
    }
  }
  return m;
}

EffectiveElement ft_norm(const GSet& T, const GMap& f, const EffectiveElement& e) {
  if (!(e.T() == T)) throw InputError("PortMismatch", "element has a different generator");
  return norm(e, f);
}

MackeyTable ft_table(const GSet& T, int n, ExecPolicy policy) {
  FunctorSource src;
  src.basis = [T, n](const GSet& orbit) { return ft_basis(T, orbit, n); };
  src.restrict = [T](const GMap& f, const std::vector<int>& key) {
    return to_coeffs(restrict(EffectiveElement::basis(T, f.target, key), f));
  };
  src.transfer = [T](const GMap& f, const std::vector<int>& key) {
    return to_coeffs(transfer(EffectiveElement::basis(T, f.source, key), f));
  };
  src.label = [](const std::vector<int>& key) { return key_to_string(key); };
  return build_table(T.group(), src, true, policy);
}

namespace {

struct Window {
  std::vector<GSet> objects;
  std::vector<std::vector<OrbitKey>> basis;  // all degrees up to the bound
  std::vector<char> is_orbit;
  std::vector<std::vector<std::vector<GMap>>> homs;  // homs[a][b]
};

Window make_window(const GSet& T, int k, int max_degree, ExecPolicy policy) {
  Window w;
  w.objects = gsets_up_to(T.group(), k);
  const std::size_t n = w.objects.size();
  w.basis = indexed_map<std::vector<OrbitKey>>(n, policy, [&](std::size_t i) {
    return ft_basis(T, w.objects[i], std::nullopt, max_degree);
  });
  for (const auto& o : w.objects) w.is_orbit.push_back(orbit_decompose(o).size() == 1);
  w.homs.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) w.homs[a].push_back(all_gmaps(w.objects[a], w.objects[b]));
  return w;
}

std::string obj_name(int i) { return "X#" + std::to_string(i); }

std::string map_name(int a, int b, const GMap& f) { return obj_name(a) + "->" + obj_name(b) + vec_string(f.values); }

struct Ops {
  GSet T;
  bool corrupt = false;
  EffectiveElement n(const EffectiveElement& e, const GMap& f) const {
    auto r = norm(e, f);
    if (corrupt) {
      std::vector<int> seen(f.target.size(), 0);
      bool bij = f.source.size() == f.target.size();
      for (int v : f.values)
        if (seen[v]++) bij = false;
      if (!bij && f.target.size() > 0) r = bispan_add(r, unit_element(T, f.target));
    }
    return r;
  }
};

using Failures = std::vector<std::string>;

}  // namespace

TambaraReport verify_semi_tambara(const GSet& T, const VerifyOptions& opt) {
  TambaraReport rep;
  Window w = make_window(T, opt.k, opt.max_degree, opt.policy);
  Ops ops{T, opt.corrupt_norm};
  const int n = static_cast<int>(w.objects.size());
  auto basis_el = [&](int obj, const OrbitKey& k) { return EffectiveElement::basis(T, w.objects[obj], k); };

  // Each task fixes f : X -> Y and runs every check that starts with f, so
  // t_f e and n_f e are computed once per basis element.
  struct Task {
    int kind;  // 0 identity, 1 maps out of X, 2 additivity
    int a, b;
    std::size_t f;
  };
  std::vector<Task> tasks;
  for (int a = 0; a < n; ++a) tasks.push_back({0, a, a, 0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t f = 0; f < w.homs[a][b].size(); ++f) tasks.push_back({1, a, b, f});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w.objects[a].size() + w.objects[b].size() <= opt.k) tasks.push_back({2, a, b, 0});

  struct Result {
    std::map<std::string, std::uint64_t> checks;
    Failures failures;
  };
  auto results = indexed_map<Result>(tasks.size(), opt.policy, [&](std::size_t ti) {
    const Task& t = tasks[ti];
    Result r;
    auto fail = [&](const std::string& s) { r.failures.push_back(s); };
    if (t.kind == 0) {
      GMap id = identity_map(w.objects[t.a]);
      for (const auto& k : w.basis[t.a]) {
        auto e = basis_el(t.a, k);
        ++r.checks["identity"];
        if (!(transfer(e, id) == e) || !(restrict(e, id) == e) || !(ops.n(e, id) == e))
          fail("identity acts nontrivially on " + key_to_string(k) + " at " + obj_name(t.a));
      }
      return r;
    }
    if (t.kind == 2) {
      auto cp = coproduct(w.objects[t.a], w.objects[t.b]);
      auto joint = ft_basis(T, cp.object, std::nullopt, opt.max_degree);
      std::set<OrbitKey> left, right;
      bool ok = joint.size() == w.basis[t.a].size() + w.basis[t.b].size();
      for (const auto& k : joint) {
        auto e = EffectiveElement::basis(T, cp.object, k);
        auto l = restrict(e, cp.in1), rr = restrict(e, cp.in2);
        ++r.checks["additivity"];
        if (l.component_count() + rr.component_count() != 1) {
          ok = false;
          continue;
        }
        if (l.component_count() == 1) left.insert(l.terms().begin()->first);
        if (rr.component_count() == 1) right.insert(rr.terms().begin()->first);
      }
      if (!ok || left != std::set<OrbitKey>(w.basis[t.a].begin(), w.basis[t.a].end()) ||
          right != std::set<OrbitKey>(w.basis[t.b].begin(), w.basis[t.b].end()))
        fail("additivity fails for " + obj_name(t.a) + " + " + obj_name(t.b));
      return r;
    }
    const GMap& f = w.homs[t.a][t.b][t.f];  // X -> Y
    const std::string fname = map_name(t.a, t.b, f);
    std::vector<EffectiveElement> es, tf, nf;
    for (const auto& k : w.basis[t.a]) {
      es.push_back(basis_el(t.a, k));
      tf.push_back(transfer(es.back(), f));
      nf.push_back(ops.n(es.back(), f));
    }
    for (int c = 0; c < n; ++c) {
      if (!w.is_orbit[c]) continue;
      // g : Y -> Z, functoriality and the distributive law
      for (const auto& g : w.homs[t.b][c]) {
        GMap gf = compose(g, f);
        auto d = dependent_product(f, g);
        for (std::size_t i = 0; i < es.size(); ++i) {
          const auto& k = w.basis[t.a][i];
          r.checks["functoriality"] += 2;
          if (!(transfer(tf[i], g) == transfer(es[i], gf)))
            fail("transfer not functorial on " + key_to_string(k) + " along " + fname + " then " +
                 map_name(t.b, c, g));
          if (!(ops.n(nf[i], g) == ops.n(es[i], gf)))
            fail("norm not functorial on " + key_to_string(k) + " along " + fname + " then " + map_name(t.b, c, g));
          ++r.checks["distributive"];
          if (!(ops.n(tf[i], g) == transfer(ops.n(restrict(es[i], d.e), d.pi2), d.p)))
            fail("distributive law fails on " + key_to_string(k) + " for the exponential diagram of " + fname +
                 ", " + map_name(t.b, c, g) + " (|Pi| = " + str(d.pi.size()) + ")");
        }
        for (const auto& k : w.basis[c]) {
          auto e = basis_el(c, k);
          ++r.checks["functoriality"];
          if (!(restrict(restrict(e, g), f) == restrict(e, gf)))
            fail("restriction not functorial on " + key_to_string(k) + " along " + fname + " then " +
                 map_name(t.b, c, g));
        }
      }
      // g : Z -> Y, both pullback relations
      for (const auto& g : w.homs[c][t.b]) {
        auto pb = pullback(f, g);
        for (std::size_t i = 0; i < es.size(); ++i) {
          const auto& k = w.basis[t.a][i];
          auto rp = restrict(es[i], pb.p1);
          r.checks["pullback"] += 2;
          if (!(restrict(tf[i], g) == transfer(rp, pb.p2)))
            fail("transfer pullback relation fails on " + key_to_string(k) + " for " + fname + " against " +
                 map_name(c, t.b, g));
          if (!(restrict(nf[i], g) == ops.n(rp, pb.p2)))
            fail("norm pullback relation fails on " + key_to_string(k) + " for " + fname + " against " +
                 map_name(c, t.b, g));
        }
      }
    }
    return r;
  });
  for (auto& r : results) {
    for (const auto& [name, v] : r.checks) rep.checks[name] += v;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

namespace {

MackeyTableMap permutation_map(const MackeyTable& a, const MackeyTable& b,
                               const std::function<OrbitKey(const std::vector<int>&, int level)>& send) {
  MackeyTableMap m;
  for (std::size_t l = 0; l < a.levels.size(); ++l) {
    std::map<OrbitKey, int> pos;
    for (int i = 0; i < b.levels[l].rank(); ++i) pos[b.levels[l].keys[i]] = i;
    IntMatrix c(b.levels[l].rank(), std::vector<std::int64_t>(a.levels[l].rank(), 0));
    for (int i = 0; i < a.levels[l].rank(); ++i) {
      auto it = pos.find(send(a.levels[l].keys[i], static_cast<int>(l)));
      if (it == pos.end()) throw InternalError("IsoNotFound: image outside the target basis");
      c[it->second][i] += 1;
    }
    m.components.push_back(std::move(c));
  }
  return m;
}

GradedIso finish_iso(MackeyTable src, MackeyTable dst,
                     const std::function<OrbitKey(const std::vector<int>&, int level)>& send) {
  auto m = permutation_map(src, dst, send);
  std::string why;
  if (!is_permutation_iso(m)) throw InternalError("IsoNotFound: explicit map is not a bijection of bases");
  if (!is_table_map(src, dst, m, &why)) throw InternalError("IsoNotFound: " + why);
  return GradedIso{std::move(src), std::move(dst), std::move(m)};
}

}  // namespace

GradedIso ft0_iso(const GSet& T, ExecPolicy policy) {
  const auto& g = T.group();
  auto src = burnside_table(g);
  auto dst = ft_table(T, 0, policy);
  auto classes = conj_classes(g);
  return finish_iso(std::move(src), std::move(dst), [&](const std::vector<int>& key, int level) {
    auto X = coset_space(g, classes[level].representative).set;
    int k = key[0];
    auto cs = coset_space(g, Subgroup(g, std::vector<int>(key.begin() + 1, key.begin() + 1 + k)));
    std::vector<int> c(cs.set.size());
    for (int p = 0; p < cs.set.size(); ++p) c[p] = X.act(cs.reps[p], key[1 + k]);
    auto cls = bispan_canonical(Bispan{T, GSet::empty(g), cs.set, X, {}, {}, c});
    return cls.components.at(0);
  });
}

GradedIso ft1_iso(const GSet& T, ExecPolicy policy) {
  const auto& g = T.group();
  auto src = represented_table(T);
  auto dst = ft_table(T, 1, policy);
  auto classes = conj_classes(g);
  return finish_iso(std::move(src), std::move(dst), [&](const std::vector<int>& key, int level) {
    auto X = coset_space(g, classes[level].representative).set;
    int k = key[0];
    auto cs = coset_space(g, Subgroup(g, std::vector<int>(key.begin() + 1, key.begin() + 1 + k)));
    std::vector<int> c(cs.set.size()), a(cs.set.size()), id(cs.set.size());
    for (int p = 0; p < cs.set.size(); ++p) {
      c[p] = X.act(cs.reps[p], key[1 + k]);
      a[p] = T.act(cs.reps[p], key[2 + k]);
      id[p] = p;
    }
    auto cls = bispan_canonical(Bispan{T, cs.set, cs.set, X, a, id, c});
    return cls.components.at(0);
  });
}

Bispan induce_bispan(const Subgroup& h, const GSet& T, const Bispan& b) {
  const auto& g = T.group();
  auto iu = induce(g, h, b.U);
  auto iv = induce(g, h, b.V);
  auto ix = induce(g, h, b.X);
  auto bmap = induce_map(iu, iv, GMap{b.U, b.V, b.b});
  auto cmap = induce_map(iv, ix, GMap{b.V, b.X, b.c});
  auto amap = induce_adjoint(iu, T, b.a);
  return Bispan{T, iu.set, iv.set, ix.set, amap.values, bmap.values, cmap.values};
}

namespace {

EffectiveElement induce_element(const Subgroup& h, const GSet& T, const GSet& target, const EffectiveElement& e) {
  EffectiveElement out(T, target);
  for (const auto& [k, c] : e.terms()) {
    auto b = induce_bispan(h, T, realize_key(e.T(), e.X(), k));
    // the induced X is built afresh; it equals target by construction
    b.X = target;
    for (const auto& key : bispan_canonical(b).components) out.add_term(key, c);
  }
  return out;
}

}  // namespace

CompatReport restriction_compat(const Subgroup& h, const GSet& T, int k, int max_degree, ExecPolicy policy) {
  CompatReport rep;
  const auto& g = T.group();
  if (!same_group(h.parent(), g)) throw InputError("NotSubgroup", "subgroup of a different group");
  GSet th = restrict(h, T);
  auto objs = gsets_up_to(h.as_group(), k);
  std::vector<InducedSet> ind;
  for (const auto& y : objs) ind.push_back(induce(g, h, y));

  struct Result {
    std::uint64_t pairs = 0, checks = 0;
    std::vector<std::string> failures;
  };
  // basis bijection per object and degree
  auto per_obj = indexed_map<Result>(objs.size(), policy, [&](std::size_t i) {
    Result r;
    for (int d = 0; d <= max_degree; ++d) {
      auto bh = ft_basis(th, objs[i], d);
      auto bg = ft_basis(T, ind[i].set, d);
      std::set<OrbitKey> img;
      bool ok = true;
      for (const auto& key : bh) {
        auto e = induce_element(h, T, ind[i].set, EffectiveElement::basis(th, objs[i], key));
        if (e.component_count() != 1) {
          ok = false;
          continue;
        }
        img.insert(e.terms().begin()->first);
        ++r.pairs;
      }
      ++r.checks;
      if (!ok || img.size() != bh.size() || img != std::set<OrbitKey>(bg.begin(), bg.end()))
        r.failures.push_back("induction is not a basis bijection at H-set #" + std::to_string(i) + " degree " +
                             std::to_string(d) + " (" + std::to_string(bh.size()) + " vs " +
                             std::to_string(bg.size()) + ")");
    }
    return r;
  });
  // structure maps along all H-maps among window objects
  std::vector<std::tuple<int, int, GMap>> maps;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (auto& f : all_gmaps(objs[a], objs[b])) maps.emplace_back(static_cast<int>(a), static_cast<int>(b), f);
  auto per_map = indexed_map<Result>(maps.size(), policy, [&](std::size_t m) {
    Result r;
    auto [a, b, f] = maps[m];
    GMap gf = induce_map(ind[a], ind[b], f);
    auto up_a = [&](const EffectiveElement& e) { return induce_element(h, T, ind[a].set, e); };
    auto up_b = [&](const EffectiveElement& e) { return induce_element(h, T, ind[b].set, e); };
    for (const auto& key : ft_basis(th, objs[a], std::nullopt, max_degree)) {
      auto e = EffectiveElement::basis(th, objs[a], key);
      r.checks += 2;
      if (!(up_b(transfer(e, f)) == transfer(up_a(e), gf)))
        r.failures.push_back("induction does not commute with transfer along H-map " + vec_string(f.values));
      if (!(up_b(norm(e, f)) == norm(up_a(e), gf)))
        r.failures.push_back("induction does not commute with norm along H-map " + vec_string(f.values));
    }
    for (const auto& key : ft_basis(th, objs[b], std::nullopt, max_degree)) {
      auto e = EffectiveElement::basis(th, objs[b], key);
      ++r.checks;
      if (!(up_a(restrict(e, f)) == restrict(up_b(e), gf)))
        r.failures.push_back("induction does not commute with restriction along H-map " + vec_string(f.values));
    }
    return r;
  });
  for (auto* v : {&per_obj, &per_map})
    for (auto& r : *v) {
      rep.basis_pairs += r.pairs;
      rep.checks += r.checks;
      for (auto& s : r.failures) rep.failures.push_back(std::move(s));
    }
  // theta goes to the restriction of theta along the counit
  auto it = induce(g, h, th);
  auto counit = induce_adjoint(it, T, identity_map(th).values);
  ++rep.checks;
  if (!(induce_element(h, T, it.set, theta_element(th)) == restrict(theta_element(T), counit)))
    rep.failures.push_back("theta is not sent to the restriction of theta along the counit");
  return rep;
}

EffectiveElement universal_map_apply(const EffectiveElement& x, const EffectiveElement& e) {
  if (!(x.X() == e.T())) throw InputError("PortMismatch", "x must live at the generator of e");
  EffectiveElement out(x.T(), e.X());
  for (const auto& [k, c] : e.terms()) {
    auto b = realize_key(e.T(), e.X(), k);
    auto img = transfer(norm(restrict(x, GMap{b.U, b.T, b.a}), GMap{b.U, b.V, b.b}), GMap{b.V, b.X, b.c});
    for (const auto& [k2, c2] : img.terms()) out.add_term(k2, c * c2);
  }
  return out;
}

CompatReport universal_map_check(const GSet& T, const EffectiveElement& x, int k, int max_degree, ExecPolicy policy) {
  CompatReport rep;
  if (!(x.X() == T)) throw InputError("PortMismatch", "x must live at T");
  ++rep.checks;
  if (!(universal_map_apply(x, theta_element(T)) == x)) rep.failures.push_back("theta is not sent to x");
  auto objs = gsets_up_to(T.group(), k);
  std::vector<std::vector<OrbitKey>> basis;
  for (const auto& o : objs) basis.push_back(ft_basis(T, o, std::nullopt, max_degree));
  std::vector<std::tuple<int, int, GMap>> maps;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b)
      for (auto& f : all_gmaps(objs[a], objs[b])) maps.emplace_back(static_cast<int>(a), static_cast<int>(b), f);
  struct Result {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
  };
  auto res = indexed_map<Result>(maps.size(), policy, [&](std::size_t m) {
    Result r;
    auto [a, b, f] = maps[m];
    for (const auto& key : basis[a]) {
      auto e = EffectiveElement::basis(T, objs[a], key);
      auto phi = universal_map_apply(x, e);
      r.checks += 2;
      if (!(universal_map_apply(x, transfer(e, f)) == transfer(phi, f)))
        r.failures.push_back("map does not commute with transfer along " + vec_string(f.values) + " on " +
                             key_to_string(key));
      if (!(universal_map_apply(x, norm(e, f)) == norm(phi, f)))
        r.failures.push_back("map does not commute with norm along " + vec_string(f.values) + " on " +
                             key_to_string(key));
    }
    for (const auto& key : basis[b]) {
      auto e = EffectiveElement::basis(T, objs[b], key);
      ++r.checks;
      if (!(universal_map_apply(x, restrict(e, f)) == restrict(universal_map_apply(x, e), f)))
        r.failures.push_back("map does not commute with restriction along " + vec_string(f.values) + " on " +
                             key_to_string(key));
    }
    return r;
  });
  for (auto& r : res) {
    rep.checks += r.checks;
    for (auto& s : r.failures) rep.failures.push_back(std::move(s));
  }
  return rep;
}

PolyReport trivial_group_check(int t_size, int max_degree) {
  PolyReport rep;
  auto g = trivial_group();
  GSet T = GSet::trivial(g, t_size);
  GSet pt = GSet::point(g);
  std::map<std::vector<int>, OrbitKey> by_exponent;
  std::vector<std::vector<std::pair<OrbitKey, std::vector<int>>>> basis(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    auto keys = ft_basis(T, pt, d);
    rep.basis_counts.push_back(keys.size());
    std::uint64_t mono = 1;
    for (int i = 1; i <= d; ++i) mono = mono * static_cast<std::uint64_t>(t_size + i - 1) / static_cast<std::uint64_t>(i);
    if (t_size == 0) mono = d == 0 ? 1 : 0;
    rep.monomial_counts.push_back(mono);
    if (keys.size() != mono)
      rep.failures.push_back("degree " + std::to_string(d) + ": " + std::to_string(keys.size()) + " basis elements, " +
                             std::to_string(mono) + " monomials");
    for (const auto& k : keys) {
      std::vector<int> expo(t_size, 0);
      for (const auto& [L, t] : parse_key(k).fiber) ++expo[t];
      if (!by_exponent.emplace(expo, k).second)
        rep.failures.push_back("two basis elements share the monomial " + vec_string(expo));
      basis[d].emplace_back(k, expo);
    }
  }
  for (int d1 = 0; d1 <= max_degree; ++d1)
    for (int d2 = 0; d1 + d2 <= max_degree; ++d2)
      for (const auto& [k1, e1] : basis[d1])
        for (const auto& [k2, e2] : basis[d2]) {
          ++rep.products_checked;
          auto p = bispan_mul(EffectiveElement::basis(T, pt, k1), EffectiveElement::basis(T, pt, k2));
          std::vector<int> sum(t_size);
          for (int i = 0; i < t_size; ++i) sum[i] = e1[i] + e2[i];
          auto it = by_exponent.find(sum);
          if (it == by_exponent.end() || p.component_count() != 1 || p.terms().begin()->first != it->second)
            rep.failures.push_back("product of " + vec_string(e1) + " and " + vec_string(e2) +
                                   " is not the monomial " + vec_string(sum));
        }
  return rep;
}

}  // namespace tamb
