#include "tamb/mackey.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tamb/error.hpp"
#include "tamb/parallel.hpp"

namespace tamb {

namespace {

std::string str(int v) { return std::to_string(v); }

std::string set_string(const std::vector<int>& s) {
  std::ostringstream o;
  o << "{";
  for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
  o << "}";
  return o.str();
}

std::string map_name(const MackeyTable& t, const OrbitMapData& m) {
  return "G/" + set_string(t.levels[m.from].subgroup.elements()) + " -> G/" +
         set_string(t.levels[m.to].subgroup.elements()) + " (eK -> coset " + str(m.coset) + ")";
}

IntMatrix zeros(int r, int c) { return IntMatrix(r, std::vector<std::int64_t>(c, 0)); }

// Point of an orbit whose stabilizer is exactly the class representative.
struct OrbitAnchor {
  int level;
  int point;
  std::vector<int> points;
};

std::vector<OrbitAnchor> anchors(const MackeyTable& t, const GSet& x) {
  std::vector<OrbitAnchor> out;
  for (const auto& o : orbit_decompose(x)) {
    OrbitAnchor a{-1, -1, o.points};
    for (int l = 0; l < static_cast<int>(t.levels.size()) && a.level < 0; ++l)
      for (int p : o.points)
        if (stabilizer(x, p) == t.levels[l].subgroup.elements()) {
          a.level = l;
          a.point = p;
          break;
        }
    if (a.level < 0) throw InternalError("orbit stabilizer not conjugate to any level representative");
    out.push_back(std::move(a));
  }
  return out;
}

// The (from, to, coset) orbit map realizing f on the orbit of `from`.
struct LevelCache {
  std::vector<CosetSpace> spaces;
};

LevelCache level_cache(const GroupPtr& g, const std::vector<MackeyLevel>& levels) {
  LevelCache c;
  for (const auto& l : levels) c.spaces.push_back(coset_space(g, l.subgroup));
  return c;
}

int coset_hitting(const GroupPtr& g, const GSet& y, int anchor, int target, const CosetSpace& cs) {
  for (int s = 0; s < g->order(); ++s)
    if (y.act(s, anchor) == target) return cs.coset_of[s];
  throw InternalError("point not in the anchored orbit");
}

}  // namespace

int MackeyTable::find_map(int from, int to, int coset) const {
  std::array<int, 3> key{from, to, coset};
  auto it = std::lower_bound(maps.begin(), maps.end(), key, [](const OrbitMapData& m, const std::array<int, 3>& k) {
    return std::array<int, 3>{m.from, m.to, m.coset} < k;
  });
  if (it == maps.end() || it->from != from || it->to != to || it->coset != coset) return -1;
  return static_cast<int>(it - maps.begin());
}

std::vector<std::array<int, 3>> orbit_maps(const GroupPtr& g) {
  auto classes = conj_classes(g);
  std::vector<std::array<int, 3>> out;
  for (int k = 0; k < static_cast<int>(classes.size()); ++k)
    for (int h = 0; h < static_cast<int>(classes.size()); ++h) {
      auto cs = coset_space(g, classes[h].representative);
      for (int c = 0; c < cs.set.size(); ++c) {
        bool fixed = true;
        for (int s : classes[k].representative.elements())
          if (cs.set.act(s, c) != c) fixed = false;
        if (fixed) out.push_back({k, h, c});
      }
    }
  return out;
}

GMap orbit_map_gmap(const GroupPtr& g, int from, int to, int coset) {
  auto classes = conj_classes(g);
  auto src = coset_space(g, classes[from].representative);
  auto dst = coset_space(g, classes[to].representative);
  std::vector<int> v(src.set.size());
  for (int p = 0; p < src.set.size(); ++p) v[p] = dst.set.act(src.reps[p], coset);
  return make_map(src.set, dst.set, std::move(v));
}

MackeyTable build_table(const GroupPtr& g, const FunctorSource& src, bool semi, ExecPolicy policy) {
  MackeyTable t;
  t.group = g;
  t.semi = semi;
  auto classes = conj_classes(g);
  std::vector<std::map<std::vector<int>, int>> index(classes.size());
  for (std::size_t l = 0; l < classes.size(); ++l) {
    MackeyLevel lev{classes[l].representative, {}, {}};
    lev.keys = src.basis(coset_space(g, lev.subgroup).set);
    for (std::size_t i = 0; i < lev.keys.size(); ++i) {
      index[l][lev.keys[i]] = static_cast<int>(i);
      lev.labels.push_back(src.label ? src.label(lev.keys[i]) : "b" + std::to_string(i));
    }
    t.levels.push_back(std::move(lev));
  }
  auto triples = orbit_maps(g);
  auto place = [&](const Coeffs& c, int level, const std::string& what) {
    std::vector<std::int64_t> col(t.levels[level].rank(), 0);
    for (const auto& [k, v] : c) {
      auto it = index[level].find(k);
      if (it == index[level].end()) throw InternalError(what + " leaves the enumerated basis");
      col[it->second] += v;
    }
    return col;
  };
  t.maps = indexed_map<OrbitMapData>(triples.size(), policy, [&](std::size_t m) {
    auto [from, to, coset] = triples[m];
    OrbitMapData d{from, to, coset, zeros(t.levels[from].rank(), t.levels[to].rank()),
                   zeros(t.levels[to].rank(), t.levels[from].rank())};
    GMap f = orbit_map_gmap(g, from, to, coset);
    for (int j = 0; j < t.levels[to].rank(); ++j) {
      auto col = place(src.restrict(f, t.levels[to].keys[j]), from, "restriction");
      for (int i = 0; i < t.levels[from].rank(); ++i) d.restriction[i][j] = col[i];
    }
    for (int j = 0; j < t.levels[from].rank(); ++j) {
      auto col = place(src.transfer(f, t.levels[from].keys[j]), to, "transfer");
      for (int i = 0; i < t.levels[to].rank(); ++i) d.transfer[i][j] = col[i];
    }
    return d;
  });
  return t;
}

std::vector<int> span_key(const GSet& v, const std::vector<int>& c, const std::vector<int>& t, int point) {
  const auto& g = v.group();
  std::vector<int> best;
  std::vector<char> seen(v.size(), 0);
  for (int s = 0; s < g->order(); ++s) {
    int w = v.act(s, point);
    if (seen[w]) continue;
    seen[w] = 1;
    auto k = stabilizer(v, w);
    std::vector<int> key{static_cast<int>(k.size())};
    key.insert(key.end(), k.begin(), k.end());
    key.push_back(c[w]);
    if (!t.empty()) key.push_back(t[w]);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

namespace {

struct SpanOrbit {
  CosetSpace v;
  std::vector<int> c, t;
};

// Orbit G/K with c(rK) = r.x and, if has_t, t(rK) = r.t.
SpanOrbit realize_span(const GroupPtr& g, const GSet& x, const GSet* tset, const std::vector<int>& key) {
  int k = key[0];
  std::vector<int> elems(key.begin() + 1, key.begin() + 1 + k);
  SpanOrbit s{coset_space(g, Subgroup(g, elems)), {}, {}};
  int xv = key[1 + k];
  for (int p = 0; p < s.v.set.size(); ++p) {
    s.c.push_back(x.act(s.v.reps[p], xv));
    if (tset) s.t.push_back(tset->act(s.v.reps[p], key[2 + k]));
  }
  return s;
}

std::vector<std::vector<int>> span_basis(const GroupPtr& g, const GSet& x, const GSet* tset) {
  std::set<std::vector<int>> keys;
  auto fixed = [&](const GSet& s, const Subgroup& k) {
    std::vector<int> out;
    for (int p = 0; p < s.size(); ++p) {
      bool ok = true;
      for (int e : k.elements())
        if (s.act(e, p) != p) ok = false;
      if (ok) out.push_back(p);
    }
    return out;
  };
  for (const auto& k : all_subgroups(g)) {
    auto cs = coset_space(g, k);
    auto xs = fixed(x, k);
    std::vector<int> ts = tset ? fixed(*tset, k) : std::vector<int>{-1};
    for (int xv : xs)
      for (int tv : ts) {
        std::vector<int> c(cs.set.size()), t;
        for (int p = 0; p < cs.set.size(); ++p) {
          c[p] = x.act(cs.reps[p], xv);
          if (tset) t.push_back(tset->act(cs.reps[p], tv));
        }
        keys.insert(span_key(cs.set, c, t, 0));
      }
  }
  return {keys.begin(), keys.end()};
}

std::string span_label(const std::vector<int>& key, bool has_t) {
  int k = key[0];
  std::vector<int> elems(key.begin() + 1, key.begin() + 1 + k);
  std::string s = "G/" + set_string(elems) + "->x" + str(key[1 + k]);
  if (has_t) s += ",t" + str(key[2 + k]);
  return s;
}

FunctorSource span_source(const GroupPtr& g, std::optional<GSet> tset) {
  FunctorSource src;
  auto tp = tset ? std::make_shared<GSet>(*tset) : nullptr;
  src.basis = [g, tp](const GSet& orbit) { return span_basis(g, orbit, tp.get()); };
  src.restrict = [g, tp](const GMap& f, const std::vector<int>& key) {
    auto s = realize_span(g, f.target, tp.get(), key);
    auto pb = pullback(GMap{s.v.set, f.target, s.c}, f);
    std::vector<int> c(pb.object.size()), t;
    for (int q = 0; q < pb.object.size(); ++q) {
      c[q] = pb.p2(q);
      if (tp) t.push_back(s.t[pb.p1(q)]);
    }
    Coeffs out;
    for (const auto& o : orbit_decompose(pb.object)) out[span_key(pb.object, c, t, o.representative)] += 1;
    return out;
  };
  src.transfer = [g, tp](const GMap& f, const std::vector<int>& key) {
    auto s = realize_span(g, f.source, tp.get(), key);
    std::vector<int> c(s.c.size());
    for (std::size_t p = 0; p < c.size(); ++p) c[p] = f(s.c[p]);
    return Coeffs{{span_key(s.v.set, c, s.t, 0), 1}};
  };
  bool has_t = static_cast<bool>(tset);
  src.label = [has_t](const std::vector<int>& key) { return span_label(key, has_t); };
  return src;
}

}  // namespace

FunctorSource burnside_source(const GroupPtr& g) { return span_source(g, std::nullopt); }
FunctorSource represented_source(const GSet& t) { return span_source(t.group(), t); }

MackeyTable burnside_table(const GroupPtr& g) { return build_table(g, burnside_source(g), false); }
MackeyTable represented_table(const GSet& t) { return build_table(t.group(), represented_source(t), false); }

MackeyTable completion(const MackeyTable& t) {
  MackeyTable c = t;
  c.semi = false;
  return c;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

// mat_mul with explicit inner/outer sizes so that empty ranks keep shape.
IntMatrix mul_shaped(const IntMatrix& a, const IntMatrix& b, int rows, int cols) {
  IntMatrix out = zeros(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

void add_into(IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
}

}  // namespace

int evaluate_rank(const MackeyTable& t, const GSet& x) {
  int r = 0;
  for (const auto& a : anchors(t, x)) r += t.levels[a.level].rank();
  return r;
}

namespace {

template <typename Pick>
IntMatrix evaluate(const MackeyTable& t, const GMap& f, bool restriction, Pick&& pick) {
  const auto& g = t.group;
  auto cache = level_cache(g, t.levels);
  auto ax = anchors(t, f.source);
  auto ay = anchors(t, f.target);
  std::vector<int> offx{0}, offy{0};
  for (const auto& a : ax) offx.push_back(offx.back() + t.levels[a.level].rank());
  for (const auto& a : ay) offy.push_back(offy.back() + t.levels[a.level].rank());
  std::vector<int> orbit_of_y(f.target.size(), -1);
  for (std::size_t o = 0; o < ay.size(); ++o)
    for (int p : ay[o].points) orbit_of_y[p] = static_cast<int>(o);
  IntMatrix out = restriction ? zeros(offx.back(), offy.back()) : zeros(offy.back(), offx.back());
  for (std::size_t o = 0; o < ax.size(); ++o) {
    int img = f(ax[o].point);
    int oy = orbit_of_y[img];
    int coset = coset_hitting(g, f.target, ay[oy].point, img, cache.spaces[ay[oy].level]);
    int m = t.find_map(ax[o].level, ay[oy].level, coset);
    if (m < 0) throw InternalError("orbit map missing from table");
    const IntMatrix& block = pick(t.maps[m]);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block[i].size(); ++j) {
        if (restriction)
          out[offx[o] + i][offy[oy] + j] += block[i][j];
        else
          out[offy[oy] + i][offx[o] + j] += block[i][j];
      }
  }
  return out;
}

}  // namespace

IntMatrix evaluate_restriction(const MackeyTable& t, const GMap& f) {
  return evaluate(t, f, true, [](const OrbitMapData& d) -> const IntMatrix& { return d.restriction; });
}

IntMatrix evaluate_transfer(const MackeyTable& t, const GMap& f) {
  return evaluate(t, f, false, [](const OrbitMapData& d) -> const IntMatrix& { return d.transfer; });
}

AxiomReport check_mackey_axioms(const MackeyTable& t) {
  AxiomReport rep;
  const auto& g = t.group;
  auto cache = level_cache(g, t.levels);
  auto rank = [&](int l) { return t.levels[l].rank(); };
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };

  // identities and nonnegativity
  for (std::size_t l = 0; l < t.levels.size(); ++l) {
    int m = t.find_map(static_cast<int>(l), static_cast<int>(l), 0);
    ++rep.checks;
    if (m < 0 || t.maps[m].restriction != identity_matrix(rank(l)) || t.maps[m].transfer != identity_matrix(rank(l)))
      fail("identity map of level " + str(static_cast<int>(l)) + " does not act as the identity");
  }
  if (t.semi)
    for (const auto& d : t.maps) {
      ++rep.checks;
      for (const auto* mat : {&d.restriction, &d.transfer})
        for (const auto& row : *mat)
          for (auto v : row)
            if (v < 0) {
              fail("negative entry in a semi table at " + map_name(t, d));
              goto next;
            }
    next:;
    }

  // conjugations are mutually inverse permutations
  for (const auto& d : t.maps) {
    if (d.from != d.to) continue;
    ++rep.checks;
    const auto& r = d.restriction;
    bool perm = true;
    for (int i = 0; i < rank(d.from); ++i) {
      int ones = 0;
      for (int j = 0; j < rank(d.to); ++j) {
        if (r[i][j] == 1) ++ones;
        else if (r[i][j] != 0) perm = false;
        if (d.transfer[j][i] != r[i][j]) perm = false;
      }
      if (ones != 1) perm = false;
    }
    if (!perm) fail("conjugation " + map_name(t, d) + " is not a permutation with inverse transfer");
  }

  // composition: (L -> K, c1) then (K -> H, c2)
  for (const auto& d1 : t.maps)
    for (const auto& d2 : t.maps) {
      if (d1.to != d2.from) continue;
      const auto& ck = cache.spaces[d1.to];
      const auto& ch = cache.spaces[d2.to];
      int coset = ch.set.act(ck.reps[d1.coset], d2.coset);
      int m = t.find_map(d1.from, d2.to, coset);
      ++rep.checks;
      if (m < 0) {
        fail("composite of " + map_name(t, d1) + " and " + map_name(t, d2) + " missing");
        continue;
      }
      const auto& dc = t.maps[m];
      if (mul_shaped(d1.restriction, d2.restriction, rank(d1.from), rank(d2.to)) != dc.restriction)
        fail("restriction not functorial on " + map_name(t, d1) + " then " + map_name(t, d2));
      if (mul_shaped(d2.transfer, d1.transfer, rank(d2.to), rank(d1.from)) != dc.transfer)
        fail("transfer not functorial on " + map_name(t, d1) + " then " + map_name(t, d2));
    }

  // pullback relation: r_g t_f = sum over orbits of the pullback of t_q r_p
  for (const auto& df : t.maps)
    for (const auto& dg : t.maps) {
      if (df.to != dg.to) continue;
      ++rep.checks;
      GMap f = orbit_map_gmap(g, df.from, df.to, df.coset);
      GMap gm = orbit_map_gmap(g, dg.from, dg.to, dg.coset);
      auto pb = pullback(f, gm);
      IntMatrix lhs = mul_shaped(dg.restriction, df.transfer, rank(dg.from), rank(df.from));
      IntMatrix rhs = zeros(rank(dg.from), rank(df.from));
      bool missing = false;
      for (const auto& a : anchors(t, pb.object)) {
        int xk = pb.p1(a.point);
        int xl = pb.p2(a.point);
        int mp = t.find_map(a.level, df.from, xk);
        int mq = t.find_map(a.level, dg.from, xl);
        if (mp < 0 || mq < 0) {
          missing = true;
          break;
        }
        add_into(rhs, mul_shaped(t.maps[mq].transfer, t.maps[mp].restriction, rank(dg.from), rank(df.from)));
      }
      if (missing || lhs != rhs)
        fail("pullback relation fails for the square over " + map_name(t, df) + " and " + map_name(t, dg));
    }

  // additivity: the coproduct inclusions split M(X + Y) as M(X) + M(Y)
  for (std::size_t a = 0; a < t.levels.size(); ++a)
    for (std::size_t b = 0; b < t.levels.size(); ++b) {
      ++rep.checks;
      const GSet& x = cache.spaces[a].set;
      const GSet& y = cache.spaces[b].set;
      auto cp = coproduct(x, y);
      auto r1 = evaluate_restriction(t, cp.in1);
      auto r2 = evaluate_restriction(t, cp.in2);
      IntMatrix stacked = r1;
      stacked.insert(stacked.end(), r2.begin(), r2.end());
      int n = evaluate_rank(t, cp.object);
      if (n != rank(a) + rank(b) || stacked != identity_matrix(n))
        fail("additivity fails for level " + str(static_cast<int>(a)) + " + level " + str(static_cast<int>(b)));
    }
  return rep;
}

bool is_table_map(const MackeyTable& a, const MackeyTable& b, const MackeyTableMap& m, std::string* why) {
  auto bad = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (a.levels.size() != b.levels.size() || a.maps.size() != b.maps.size() ||
      m.components.size() != a.levels.size())
    return bad("shape mismatch");
  for (std::size_t l = 0; l < a.levels.size(); ++l) {
    if (m.components[l].size() != static_cast<std::size_t>(b.levels[l].rank())) return bad("component shape");
    for (const auto& row : m.components[l])
      if (row.size() != static_cast<std::size_t>(a.levels[l].rank())) return bad("component shape");
  }
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    const auto& da = a.maps[i];
    const auto& db = b.maps[i];
    if (da.from != db.from || da.to != db.to || da.coset != db.coset) return bad("orbit maps differ");
    int rk = b.levels[da.from].rank(), rh = b.levels[da.to].rank();
    int sk = a.levels[da.from].rank(), sh = a.levels[da.to].rank();
    if (mul_shaped(db.restriction, m.components[da.to], rk, sh) !=
        mul_shaped(m.components[da.from], da.restriction, rk, sh))
      return bad("restriction along " + map_name(a, da) + " does not commute");
    if (mul_shaped(db.transfer, m.components[da.from], rh, sk) != mul_shaped(m.components[da.to], da.transfer, rh, sk))
      return bad("transfer along " + map_name(a, da) + " does not commute");
  }
  return true;
}

bool is_permutation_iso(const MackeyTableMap& m) {
  for (const auto& c : m.components) {
    const std::size_t n = c.size();
    std::vector<int> col_ones(n ? c[0].size() : 0, 0);
    for (const auto& row : c) {
      if (row.size() != n) return false;
      int ones = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 1) {
          ++ones;
          ++col_ones[j];
        } else if (row[j] != 0) {
          return false;
        }
      }
      if (ones != 1) return false;
    }
    for (int v : col_ones)
      if (v != 1) return false;
  }
  return true;
}

namespace {

// Per-element invariant: for every incident orbit map, the sorted entries
// of its row/column in each structure matrix.
std::vector<std::vector<std::int64_t>> signatures(const MackeyTable& t, int level) {
  std::vector<std::vector<std::int64_t>> sig(t.levels[level].rank());
  for (const auto& d : t.maps) {
    for (int i = 0; i < t.levels[level].rank(); ++i) {
      auto push_sorted = [&](std::vector<std::int64_t> v) {
        std::sort(v.begin(), v.end());
        sig[i].push_back(static_cast<std::int64_t>(v.size()));
        sig[i].insert(sig[i].end(), v.begin(), v.end());
      };
      if (d.from == level) {
        push_sorted(d.restriction[i]);
        std::vector<std::int64_t> col;
        for (const auto& row : d.transfer) col.push_back(row[i]);
        push_sorted(col);
      }
      if (d.to == level) {
        push_sorted(d.transfer[i]);
        std::vector<std::int64_t> col;
        for (const auto& row : d.restriction) col.push_back(row[i]);
        push_sorted(col);
      }
    }
  }
  return sig;
}

}  // namespace

std::optional<MackeyTableMap> table_iso(const MackeyTable& a, const MackeyTable& b) {
  if (!same_group(a.group, b.group) || a.levels.size() != b.levels.size() || a.maps.size() != b.maps.size())
    return std::nullopt;
  for (std::size_t l = 0; l < a.levels.size(); ++l)
    if (a.levels[l].rank() != b.levels[l].rank() || !(a.levels[l].subgroup == b.levels[l].subgroup))
      return std::nullopt;
  for (std::size_t i = 0; i < a.maps.size(); ++i)
    if (a.maps[i].from != b.maps[i].from || a.maps[i].to != b.maps[i].to || a.maps[i].coset != b.maps[i].coset)
      return std::nullopt;

  const int nl = static_cast<int>(a.levels.size());
  std::vector<std::vector<std::vector<std::int64_t>>> sa(nl), sb(nl);
  for (int l = 0; l < nl; ++l) {
    sa[l] = signatures(a, l);
    sb[l] = signatures(b, l);
  }
  // pi[l][i] = image in b of basis element i of a at level l; -1 unassigned
  std::vector<std::vector<int>> pi(nl), inv(nl);
  for (int l = 0; l < nl; ++l) {
    pi[l].assign(a.levels[l].rank(), -1);
    inv[l].assign(a.levels[l].rank(), -1);
  }
  // constraints touching (level, element)
  auto consistent = [&](int level, int i) {
    for (std::size_t m = 0; m < a.maps.size(); ++m) {
      const auto& da = a.maps[m];
      const auto& db = b.maps[m];
      // restriction: R_b[pi_K(r)][pi_H(c)] == R_a[r][c]; transfer: T_b[pi_H(r)][pi_K(c)] == T_a[r][c]
      if (da.from == level) {
        int r = i;
        for (int c = 0; c < a.levels[da.to].rank(); ++c) {
          if (pi[da.to][c] < 0) continue;
          if (db.restriction[pi[level][r]][pi[da.to][c]] != da.restriction[r][c]) return false;
          if (db.transfer[pi[da.to][c]][pi[level][r]] != da.transfer[c][r]) return false;
        }
      }
      if (da.to == level) {
        int c = i;
        for (int r = 0; r < a.levels[da.from].rank(); ++r) {
          if (pi[da.from][r] < 0) continue;
          if (db.restriction[pi[da.from][r]][pi[level][c]] != da.restriction[r][c]) return false;
          if (db.transfer[pi[level][c]][pi[da.from][r]] != da.transfer[c][r]) return false;
        }
      }
    }
    return true;
  };
  std::vector<std::pair<int, int>> order;
  for (int l = 0; l < nl; ++l)
    for (int i = 0; i < a.levels[l].rank(); ++i) order.emplace_back(l, i);
  std::uint64_t budget = limits().enum_cap;
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    if (budget-- == 0) throw ResourceBound("enum_cap", "table isomorphism search exceeded the enumeration budget");
    auto [l, i] = order[pos];
    for (int j = 0; j < a.levels[l].rank(); ++j) {
      if (inv[l][j] >= 0 || sa[l][i] != sb[l][j]) continue;
      pi[l][i] = j;
      inv[l][j] = i;
      if (consistent(l, i) && self(self, pos + 1)) return true;
      pi[l][i] = -1;
      inv[l][j] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  MackeyTableMap out;
  for (int l = 0; l < nl; ++l) {
    IntMatrix c = zeros(a.levels[l].rank(), a.levels[l].rank());
    for (int i = 0; i < a.levels[l].rank(); ++i) c[pi[l][i]][i] = 1;
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace tamb
