#include "tamb/bispan.hpp"

#include <algorithm>
#include <sstream>

#include "tamb/error.hpp"

namespace tamb {

Bispan make_bispan(GSet T, GSet U, GSet V, GSet X, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  const auto& g = X.group();
  if (!same_group(T.group(), g) || !same_group(U.group(), g) || !same_group(V.group(), g))
    throw InputError("GroupMismatch", "bispan objects over different groups");
  if (!is_equivariant(U, T, a)) throw InputError("NotEquivariant", "leg U -> T is not an equivariant map");
  if (!is_equivariant(U, V, b)) throw InputError("NotEquivariant", "leg U -> V is not an equivariant map");
  if (!is_equivariant(V, X, c)) throw InputError("NotEquivariant", "leg V -> X is not an equivariant map");
  return Bispan{std::move(T), std::move(U), std::move(V), std::move(X), std::move(a), std::move(b), std::move(c)};
}

Bispan theta_bispan(const GSet& T) {
  auto id = identity_map(T).values;
  return Bispan{T, T, T, T, id, id, id};
}

Bispan unit_bispan(const GSet& T, const GSet& X) {
  return Bispan{T, GSet::empty(X.group()), X, X, {}, {}, identity_map(X).values};
}

Bispan zero_bispan(const GSet& T, const GSet& X) {
  auto e = GSet::empty(X.group());
  return Bispan{T, e, e, X, {}, {}, {}};
}

OrbitKeyView parse_key(const OrbitKey& key) {
  OrbitKeyView v;
  std::size_t p = 0;
  int k = key.at(p++);
  v.stabilizer.assign(key.begin() + static_cast<long>(p), key.begin() + static_cast<long>(p + k));
  p += k;
  v.x = key.at(p++);
  int m = key.at(p++);
  for (int i = 0; i < m; ++i) {
    int l = key.at(p++);
    std::vector<int> L(key.begin() + static_cast<long>(p), key.begin() + static_cast<long>(p + l));
    p += l;
    v.fiber.emplace_back(std::move(L), key.at(p++));
  }
  return v;
}

namespace {

OrbitKey fiber_code(const std::vector<int>& stab, int t) {
  OrbitKey c;
  c.reserve(stab.size() + 2);
  c.push_back(static_cast<int>(stab.size()));
  c.insert(c.end(), stab.begin(), stab.end());
  c.push_back(t);
  return c;
}

OrbitKey assemble(const std::vector<int>& k, int x, std::vector<OrbitKey> codes) {
  std::sort(codes.begin(), codes.end());
  OrbitKey key;
  key.push_back(static_cast<int>(k.size()));
  key.insert(key.end(), k.begin(), k.end());
  key.push_back(x);
  key.push_back(static_cast<int>(codes.size()));
  for (const auto& c : codes) key.insert(key.end(), c.begin(), c.end());
  return key;
}

}  // namespace

OrbitKey make_key(const OrbitKeyView& view) {
  std::vector<OrbitKey> codes;
  for (const auto& [L, t] : view.fiber) codes.push_back(fiber_code(L, t));
  return assemble(view.stabilizer, view.x, std::move(codes));
}

int key_degree(const OrbitKey& key) {
  auto v = parse_key(key);
  int d = 0;
  for (const auto& f : v.fiber) d += static_cast<int>(v.stabilizer.size() / f.first.size());
  return d;
}

std::string key_to_string(const OrbitKey& key) {
  auto v = parse_key(key);
  auto set = [](const std::vector<int>& s) {
    std::ostringstream o;
    o << "{";
    for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
    o << "}";
    return o.str();
  };
  std::ostringstream o;
  o << "G/" << set(v.stabilizer) << "->x" << v.x << " [";
  for (std::size_t i = 0; i < v.fiber.size(); ++i)
    o << (i ? " " : "") << "G/" << set(v.fiber[i].first) << "->t" << v.fiber[i].second;
  o << "]";
  return o.str();
}

BispanClass bispan_canonical(const Bispan& b) {
  const auto& grp = *b.X.group();
  const int order = grp.order();

  std::vector<OrbitKey> ucode(b.U.size());
  for (int u = 0; u < b.U.size(); ++u) ucode[u] = fiber_code(stabilizer(b.U, u), b.a[u]);

  std::vector<std::vector<int>> fiber(b.V.size());
  for (int u = 0; u < b.U.size(); ++u) fiber[b.b[u]].push_back(u);

  auto vids = orbit_ids(b.V);
  int norbits = b.V.size() ? *std::max_element(vids.begin(), vids.end()) + 1 : 0;
  std::vector<OrbitKey> best(norbits);
  std::vector<char> have(norbits, 0);
  std::vector<int> mark(b.U.size(), -1);

  for (int v = 0; v < b.V.size(); ++v) {
    auto k = stabilizer(b.V, v);
    std::vector<OrbitKey> codes;
    for (int u : fiber[v]) {
      if (mark[u] == v) continue;
      OrbitKey m = ucode[u];
      for (int s : k) {
        int w = b.U.act(s, u);
        mark[w] = v;
        if (ucode[w] < m) m = ucode[w];
      }
      codes.push_back(std::move(m));
    }
    auto key = assemble(k, b.c[v], std::move(codes));
    int o = vids[v];
    if (!have[o] || key < best[o]) {
      best[o] = std::move(key);
      have[o] = 1;
    }
  }
  (void)order;
  std::sort(best.begin(), best.end());
  return BispanClass{b.T, b.X, std::move(best)};
}

namespace {

// Coset spaces by element list, per thread. Holds the group alive so the
// pointer key stays unique.
const CosetSpace& cached_coset_space(const GroupPtr& g, const std::vector<int>& elems) {
  thread_local std::map<std::pair<const FiniteGroup*, std::vector<int>>, std::pair<GroupPtr, CosetSpace>> cache;
  auto key = std::make_pair(g.get(), elems);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_pair(g, coset_space(g, Subgroup(g, elems)))).first;
  return it->second.second;
}

}  // namespace

Bispan realize_key(const GSet& T, const GSet& X, const OrbitKey& key) {
  const auto& g = X.group();
  auto view = parse_key(key);
  const CosetSpace& vspace = cached_coset_space(g, view.stabilizer);
  const GSet& V = vspace.set;
  std::vector<int> c(V.size());
  for (int p = 0; p < V.size(); ++p) c[p] = X.act(vspace.reps[p], view.x);
  std::vector<const CosetSpace*> parts;
  int total = 0;
  for (const auto& [L, t] : view.fiber) {
    parts.push_back(&cached_coset_space(g, L));
    total += parts.back()->set.size();
  }
  const int n = g->order();
  std::vector<int> flat(static_cast<std::size_t>(n) * total);
  std::vector<int> a, bv;
  a.reserve(total);
  bv.reserve(total);
  int off = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const CosetSpace& us = *parts[i];
    const int m = us.set.size();
    for (int x = 0; x < n; ++x)
      for (int p = 0; p < m; ++p) flat[x * total + off + p] = off + us.set.act(x, p);
    for (int r : us.reps) {
      a.push_back(T.act(r, view.fiber[i].second));
      bv.push_back(vspace.coset_of[r]);
    }
    off += m;
  }
  GSet U = gset_from_trusted(g, total, std::move(flat));
  return Bispan{T, std::move(U), V, X, std::move(a), std::move(bv), std::move(c)};
}

Bispan realize(const BispanClass& cls) {
  Bispan acc = zero_bispan(cls.T, cls.X);
  for (const auto& key : cls.components) acc = bispan_sum(acc, realize_key(cls.T, cls.X, key));
  return acc;
}

EffectiveElement EffectiveElement::from_bispan(const Bispan& b) { return from_class(bispan_canonical(b)); }

EffectiveElement EffectiveElement::from_class(const BispanClass& cls) {
  EffectiveElement e(cls.T, cls.X);
  for (const auto& k : cls.components) e.add_term(k);
  return e;
}

EffectiveElement EffectiveElement::basis(const GSet& T, const GSet& X, const OrbitKey& key) {
  EffectiveElement e(T, X);
  e.add_term(key);
  return e;
}

std::uint64_t EffectiveElement::component_count() const {
  std::uint64_t n = 0;
  for (const auto& [k, c] : terms_) n += c;
  return n;
}

void EffectiveElement::add_term(const OrbitKey& key, std::uint64_t count) {
  if (count == 0) return;
  terms_[key] += count;
}

Bispan EffectiveElement::realize() const { return tamb::realize(to_class()); }

BispanClass EffectiveElement::to_class() const {
  BispanClass cls{T_, X_, {}};
  for (const auto& [k, c] : terms_)
    for (std::uint64_t i = 0; i < c; ++i) cls.components.push_back(k);
  return cls;
}

VirtualElement VirtualElement::from_effective(const EffectiveElement& e) {
  VirtualElement v(e.T(), e.X());
  for (const auto& [k, c] : e.terms()) v.add_term(k, static_cast<std::int64_t>(c));
  return v;
}

void VirtualElement::add_term(const OrbitKey& key, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& slot = terms_[key];
  slot += coeff;
  if (slot == 0) terms_.erase(key);
}

Bispan bispan_transfer(const Bispan& b, const GMap& f) {
  if (!(f.source == b.X)) throw InputError("PortMismatch", "transfer map does not start at the bispan's base");
  std::vector<int> c(b.V.size());
  for (int v = 0; v < b.V.size(); ++v) c[v] = f(b.c[v]);
  return Bispan{b.T, b.U, b.V, f.target, b.a, b.b, std::move(c)};
}

Bispan bispan_restrict(const Bispan& b, const GMap& f) {
  if (!(f.target == b.X)) throw InputError("PortMismatch", "restriction map does not end at the bispan's base");
  GMap cmap{b.V, b.X, b.c};
  GMap bmap{b.U, b.V, b.b};
  auto pv = pullback(cmap, f);           // P = V x_X Y
  auto pu = pullback(bmap, pv.p1);       // Q = U x_V P
  std::vector<int> a(pu.object.size());
  for (int q = 0; q < pu.object.size(); ++q) a[q] = b.a[pu.p1(q)];
  return Bispan{b.T, pu.object, pv.object, f.source, std::move(a), pu.p2.values, pv.p2.values};
}

Bispan bispan_norm(const Bispan& b, const GMap& f) {
  if (!(f.source == b.X)) throw InputError("PortMismatch", "norm map does not start at the bispan's base");
  GMap cmap{b.V, b.X, b.c};
  GMap bmap{b.U, b.V, b.b};
  auto exp = dependent_product(cmap, f);
  auto pu = pullback(bmap, exp.e);  // P = U x_V A
  std::vector<int> a(pu.object.size()), bb(pu.object.size());
  for (int q = 0; q < pu.object.size(); ++q) {
    a[q] = b.a[pu.p1(q)];
    bb[q] = exp.pi2(pu.p2(q));
  }
  return Bispan{b.T, pu.object, exp.pi, f.target, std::move(a), std::move(bb), exp.p.values};
}

Bispan bispan_sum(const Bispan& x, const Bispan& y) {
  if (!(x.T == y.T) || !(x.X == y.X)) throw InputError("PortMismatch", "sum of bispans with different ports");
  auto U = coproduct(x.U, y.U).object;
  auto V = coproduct(x.V, y.V).object;
  std::vector<int> a = x.a, b = x.b, c = x.c;
  a.insert(a.end(), y.a.begin(), y.a.end());
  for (int v : y.b) b.push_back(v + x.V.size());
  c.insert(c.end(), y.c.begin(), y.c.end());
  return Bispan{x.T, U, V, x.X, std::move(a), std::move(b), std::move(c)};
}

EffectiveElement transfer(const EffectiveElement& e, const GMap& f) {
  if (!(f.source == e.X())) throw InputError("PortMismatch", "transfer map does not start at the element's base");
  EffectiveElement out(e.T(), f.target);
  // Transfer keeps V, so each component maps to one component.
  for (const auto& [k, c] : e.terms())
    for (const auto& key : bispan_canonical(bispan_transfer(realize_key(e.T(), e.X(), k), f)).components)
      out.add_term(key, c);
  return out;
}

EffectiveElement restrict(const EffectiveElement& e, const GMap& f) {
  if (!(f.target == e.X())) throw InputError("PortMismatch", "restriction map does not end at the element's base");
  EffectiveElement out(e.T(), f.source);
  for (const auto& [k, c] : e.terms())
    for (const auto& key : bispan_canonical(bispan_restrict(realize_key(e.T(), e.X(), k), f)).components)
      out.add_term(key, c);
  return out;
}

EffectiveElement norm(const EffectiveElement& e, const GMap& f) {
  if (!(f.source == e.X())) throw InputError("PortMismatch", "norm map does not start at the element's base");
  return EffectiveElement::from_bispan(bispan_norm(e.realize(), f));
}

EffectiveElement bispan_add(const EffectiveElement& x, const EffectiveElement& y) {
  if (!(x.T() == y.T()) || !(x.X() == y.X())) throw InputError("PortMismatch", "sum of elements with different ports");
  EffectiveElement out = x;
  for (const auto& [k, c] : y.terms()) out.add_term(k, c);
  return out;
}

EffectiveElement bispan_mul(const EffectiveElement& x, const EffectiveElement& y) {
  if (!(x.T() == y.T()) || !(x.X() == y.X()))
    throw InputError("PortMismatch", "product of elements with different ports");
  Bispan bx = x.realize();
  Bispan by = y.realize();
  auto fold = fold_map(x.X());
  const int nx = x.X().size();
  auto U = coproduct(bx.U, by.U).object;
  auto V = coproduct(bx.V, by.V).object;
  std::vector<int> a = bx.a, b = bx.b, c = bx.c;
  a.insert(a.end(), by.a.begin(), by.a.end());
  for (int v : by.b) b.push_back(v + bx.V.size());
  for (int xv : by.c) c.push_back(xv + nx);
  Bispan pair{x.T(), U, V, fold.source, std::move(a), std::move(b), std::move(c)};
  return EffectiveElement::from_bispan(bispan_norm(pair, fold));
}

EffectiveElement unit_element(const GSet& T, const GSet& X) { return EffectiveElement::from_bispan(unit_bispan(T, X)); }

EffectiveElement theta_element(const GSet& T) { return EffectiveElement::from_bispan(theta_bispan(T)); }

VirtualElement transfer(const VirtualElement& e, const GMap& f) {
  VirtualElement out(e.T(), f.target);
  for (const auto& [k, c] : e.terms())
    for (const auto& [k2, c2] : transfer(EffectiveElement::basis(e.T(), e.X(), k), f).terms())
      out.add_term(k2, c * static_cast<std::int64_t>(c2));
  return out;
}

VirtualElement restrict(const VirtualElement& e, const GMap& f) {
  VirtualElement out(e.T(), f.source);
  for (const auto& [k, c] : e.terms())
    for (const auto& [k2, c2] : restrict(EffectiveElement::basis(e.T(), e.X(), k), f).terms())
      out.add_term(k2, c * static_cast<std::int64_t>(c2));
  return out;
}

VirtualElement add(const VirtualElement& x, const VirtualElement& y) {
  if (!(x.T() == y.T()) || !(x.X() == y.X())) throw InputError("PortMismatch", "sum of elements with different ports");
  VirtualElement out = x;
  for (const auto& [k, c] : y.terms()) out.add_term(k, c);
  return out;
}

VirtualElement negate(const VirtualElement& x) {
  VirtualElement out(x.T(), x.X());
  for (const auto& [k, c] : x.terms()) out.add_term(k, -c);
  return out;
}

VirtualElement mul(const VirtualElement& x, const VirtualElement& y) {
  if (!(x.T() == y.T()) || !(x.X() == y.X()))
    throw InputError("PortMismatch", "product of elements with different ports");
  VirtualElement out(x.T(), x.X());
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) {
      auto p = bispan_mul(EffectiveElement::basis(x.T(), x.X(), k1), EffectiveElement::basis(x.T(), x.X(), k2));
      for (const auto& [k, c] : p.terms()) out.add_term(k, c1 * c2 * static_cast<std::int64_t>(c));
    }
  return out;
}

std::map<int, EffectiveElement> degree_split(const EffectiveElement& e) {
  std::map<int, EffectiveElement> out;
  for (const auto& [k, c] : e.terms()) {
    int d = key_degree(k);
    out.try_emplace(d, e.T(), e.X()).first->second.add_term(k, c);
  }
  return out;
}

std::map<int, VirtualElement> degree_split(const VirtualElement& e) {
  std::map<int, VirtualElement> out;
  for (const auto& [k, c] : e.terms()) {
    int d = key_degree(k);
    out.try_emplace(d, e.T(), e.X()).first->second.add_term(k, c);
  }
  return out;
}

}  // namespace tamb
