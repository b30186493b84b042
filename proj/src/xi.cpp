#include "tamb/xi.hpp"

#include <algorithm>
#include <numeric>

#include "tamb/error.hpp"
#include "tamb/free_tambara.hpp"
#include "tamb/parallel.hpp"

namespace tamb {

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) inv[p[j]] = static_cast<int>(j);
  return inv;
}

std::string perm_string(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s + ")";
}

std::string phi_string(const PhiSubgroup& p) {
  std::string s = "H=" + perm_string(p.H.elements()) + " phi=[";
  for (std::size_t i = 0; i < p.H.elements().size(); ++i)
    s += (i ? " " : "") + perm_string(p.perm(p.H.elements()[i]));
  return s + "]";
}

}  // namespace

std::vector<int> PhiSubgroup::perm(int h) const { return perm_from_index(n, phi(h)); }

PhiSubgroup make_phi_subgroup(const Subgroup& h, const GroupHom& phi, int n) {
  if (!(phi.source == h)) throw InputError("BadHom", "phi is defined on a different subgroup");
  if (phi.target->order() != symmetric_group(n)->order()) throw InputError("BadHom", "phi does not land in Sigma_n");
  if (!is_homomorphism(phi)) throw InputError("BadHom", "phi is not a homomorphism");
  // the graph meets 1 x Sigma_n only in the identity
  if (phi(h.parent()->identity()) != phi.target->identity()) throw InputError("BadHom", "phi(e) is not the identity");
  return PhiSubgroup{h, phi, n};
}

std::vector<PhiSubgroup> family_FGn(const GroupPtr& g, int n) {
  std::vector<PhiSubgroup> out;
  for (const auto& h : all_subgroups(g))
    for (auto& phi : homs_to_sym(h, n)) out.push_back(make_phi_subgroup(h, phi, n));
  return out;
}

std::vector<int> exp_point(int index, int t_size, int n) {
  std::vector<int> f(n);
  for (int j = 0; j < n; ++j) {
    f[j] = index % t_size;
    index /= t_size;
  }
  return f;
}

int exp_index(const std::vector<int>& f, int t_size) {
  int idx = 0;
  for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) idx = idx * t_size + f[j];
  return idx;
}

GSet exp_phi(const GSet& T, const PhiSubgroup& p) {
  const int ts = T.size();
  std::uint64_t size = 1;
  for (int j = 0; j < p.n; ++j) {
    size *= static_cast<std::uint64_t>(ts);
    if (size > limits().exp_cap) throw ResourceBound("exp_cap", "|T|^n exceeds the exponential cap");
  }
  const auto& hg = p.H.as_group();
  const int m = static_cast<int>(size), order = hg->order();
  std::vector<int> flat(static_cast<std::size_t>(order) * m);
  for (int i = 0; i < order; ++i) {
    int h = p.H.global(i);
    auto inv = inverse_perm(p.perm(h));
    for (int x = 0; x < m; ++x) {
      auto f = exp_point(x, ts, p.n);
      std::vector<int> hf(p.n);
      for (int j = 0; j < p.n; ++j) hf[j] = T.act(h, f[inv[j]]);
      flat[i * m + x] = exp_index(hf, ts);
    }
  }
  return GSet(hg, m, std::move(flat));
}

XiDiagram xi_diagram(const PhiSubgroup& p, const GSet& T) {
  const auto& g = T.group();
  GSet y = exp_phi(T, p);
  const auto& hg = p.H.as_group();
  const int n = p.n, m = y.size() * n, order = hg->order();
  // (T^n)^phi x {0..n-1} with point f * n + j
  std::vector<int> flat(static_cast<std::size_t>(order) * m);
  for (int i = 0; i < order; ++i) {
    auto s = p.perm(p.H.global(i));
    for (int f = 0; f < y.size(); ++f)
      for (int j = 0; j < n; ++j) flat[i * m + f * n + j] = y.act(i, f) * n + s[j];
  }
  GSet w = gset_from_trusted(hg, m, std::move(flat));
  GSet th = restrict(p.H, T);
  std::vector<int> eval(m), proj(m);
  for (int f = 0; f < y.size(); ++f) {
    auto fv = exp_point(f, T.size(), n);
    for (int j = 0; j < n; ++j) {
      eval[f * n + j] = fv[j];
      proj[f * n + j] = f;
    }
  }
  if (!is_equivariant(w, th, eval) || !is_equivariant(w, y, proj))
    throw InternalError("evaluation or projection is not equivariant");
  XiDiagram d{induce(g, p.H, y), induce(g, p.H, w), {}};
  GMap b = induce_map(d.W, d.E, GMap{w, y, proj});
  GMap a = induce_adjoint(d.W, T, eval);
  d.bispan = Bispan{T, d.W.set, d.E.set, d.E.set, a.values, b.values, identity_map(d.E.set).values};
  return d;
}

BispanClass xi_generator(const PhiSubgroup& p, const GSet& T) { return bispan_canonical(xi_diagram(p, T).bispan); }

bool orbit_map_condition(const PhiSubgroup& l, const PhiSubgroup& h, int g, const std::vector<int>& sigma) {
  if (!same_group(l.H.parent(), h.H.parent()) || l.n != h.n) return false;
  const auto& grp = *h.H.parent();
  auto sinv = inverse_perm(sigma);
  for (int x : l.H.elements()) {
    int y = grp.conj(grp.inv(g), x);  // g^-1 x g
    if (!h.H.contains(y)) return false;
    auto ph = h.perm(y), lam = l.perm(x);
    for (int j = 0; j < h.n; ++j)
      if (lam[j] != sigma[ph[sinv[j]]]) return false;
  }
  return true;
}

XiNaturalityReport xi_naturality_check(const PhiSubgroup& l, const PhiSubgroup& h, int g, const std::vector<int>& sigma,
                                       const GSet& T, bool omit_sigma) {
  XiNaturalityReport rep;
  const auto& grp = *T.group();
  const int n = h.n, ts = T.size();
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  if (!omit_sigma) s = sigma;
  auto sinv = inverse_perm(s);
  const int ginv = grp.inv(g);
  auto dl = xi_diagram(l, T), dh = xi_diagram(h, T);
  // on base points of the E and W sides
  auto twist = [&](int f) {
    auto fv = exp_point(f, ts, n);
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) out[j] = T.act(ginv, fv[s[j]]);
    return exp_index(out, ts);
  };
  auto psi_e_from = [&](int k, int f) { return dh.E.point(grp.mul(k, g), twist(f)); };
  auto psi_w_from = [&](int k, int y) { return dh.W.point(grp.mul(k, g), twist(y / n) * n + sinv[y % n]); };
  const GSet& el = dl.E.set;
  const GSet& wl = dl.W.set;
  std::vector<int> psi_e(el.size()), psi_w(wl.size());
  for (int p = 0; p < el.size(); ++p) {
    auto [k, f] = dl.E.split(p);
    psi_e[p] = psi_e_from(k, f);
  }
  for (int p = 0; p < wl.size(); ++p) {
    auto [k, y] = dl.W.split(p);
    psi_w[p] = psi_w_from(k, y);
  }
  auto fail = [&](const std::string& what) {
    rep.failures.push_back(what + " for L: " + phi_string(l) + ", H: " + phi_string(h) + ", g=" + std::to_string(g) +
                           ", sigma=" + perm_string(sigma) + (omit_sigma ? " (sigma omitted)" : ""));
  };
  // well-defined: every representative [k, y] of a class gives the same image
  bool defined = true;
  for (int k = 0; k < grp.order() && defined; ++k) {
    for (int f = 0; f < dl.E.base_size && defined; ++f)
      if (psi_e_from(k, f) != psi_e[dl.E.point(k, f)]) defined = false;
    for (int y = 0; y < dl.W.base_size && defined; ++y)
      if (psi_w_from(k, y) != psi_w[dl.W.point(k, y)]) defined = false;
  }
  ++rep.checks;
  if (!defined) fail("map is not well defined on G x_L");
  bool equiv = is_equivariant(el, dh.E.set, psi_e) && is_equivariant(wl, dh.W.set, psi_w);
  ++rep.checks;
  if (!equiv) fail("map is not equivariant");
  bool eval = true, square = true;
  for (int p = 0; p < wl.size(); ++p) {
    if (dh.bispan.a[psi_w[p]] != dl.bispan.a[p]) eval = false;
    if (dh.bispan.b[psi_w[p]] != psi_e[dl.bispan.b[p]]) square = false;
  }
  rep.checks += 2;
  if (!eval) fail("evaluation triangle does not commute");
  if (!square) fail("projection square does not commute");
  // pullback of G-sets: the maps are G-maps and W_L -> E_L x_{E_H} W_H is a bijection
  std::vector<std::pair<int, int>> img;
  for (int p = 0; p < wl.size(); ++p) img.emplace_back(dl.bispan.b[p], psi_w[p]);
  std::sort(img.begin(), img.end());
  bool injective = std::adjacent_find(img.begin(), img.end()) == img.end();
  std::uint64_t pb_size = 0;
  for (int e = 0; e < el.size(); ++e)
    for (int w = 0; w < dh.W.set.size(); ++w)
      if (dh.bispan.b[w] == psi_e[e]) ++pb_size;
  ++rep.checks;
  if (!equiv || !square || !injective || pb_size != img.size()) fail("square is not a pullback");
  if (defined && equiv) {
    ++rep.checks;
    auto pulled = restrict(EffectiveElement::from_bispan(dh.bispan), GMap{el, dh.E.set, psi_e});
    if (!(pulled == EffectiveElement::from_bispan(dl.bispan))) fail("H generator does not restrict to the L generator");
  }
  return rep;
}

XiSweepReport xi_naturality_sweep(const GSet& T, int n, bool omit_sigma, ExecPolicy policy) {
  const auto& g = T.group();
  auto fam = family_FGn(g, n);
  auto sym = symmetric_group(n);
  const std::size_t m = fam.size();
  struct Result {
    std::uint64_t connections = 0, checks = 0;
    std::vector<std::string> failures;
  };
  auto res = indexed_map<Result>(m * m, policy, [&](std::size_t idx) {
    Result r;
    const auto& l = fam[idx / m];
    const auto& h = fam[idx % m];
    for (int x = 0; x < g->order(); ++x)
      for (int si = 0; si < sym->order(); ++si) {
        auto sigma = perm_from_index(n, si);
        if (!orbit_map_condition(l, h, x, sigma)) continue;
        ++r.connections;
        auto c = xi_naturality_check(l, h, x, sigma, T, omit_sigma);
        r.checks += c.checks;
        for (auto& f : c.failures) r.failures.push_back(std::move(f));
      }
    return r;
  });
  XiSweepReport rep;
  rep.pairs = m * m;
  for (auto& r : res) {
    rep.connections += r.connections;
    rep.checks += r.checks;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

std::vector<XiWitness> xi_surjectivity(const GSet& T, int n, ExecPolicy policy) {
  const auto& g = T.group();
  GSet pt = GSet::point(g);
  auto keys = ft_basis(T, pt, n);
  auto found = indexed_map<std::optional<XiWitness>>(keys.size(), policy, [&](std::size_t i) {
    const auto& key = keys[i];
    auto view = parse_key(key);
    Subgroup K(g, view.stabilizer);
    auto b = realize_key(T, pt, key);
    auto cs = coset_space(g, K);
    // fiber over eK, numbered in increasing order
    std::vector<int> fiber;
    for (int u = 0; u < b.U.size(); ++u)
      if (b.b[u] == 0) fiber.push_back(u);
    if (static_cast<int>(fiber.size()) != n) throw InternalError("WitnessFailed: fiber of " + key_to_string(key));
    std::vector<int> pos(b.U.size(), -1);
    for (int j = 0; j < n; ++j) pos[fiber[j]] = j;
    std::vector<int> values;
    for (int k : K.elements()) {
      std::vector<int> p(n);
      for (int j = 0; j < n; ++j) p[j] = pos[b.U.act(k, fiber[j])];
      values.push_back(perm_index(p));
    }
    auto phi = make_phi_subgroup(K, GroupHom{K, symmetric_group(n), values}, n);
    std::vector<int> f(n);
    for (int j = 0; j < n; ++j) f[j] = b.a[fiber[j]];
    auto d = xi_diagram(phi, T);
    const int y = exp_index(f, T.size());
    std::vector<int> adj(cs.set.size());
    for (int q = 0; q < cs.set.size(); ++q) adj[q] = d.E.point(cs.reps[q], y);
    XiWitness w{key, phi, f, adj, false};
    if (!is_equivariant(cs.set, d.E.set, adj)) throw InternalError("WitnessFailed: adjoint not equivariant for " + key_to_string(key));
    auto img = transfer(restrict(EffectiveElement::from_bispan(d.bispan), GMap{cs.set, d.E.set, adj}), to_point(cs.set));
    w.verified = img == EffectiveElement::basis(T, pt, key);
    if (!w.verified) throw InternalError("WitnessFailed: " + key_to_string(key));
    return std::optional<XiWitness>(std::move(w));
  });
  std::vector<XiWitness> out;
  for (auto& w : found) out.push_back(std::move(*w));
  return out;
}

}  // namespace tamb
