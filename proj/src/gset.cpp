#include "tamb/gset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "tamb/config.hpp"
#include "tamb/error.hpp"

namespace tamb {

namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

GSet::GSet(GroupPtr group, int size, std::vector<int> action) : group_(std::move(group)), size_(size) {
  if (!group_) throw InputError("BadAction", "missing group");
  const int n = group_->order();
  if (size < 0) throw InputError("BadAction", "negative size");
  if (static_cast<long long>(action.size()) != static_cast<long long>(n) * size)
    throw InputError("BadAction", "action table must have order x size entries");
  std::vector<char> seen(size);
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < size; ++x) {
      int y = action[g * size + x];
      if (y < 0 || y >= size) throw InputError("BadAction", "action[" + str(g) + "][" + str(x) + "] out of range");
      if (seen[y]) throw InputError("BadAction", "action row " + str(g) + " is not a permutation");
      seen[y] = 1;
    }
  }
  const int e = group_->identity();
  for (int x = 0; x < size; ++x)
    if (action[e * size + x] != x) throw InputError("BadAction", "identity does not act trivially on " + str(x));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < size; ++x)
        if (action[group_->mul(g, h) * size + x] != action[g * size + action[h * size + x]])
          throw InputError("BadAction", "action[" + str(g) + "*" + str(h) + "] != action[" + str(g) + "] o action[" +
                                            str(h) + "] at point " + str(x));
  action_ = std::make_shared<const std::vector<int>>(std::move(action));
}

GSet::GSet(GroupPtr group, int size, std::vector<int> flat, Unchecked)
    : group_(std::move(group)), size_(size), action_(std::make_shared<const std::vector<int>>(std::move(flat))) {}

GSet gset_from_trusted(GroupPtr group, int size, std::vector<int> flat) {
  return GSet(std::move(group), size, std::move(flat), GSet::Unchecked{});
}

GSet GSet::empty(const GroupPtr& g) { return gset_from_trusted(g, 0, {}); }

GSet GSet::point(const GroupPtr& g) { return trivial(g, 1); }

GSet GSet::trivial(const GroupPtr& g, int size) {
  std::vector<int> flat(static_cast<std::size_t>(g->order()) * size);
  for (int a = 0; a < g->order(); ++a)
    for (int x = 0; x < size; ++x) flat[a * size + x] = x;
  return gset_from_trusted(g, size, std::move(flat));
}

std::vector<std::vector<int>> GSet::action_rows() const {
  std::vector<std::vector<int>> rows(group_->order());
  for (int g = 0; g < group_->order(); ++g)
    for (int x = 0; x < size_; ++x) rows[g].push_back(act(g, x));
  return rows;
}

bool GSet::operator==(const GSet& o) const {
  if (size_ != o.size_ || !same_group(group_, o.group_)) return false;
  return action_ == o.action_ || size_ == 0 || *action_ == *o.action_;
}

bool is_equivariant(const GSet& source, const GSet& target, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != source.size()) return false;
  for (int v : values)
    if (v < 0 || v >= target.size()) return false;
  for (int g = 0; g < source.group()->order(); ++g)
    for (int x = 0; x < source.size(); ++x)
      if (values[source.act(g, x)] != target.act(g, values[x])) return false;
  return true;
}

GMap make_map(GSet source, GSet target, std::vector<int> values) {
  if (!same_group(source.group(), target.group())) throw InputError("GroupMismatch", "map between different groups");
  if (static_cast<int>(values.size()) != source.size())
    throw InputError("BadMap", "map has " + str(static_cast<int>(values.size())) + " values for a source of size " +
                                   str(source.size()));
  for (int v : values)
    if (v < 0 || v >= target.size()) throw InputError("BadMap", "map value " + str(v) + " out of range");
  for (int g = 0; g < source.group()->order(); ++g)
    for (int x = 0; x < source.size(); ++x)
      if (values[source.act(g, x)] != target.act(g, values[x]))
        throw InputError("NotEquivariant", "f(g.x) != g.f(x) for g=" + str(g) + ", x=" + str(x));
  return GMap{std::move(source), std::move(target), std::move(values)};
}

GMap identity_map(const GSet& x) {
  std::vector<int> v(x.size());
  std::iota(v.begin(), v.end(), 0);
  return GMap{x, x, std::move(v)};
}

GMap compose(const GMap& g, const GMap& f) {
  if (!(f.target == g.source)) throw InputError("TargetMismatch", "cannot compose: target of f is not source of g");
  std::vector<int> v(f.source.size());
  for (int x = 0; x < f.source.size(); ++x) v[x] = g(f(x));
  return GMap{f.source, g.target, std::move(v)};
}

GMap to_point(const GSet& x) { return GMap{x, GSet::point(x.group()), std::vector<int>(x.size(), 0)}; }

std::vector<int> stabilizer(const GSet& x, int point) {
  std::vector<int> s;
  for (int g = 0; g < x.group()->order(); ++g)
    if (x.act(g, point) == point) s.push_back(g);
  return s;
}

std::vector<int> orbit_ids(const GSet& x) {
  std::vector<int> id(x.size(), -1);
  int next = 0;
  for (int p = 0; p < x.size(); ++p) {
    if (id[p] >= 0) continue;
    for (int g = 0; g < x.group()->order(); ++g) id[x.act(g, p)] = next;
    ++next;
  }
  return id;
}

std::vector<Orbit> orbit_decompose(const GSet& x) {
  auto ids = orbit_ids(x);
  std::vector<Orbit> out;
  for (int p = 0; p < x.size(); ++p) {
    if (ids[p] == static_cast<int>(out.size())) out.push_back(Orbit{{}, Subgroup(x.group(), stabilizer(x, p)), p});
    out[ids[p]].points.push_back(p);
  }
  return out;
}

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(h.parent(), g)) throw InputError("NotSubgroup", "subgroup of a different group");
  const int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  auto claim = [&](int x) {
    if (coset_of[x] >= 0) return;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int e : h.elements()) coset_of[g->mul(x, e)] = c;
  };
  claim(g->identity());
  for (int x = 0; x < n; ++x) claim(x);
  const int m = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < m; ++c) flat[a * m + c] = coset_of[g->mul(a, reps[c])];
  return CosetSpace{gset_from_trusted(g, m, std::move(flat)), h, std::move(reps), std::move(coset_of)};
}

GSet make_orbit(const GroupPtr& g, const Subgroup& h) { return coset_space(g, h).set; }

Pullback pullback(const GMap& f, const GMap& g) {
  if (!(f.target == g.target)) throw InputError("TargetMismatch", "pullback of maps with different targets");
  const GSet& x = f.source;
  const GSet& y = g.source;
  std::vector<std::vector<int>> over(f.target.size());
  for (int b = 0; b < y.size(); ++b) over[g(b)].push_back(b);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> index(static_cast<std::size_t>(x.size()) * y.size(), -1);
  for (int a = 0; a < x.size(); ++a)
    for (int b : over[f(a)]) {
      index[a * y.size() + b] = static_cast<int>(pairs.size());
      pairs.emplace_back(a, b);
    }
  const int m = static_cast<int>(pairs.size());
  const auto& grp = x.group();
  std::vector<int> flat(static_cast<std::size_t>(grp->order()) * m);
  for (int s = 0; s < grp->order(); ++s)
    for (int p = 0; p < m; ++p)
      flat[s * m + p] = index[x.act(s, pairs[p].first) * y.size() + y.act(s, pairs[p].second)];
  GSet obj = gset_from_trusted(grp, m, std::move(flat));
  std::vector<int> v1(m), v2(m);
  for (int p = 0; p < m; ++p) {
    v1[p] = pairs[p].first;
    v2[p] = pairs[p].second;
  }
  return Pullback{obj, GMap{obj, x, std::move(v1)}, GMap{obj, y, std::move(v2)}, std::move(pairs)};
}

Coproduct coproduct(const GSet& x, const GSet& y) {
  if (!same_group(x.group(), y.group())) throw InputError("GroupMismatch", "coproduct of sets over different groups");
  const int m = x.size() + y.size();
  const auto& grp = x.group();
  std::vector<int> flat(static_cast<std::size_t>(grp->order()) * m);
  for (int g = 0; g < grp->order(); ++g) {
    for (int a = 0; a < x.size(); ++a) flat[g * m + a] = x.act(g, a);
    for (int b = 0; b < y.size(); ++b) flat[g * m + x.size() + b] = x.size() + y.act(g, b);
  }
  GSet obj = gset_from_trusted(grp, m, std::move(flat));
  std::vector<int> v1(x.size()), v2(y.size());
  std::iota(v1.begin(), v1.end(), 0);
  std::iota(v2.begin(), v2.end(), x.size());
  return Coproduct{obj, GMap{x, obj, std::move(v1)}, GMap{y, obj, std::move(v2)}};
}

GSet product(const GSet& x, const GSet& y) {
  if (!same_group(x.group(), y.group())) throw InputError("GroupMismatch", "product of sets over different groups");
  const int m = x.size() * y.size();
  const auto& grp = x.group();
  std::vector<int> flat(static_cast<std::size_t>(grp->order()) * m);
  for (int g = 0; g < grp->order(); ++g)
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < y.size(); ++b) flat[g * m + a * y.size() + b] = x.act(g, a) * y.size() + y.act(g, b);
  return gset_from_trusted(grp, m, std::move(flat));
}

GMap fold_map(const GSet& x) {
  auto sum = coproduct(x, x).object;
  std::vector<int> v(sum.size());
  for (int p = 0; p < sum.size(); ++p) v[p] = p % std::max(1, x.size());
  return GMap{sum, x, std::move(v)};
}

GMap coproduct_map(const GMap& f, const GMap& g) {
  auto src = coproduct(f.source, g.source).object;
  auto dst = coproduct(f.target, g.target).object;
  std::vector<int> v;
  v.reserve(src.size());
  for (int a : f.values) v.push_back(a);
  for (int b : g.values) v.push_back(f.target.size() + b);
  return GMap{src, dst, std::move(v)};
}

GMap copair(const GMap& f, const GMap& g) {
  if (!(f.target == g.target)) throw InputError("TargetMismatch", "copair of maps with different targets");
  auto src = coproduct(f.source, g.source).object;
  std::vector<int> v = f.values;
  v.insert(v.end(), g.values.begin(), g.values.end());
  return GMap{src, f.target, std::move(v)};
}

ExponentialDiagram dependent_product(const GMap& i, const GMap& j) {
  if (!(i.target == j.source)) throw InputError("NotComposable", "target of i is not the source of j");
  const GSet& xs = i.source;
  const GSet& ys = j.source;
  const GSet& zs = j.target;
  const auto& grp = xs.group();

  std::vector<std::vector<int>> fiber(zs.size());  // ascending y over z
  std::vector<int> pos_in_fiber(ys.size());
  for (int y = 0; y < ys.size(); ++y) {
    pos_in_fiber[y] = static_cast<int>(fiber[j(y)].size());
    fiber[j(y)].push_back(y);
  }
  std::vector<std::vector<int>> choices(ys.size());  // ascending x over y
  std::vector<int> pos_in_choices(xs.size());
  for (int x = 0; x < xs.size(); ++x) {
    pos_in_choices[x] = static_cast<int>(choices[i(x)].size());
    choices[i(x)].push_back(x);
  }

  const std::uint64_t cap = limits().section_cap;
  std::vector<std::uint64_t> count(zs.size(), 1);
  std::uint64_t total = 0;
  for (int z = 0; z < zs.size(); ++z) {
    for (int y : fiber[z]) {
      auto c = static_cast<std::uint64_t>(choices[y].size());
      if (c == 0) {
        count[z] = 0;
        break;
      }
      if (count[z] > cap / c) throw ResourceBound("section_cap", "fiber section count exceeds " + std::to_string(cap));
      count[z] *= c;
    }
    total += count[z];
    if (total > cap) throw ResourceBound("section_cap", "total section count exceeds " + std::to_string(cap));
  }

  std::vector<int> offset(zs.size() + 1, 0);
  for (int z = 0; z < zs.size(); ++z) offset[z + 1] = offset[z] + static_cast<int>(count[z]);
  const int m = offset[zs.size()];

  ExponentialDiagram d{i, j, {}, {}, {}, {}, {}, {}, std::vector<int>(m), std::vector<std::vector<int>>(m)};
  for (int z = 0; z < zs.size(); ++z) {
    const auto& fz = fiber[z];
    std::vector<int> digit(fz.size(), 0);
    for (int r = 0; r < static_cast<int>(count[z]); ++r) {
      std::vector<int> s(fz.size());
      for (std::size_t k = 0; k < fz.size(); ++k) s[k] = choices[fz[k]][digit[k]];
      d.section_base[offset[z] + r] = z;
      d.section_values[offset[z] + r] = std::move(s);
      for (int k = static_cast<int>(fz.size()) - 1; k >= 0; --k) {
        if (++digit[k] < static_cast<int>(choices[fz[k]].size())) break;
        digit[k] = 0;
      }
    }
  }

  auto rank_of = [&](int z, const std::vector<int>& s) {
    int r = 0;
    const auto& fz = fiber[z];
    for (std::size_t k = 0; k < fz.size(); ++k) r = r * static_cast<int>(choices[fz[k]].size()) + pos_in_choices[s[k]];
    return offset[z] + r;
  };

  std::vector<int> flat(static_cast<std::size_t>(grp->order()) * m);
  for (int g = 0; g < grp->order(); ++g) {
    int ginv = grp->inv(g);
    for (int p = 0; p < m; ++p) {
      int z = d.section_base[p];
      int gz = zs.act(g, z);
      const auto& fgz = fiber[gz];
      std::vector<int> s(fgz.size());
      for (std::size_t k = 0; k < fgz.size(); ++k) {
        int y = ys.act(ginv, fgz[k]);
        s[k] = xs.act(g, d.section_values[p][pos_in_fiber[y]]);
      }
      flat[g * m + p] = rank_of(gz, s);
    }
  }
  d.pi = gset_from_trusted(grp, m, std::move(flat));
  std::vector<int> pv(d.section_base);
  d.p = GMap{d.pi, zs, std::move(pv)};
  auto pb = pullback(j, d.p);
  d.a = pb.object;
  std::vector<int> ev(d.a.size());
  for (int q = 0; q < d.a.size(); ++q) {
    auto [y, sec] = pb.pairs[q];
    ev[q] = d.section_values[sec][pos_in_fiber[y]];
  }
  d.e = GMap{d.a, xs, std::move(ev)};
  d.pi2 = pb.p2;
  d.a_to_y = pb.p1;
  return d;
}

ExponentialCheck is_exponential(const GMap& i, const GMap& j, const GMap& f, const GMap& g, const GMap& h) {
  if (!(i.target == j.source) || !(f.target == i.source) || !(f.source == g.source) || !(g.target == h.source) ||
      !(h.target == j.target))
    throw InputError("ShapeError", "maps do not form the exponential-diagram shape");
  const int na = f.source.size();
  for (int a = 0; a < na; ++a)
    if (j(i(f(a))) != h(g(a))) throw InputError("ShapeError", "square does not commute at point " + str(a));

  ExponentialCheck out;
  const GSet& ys = i.target;
  const GSet& bs = h.source;
  // A must be Y x_Z B via a |-> (i f a, g a).
  std::vector<int> over(static_cast<std::size_t>(ys.size()) * bs.size(), -1);
  for (int a = 0; a < na; ++a) {
    int key = i(f(a)) * bs.size() + g(a);
    if (over[key] >= 0) {
      out.reason = "A -> Y x_Z B is not injective";
      return out;
    }
    over[key] = a;
  }
  int pairs = 0;
  for (int y = 0; y < ys.size(); ++y)
    for (int b = 0; b < bs.size(); ++b)
      if (j(y) == h(b)) ++pairs;
  if (pairs != na) {
    out.reason = "A -> Y x_Z B is not surjective";
    return out;
  }

  auto d = dependent_product(i, j);
  if (d.pi.size() != bs.size()) {
    out.reason = "|B| = " + str(bs.size()) + " but the dependent product has " + str(d.pi.size()) + " points";
    return out;
  }
  std::map<std::pair<int, std::vector<int>>, int> lookup;
  for (int p = 0; p < d.pi.size(); ++p) lookup[{d.section_base[p], d.section_values[p]}] = p;

  std::vector<int> to_pi(bs.size(), -1);
  std::vector<char> hit(d.pi.size(), 0);
  for (int b = 0; b < bs.size(); ++b) {
    int z = h(b);
    std::vector<int> s;
    for (int y = 0; y < ys.size(); ++y)
      if (j(y) == z) s.push_back(f(over[y * bs.size() + b]));
    auto it = lookup.find({z, s});
    if (it == lookup.end() || hit[it->second]) {
      out.reason = "B -> Pi is not a bijection";
      return out;
    }
    hit[it->second] = 1;
    to_pi[b] = it->second;
  }
  if (!is_equivariant(bs, d.pi, to_pi)) {
    out.reason = "B -> Pi is not equivariant";
    return out;
  }
  // A -> Y x_Z Pi
  std::vector<int> idx(static_cast<std::size_t>(ys.size()) * d.pi.size(), -1);
  for (int q = 0; q < d.a.size(); ++q) idx[d.a_to_y(q) * d.pi.size() + d.pi2(q)] = q;
  std::vector<int> to_a(na);
  for (int a = 0; a < na; ++a) to_a[a] = idx[i(f(a)) * d.pi.size() + to_pi[g(a)]];
  out.exponential = true;
  out.b_to_pi = GMap{bs, d.pi, std::move(to_pi)};
  out.a_to_a = GMap{f.source, d.a, std::move(to_a)};
  return out;
}

int InducedSet::point(int g, int x) const {
  int c = coset_of[g];
  const auto& grp = *subgroup.parent();
  int h = grp.mul(grp.inv(reps[c]), g);
  return c * base_size + base.act(subgroup.local(h), x);
}

InducedSet induce(const GroupPtr& g, const Subgroup& h, const GSet& x) {
  if (!same_group(h.parent(), g)) throw InputError("NotSubgroup", "subgroup of a different group");
  if (!same_group(x.group(), h.as_group())) throw InputError("GroupMismatch", "induced set is not over the subgroup");
  auto cs = coset_space(g, h);
  InducedSet ind{{}, x, h, cs.reps, cs.coset_of, x.size()};
  const int m = static_cast<int>(cs.reps.size()) * x.size();
  std::vector<int> flat(static_cast<std::size_t>(g->order()) * m);
  for (int a = 0; a < g->order(); ++a)
    for (int p = 0; p < m; ++p) {
      auto [r, y] = ind.split(p);
      flat[a * m + p] = ind.point(g->mul(a, r), y);
    }
  ind.set = gset_from_trusted(g, m, std::move(flat));
  return ind;
}

GMap induce_map(const InducedSet& src, const InducedSet& dst, const GMap& f) {
  if (!(f.source == src.base) || !(f.target == dst.base) || src.reps != dst.reps)
    throw InputError("TargetMismatch", "induced map endpoints do not match");
  std::vector<int> v(src.set.size());
  for (int p = 0; p < src.set.size(); ++p) {
    auto [r, x] = src.split(p);
    v[p] = dst.point(r, f(x));
  }
  return GMap{src.set, dst.set, std::move(v)};
}

GMap induce_adjoint(const InducedSet& src, const GSet& y, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != src.base_size) throw InputError("BadMap", "adjoint needs one value per point");
  std::vector<int> v(src.set.size());
  for (int p = 0; p < src.set.size(); ++p) {
    auto [r, x] = src.split(p);
    v[p] = y.act(r, values[x]);
  }
  return make_map(src.set, y, std::move(v));
}

GSet restrict(const Subgroup& h, const GSet& x) {
  if (!same_group(h.parent(), x.group())) throw InputError("NotSubgroup", "subgroup of a different group");
  const int m = x.size();
  std::vector<int> flat(static_cast<std::size_t>(h.order()) * m);
  for (int i = 0; i < h.order(); ++i)
    for (int p = 0; p < m; ++p) flat[i * m + p] = x.act(h.global(i), p);
  return gset_from_trusted(h.as_group(), m, std::move(flat));
}

GMap restrict_map(const Subgroup& h, const GMap& f) {
  return GMap{restrict(h, f.source), restrict(h, f.target), f.values};
}

std::vector<std::pair<int, int>> gset_canonical_form(const GSet& x) {
  auto classes = conj_classes(x.group());
  std::map<int, int> mult;
  for (const auto& o : orbit_decompose(x)) ++mult[conj_class_index(classes, o.stabilizer)];
  return {mult.begin(), mult.end()};
}

std::optional<GMap> extend_from_orbit_reps(const GSet& x, const GSet& y, const std::vector<int>& rep_images) {
  auto orbits = orbit_decompose(x);
  if (rep_images.size() != orbits.size()) return std::nullopt;
  std::vector<int> v(x.size(), -1);
  const auto& grp = *x.group();
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    int rep = orbits[k].representative;
    int img = rep_images[k];
    if (img < 0 || img >= y.size()) return std::nullopt;
    for (int g = 0; g < grp.order(); ++g) {
      int p = x.act(g, rep);
      int q = y.act(g, img);
      if (v[p] >= 0 && v[p] != q) return std::nullopt;
      v[p] = q;
    }
  }
  return GMap{x, y, std::move(v)};
}

std::optional<GMap> gset_iso(const GSet& x, const GSet& y) {
  if (!same_group(x.group(), y.group()) || x.size() != y.size()) return std::nullopt;
  if (gset_canonical_form(x) != gset_canonical_form(y)) return std::nullopt;
  const auto& grp = *x.group();
  auto xo = orbit_decompose(x);
  auto yo = orbit_decompose(y);
  std::vector<char> used(yo.size(), 0);
  std::vector<int> images;
  for (const auto& o : xo) {
    int found = -1;
    for (std::size_t k = 0; k < yo.size() && found < 0; ++k) {
      if (used[k] || yo[k].points.size() != o.points.size()) continue;
      for (int p : yo[k].points) {
        if (stabilizer(y, p) == o.stabilizer.elements()) {
          found = p;
          used[k] = 1;
          break;
        }
      }
    }
    if (found < 0) return std::nullopt;
    images.push_back(found);
  }
  (void)grp;
  auto m = extend_from_orbit_reps(x, y, images);
  if (!m) throw InternalError("gset_iso: matched orbits failed to extend");
  return m;
}

namespace {

std::vector<std::vector<int>> rep_candidates(const GSet& x, const GSet& y, const std::vector<Orbit>& orbits) {
  std::vector<std::vector<int>> cands;
  for (const auto& o : orbits) {
    std::vector<int> c;
    for (int q = 0; q < y.size(); ++q) {
      bool fixed = true;
      for (int s : o.stabilizer.elements())
        if (y.act(s, q) != q) {
          fixed = false;
          break;
        }
      if (fixed) c.push_back(q);
    }
    cands.push_back(std::move(c));
  }
  (void)x;
  return cands;
}

}  // namespace

std::uint64_t count_gmaps(const GSet& x, const GSet& y) {
  auto orbits = orbit_decompose(x);
  std::uint64_t total = 1;
  for (const auto& c : rep_candidates(x, y, orbits)) {
    if (c.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / c.size()) return std::numeric_limits<std::uint64_t>::max();
    total *= c.size();
  }
  return total;
}

std::vector<GMap> all_gmaps(const GSet& x, const GSet& y) {
  if (!same_group(x.group(), y.group())) throw InputError("GroupMismatch", "maps between different groups");
  auto orbits = orbit_decompose(x);
  auto cands = rep_candidates(x, y, orbits);
  std::uint64_t total = count_gmaps(x, y);
  if (total > limits().enum_cap)
    throw ResourceBound("enum_cap", "equivariant map count " + std::to_string(total) + " exceeds cap");
  std::vector<GMap> out;
  if (total == 0) return out;
  out.reserve(total);
  std::vector<std::size_t> digit(orbits.size(), 0);
  std::vector<int> images(orbits.size());
  while (true) {
    for (std::size_t k = 0; k < orbits.size(); ++k) images[k] = cands[k][digit[k]];
    out.push_back(*extend_from_orbit_reps(x, y, images));
    int k = static_cast<int>(orbits.size()) - 1;
    while (k >= 0 && ++digit[k] == cands[k].size()) digit[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

GSet disjoint_union_of_orbits(const GroupPtr& g, const std::vector<Subgroup>& stabs) {
  GSet acc = GSet::empty(g);
  for (const auto& h : stabs) acc = coproduct(acc, make_orbit(g, h)).object;
  return acc;
}

std::vector<GSet> gsets_up_to(const GroupPtr& g, int k) {
  auto classes = conj_classes(g);
  std::vector<int> orbit_size;
  for (const auto& c : classes) orbit_size.push_back(c.representative.index());
  // multisets of class indices as nondecreasing sequences
  std::vector<std::pair<int, std::vector<int>>> found;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int size) -> void {
    found.emplace_back(size, cur);
    for (int c = start; c < static_cast<int>(classes.size()); ++c) {
      if (size + orbit_size[c] > k) continue;
      cur.push_back(c);
      self(self, c, size + orbit_size[c]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(found.begin(), found.end());
  std::vector<GSet> out;
  for (const auto& [size, cls] : found) {
    std::vector<Subgroup> stabs;
    for (int c : cls) stabs.push_back(classes[c].representative);
    out.push_back(disjoint_union_of_orbits(g, stabs));
  }
  return out;
}

}  // namespace tamb
