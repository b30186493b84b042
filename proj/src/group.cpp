#include "tamb/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "tamb/config.hpp"
#include "tamb/error.hpp"

namespace tamb {

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    auto& row = t[static_cast<std::size_t>(a)];
    row.reserve(static_cast<std::size_t>(order_));
    for (int b = 0; b < order_; ++b) row.push_back(mul(a, b));
  }
  return t;
}

GroupPtr group_from_trusted_table(int order, std::vector<int> flat) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->mult_ = std::move(flat);
  g->identity_ = 0;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = g->mul(e, a) == a;
    if (ok) {
      g->identity_ = e;
      break;
    }
  }
  g->inverse_.assign(static_cast<std::size_t>(order), 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g->mul(a, b) == g->identity_) g->inverse_[static_cast<std::size_t>(a)] = b;
  return g;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("NotSquare", "empty multiplication table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != n)
      throw InputError("NotSquare", "row " + std::to_string(a) + " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(n));
    for (int b = 0; b < n; ++b) {
      int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw InputError("IndexOutOfRange", "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                                ") = " + std::to_string(v));
      flat.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a * n + b)]; };

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw InputError("NoIdentity", "no two-sided identity element");

  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = at(a, b) == identity && at(b, a) == identity;
    if (!found) throw InputError("NoInverse", "element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw InputError("NotAssociative", "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                                 std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                                 std::to_string(b) + "*" + std::to_string(c) + ")");
  return group_from_trusted_table(n, std::move(flat));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

GroupPtr trivial_group() { return group_from_trusted_table(1, {0}); }

GroupPtr cyclic_group(int n) {
  if (n < 1) throw InputError("BadGroup", "cyclic group order must be positive");
  std::vector<int> flat(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return group_from_trusted_table(n, std::move(flat));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw InputError("BadGroup", "dihedral parameter must be positive");
  // r^i s^e has index e * n + i; s r = r^-1 s.
  const int order = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int i = x % n, e = x / n, j = y % n, f = y / n;
      int rot = e == 0 ? (i + j) % n : ((i - j) % n + n) % n;
      flat[static_cast<std::size_t>(x * order + y)] = ((e + f) % 2) * n + rot;
    }
  return group_from_trusted_table(order, std::move(flat));
}

std::vector<int> perm_from_index(int n, int index) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    int f = fact[static_cast<std::size_t>(i)];
    int d = index / f;
    index %= f;
    perm.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return perm;
}

int perm_index(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  int index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++smaller;
    index = index * (n - i) + smaller;
  }
  return index;
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw InputError("BadGroup", "symmetric group degree must be positive");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<int>> perms;
  perms.reserve(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) perms.push_back(perm_from_index(n, k));
  std::vector<int> flat(static_cast<std::size_t>(order * order));
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i)
        comp[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      flat[static_cast<std::size_t>(a * order + b)] = perm_index(comp);
    }
  return group_from_trusted_table(order, std::move(flat));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& k) {
  const int ng = g->order(), nk = k->order(), order = ng * nk;
  std::vector<int> flat(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      flat[static_cast<std::size_t>(x * order + y)] = g->mul(x / nk, y / nk) * nk + k->mul(x % nk, y % nk);
  return group_from_trusted_table(order, std::move(flat));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elems) : parent_(std::move(parent)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const int n = parent_->order();
  local_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    int g = elems_[i];
    if (g < 0 || g >= n) throw InputError("NotSubgroup", "element " + std::to_string(g) + " out of range");
    local_[static_cast<std::size_t>(g)] = static_cast<int>(i);
  }
  if (elems_.empty() || !contains(parent_->identity()))
    throw InputError("NotSubgroup", "subset does not contain the identity");
  const int m = order();
  std::vector<int> flat(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int p = parent_->mul(elems_[static_cast<std::size_t>(i)], elems_[static_cast<std::size_t>(j)]);
      if (!contains(p)) throw InputError("NotSubgroup", "subset not closed under multiplication");
      flat[static_cast<std::size_t>(i * m + j)] = local(p);
    }
  }
  as_group_ = group_from_trusted_table(m, std::move(flat));
}

Subgroup Subgroup::conjugate(int g) const {
  std::vector<int> c;
  c.reserve(elems_.size());
  for (int h : elems_) c.push_back(parent_->conj(g, h));
  return Subgroup(parent_, std::move(c));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elems_.begin(), elems_.end(), [&](int g) { return other.contains(g); });
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

namespace {

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> elems{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = 1;
  std::vector<int> gens;
  for (int s : seed)
    if (s != g.identity()) gens.push_back(s);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      int p = g.mul(elems[i], s);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& g, std::span<const int> gens) {
  return Subgroup(g, closure(*g, std::vector<int>(gens.begin(), gens.end())));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> triv{g->identity()};
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
    for (int x : s) in[static_cast<std::size_t>(x)] = 1;
    for (int x = 0; x < g->order(); ++x) {
      if (in[static_cast<std::size_t>(x)]) continue;
      auto seed = s;
      seed.push_back(x);
      auto ext = closure(*g, std::move(seed));
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(g, s);
  return out;
}

std::vector<SubgroupConjClass> conj_classes(const GroupPtr& g) {
  auto subs = all_subgroups(g);
  std::vector<int> cls(subs.size(), -1);
  std::vector<SubgroupConjClass> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    // subs is sorted, so the first unclaimed subgroup is the least member.
    SubgroupConjClass c{subs[i], {}};
    std::set<std::vector<int>> members;
    for (int x = 0; x < g->order(); ++x) members.insert(subs[i].conjugate(x).elements());
    for (std::size_t j = i; j < subs.size(); ++j) {
      if (members.count(subs[j].elements())) {
        cls[j] = static_cast<int>(out.size());
        c.members.push_back(subs[j]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

int conj_class_index(const std::vector<SubgroupConjClass>& classes, const Subgroup& h) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& m : classes[i].members)
      if (m == h) return static_cast<int>(i);
  throw InputError("NotSubgroup", "subgroup not found among conjugacy classes");
}

bool is_homomorphism(const GroupHom& h) {
  const auto& src = h.source;
  const auto& par = *src.parent();
  if (h.values.size() != src.elements().size()) return false;
  for (int v : h.values)
    if (v < 0 || v >= h.target->order()) return false;
  if (h(par.identity()) != h.target->identity()) return false;
  for (int a : src.elements())
    for (int b : src.elements())
      if (h(par.mul(a, b)) != h.target->mul(h(a), h(b))) return false;
  return true;
}

std::vector<GroupHom> homs_to_sym(const Subgroup& h, int n) {
  if (n < 1) throw InputError("BadDegree", "symmetric degree must be >= 1");
  if (n > limits().max_sym_degree)
    throw ResourceBound("max_sym_degree", "Sigma_" + std::to_string(n) + " exceeds cap " +
                                              std::to_string(limits().max_sym_degree));
  const auto& par = *h.parent();
  auto sym = symmetric_group(n);

  // Greedy generating set in element order.
  std::vector<int> gens;
  std::vector<int> span{par.identity()};
  for (int x : h.elements()) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure(par, gens);
  }

  std::vector<GroupHom> out;
  const int k = static_cast<int>(gens.size());
  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  const int m = h.order();
  while (true) {
    // Extend the generator images along words; reject on inconsistency.
    std::vector<int> values(static_cast<std::size_t>(m), -1);
    values[static_cast<std::size_t>(h.local(par.identity()))] = sym->identity();
    std::vector<int> frontier{par.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < frontier.size() && ok; ++i) {
      int x = frontier[i];
      int vx = values[static_cast<std::size_t>(h.local(x))];
      for (int gi = 0; gi < k && ok; ++gi) {
        int y = par.mul(gens[static_cast<std::size_t>(gi)], x);
        int vy = sym->mul(choice[static_cast<std::size_t>(gi)], vx);
        int& slot = values[static_cast<std::size_t>(h.local(y))];
        if (slot < 0) {
          slot = vy;
          frontier.push_back(y);
        } else if (slot != vy) {
          ok = false;
        }
      }
    }
    if (ok) {
      GroupHom hom{h, sym, std::move(values)};
      if (is_homomorphism(hom)) out.push_back(std::move(hom));
    }
    int pos = k - 1;
    while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == sym->order()) choice[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

}  // namespace tamb
