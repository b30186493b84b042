#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tamb/error.hpp"
#include "tamb/free_tambara.hpp"
#include "tamb/xi.hpp"

using namespace tamb;

namespace {

GSet free_orbit(const GroupPtr& g) { return make_orbit(g, trivial_subgroup(g)); }

// Number of homomorphisms H -> Sigma_n by trying every function.
std::uint64_t count_homs(const Subgroup& h, int n) {
  auto sym = symmetric_group(n);
  const int m = h.order();
  std::vector<int> f(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b) {
        int ab = h.local(h.parent()->mul(h.global(a), h.global(b)));
        if (f[ab] != sym->mul(f[a], f[b])) ok = false;
      }
    if (ok) ++count;
    int i = 0;
    while (i < m && ++f[i] == sym->order()) f[i++] = 0;
    if (i == m) break;
  }
  return count;
}

// Index of the coset of x in oracle::orbit_by_cosets(g, k).
int coset_index(const GroupPtr& g, const std::vector<int>& k, int x) {
  std::vector<int> of(g->order(), -1);
  int next = 0;
  for (int r = 0; r < g->order(); ++r) {
    if (of[r] >= 0) continue;
    for (int s : k) of[g->mul(r, s)] = next;
    ++next;
  }
  return of[x];
}

std::vector<int> graph(const PhiSubgroup& p, int sym_order) {
  std::vector<int> out;
  for (int h : p.H.elements()) out.push_back(h * sym_order + p.phi(h));
  std::sort(out.begin(), out.end());
  return out;
}

// Existence of a map of G x Sigma_n orbits sending the identity coset of
// L^lambda to (g, sigma) H^phi.
bool orbit_map_exists(const GroupPtr& g, const PhiSubgroup& l, const PhiSubgroup& h, int x,
                      const std::vector<int>& sigma) {
  auto sym = symmetric_group(h.n);
  auto gs = direct_product(g, sym);
  auto lk = graph(l, sym->order()), hk = graph(h, sym->order());
  auto src = oracle::orbit_by_cosets(gs, lk), dst = oracle::orbit_by_cosets(gs, hk);
  int from = coset_index(gs, lk, gs->identity());
  int to = coset_index(gs, hk, x * sym->order() + perm_index(sigma));
  return !oracle::equivariant_maps(src, dst, [&](int p, int v) { return p != from || v == to; }).empty();
}

}  // namespace

TEST_CASE("family_FGn") {
  for (const auto& g : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
    CHECK(family_FGn(g, 1).size() == all_subgroups(g).size());
    for (int n = 2; n <= 3; ++n) {
      std::uint64_t expect = 0;
      for (const auto& h : all_subgroups(g)) expect += count_homs(h, n);
      CHECK(family_FGn(g, n).size() == expect);
    }
  }
  CHECK(family_FGn(cyclic_group(2), 2).size() == 3);
  auto saved = limits();
  limits().max_sym_degree = 2;
  CHECK_THROWS_AS(family_FGn(cyclic_group(2), 3), ResourceBound);
  limits() = saved;
}

TEST_CASE("exp_phi") {
  auto c2 = cyclic_group(2);
  auto T = free_orbit(c2);
  for (const auto& p : family_FGn(c2, 2)) {
    auto e = exp_phi(T, p);
    CHECK(e.size() == 4);
    CHECK(exp_phi(GSet::point(c2), p).size() == 1);
  }
  // C_2 acting by swap on both T and the coordinates
  auto fam = family_FGn(c2, 2);
  const PhiSubgroup* swap = nullptr;
  for (const auto& p : fam)
    if (p.H.order() == 2 && p.phi(1) != 0) swap = &p;
  REQUIRE(swap != nullptr);
  auto e = exp_phi(T, *swap);
  auto orbits = orbit_decompose(e);
  int fixed = 0, free = 0;
  for (const auto& o : orbits) (o.points.size() == 1 ? fixed : free)++;
  CHECK(fixed == 2);
  CHECK(free == 1);
  // n = 1 gives T back
  for (const auto& p : family_FGn(c2, 1)) {
    auto e1 = exp_phi(T, p);
    CHECK(gset_iso(e1, restrict(p.H, T)).has_value());
  }
  auto saved = limits();
  limits().exp_cap = 3;
  CHECK_THROWS_AS(exp_phi(T, *swap), ResourceBound);
  limits() = saved;
}

TEST_CASE("xi_generator") {
  auto c2 = cyclic_group(2);
  for (const auto& T : gsets_up_to(c2, 2)) {
    for (const auto& p : family_FGn(c2, 1))
      if (p.H.order() == 2) CHECK(xi_generator(p, T) == bispan_canonical(theta_bispan(T)));
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : family_FGn(c2, n)) {
        auto cls = xi_generator(p, T);
        auto split = degree_split(EffectiveElement::from_class(cls));
        if (T.size() > 0) {
          REQUIRE(split.size() == 1);
          CHECK(split.begin()->first == n);
        }
        CHECK(xi_generator(p, T) == cls);
      }
  }
}

TEST_CASE("orbit_map_condition against orbit maps of G x Sigma_n") {
  for (const auto& [g, n] : std::vector<std::pair<GroupPtr, int>>{
           {cyclic_group(2), 2}, {cyclic_group(2), 3}, {cyclic_group(3), 3}, {cyclic_group(4), 2}}) {
    auto fam = family_FGn(g, n);
    auto sym = symmetric_group(n);
    int agree = 0, holds = 0;
    for (const auto& l : fam)
      for (const auto& h : fam)
        for (int x = 0; x < g->order(); ++x)
          for (int s = 0; s < sym->order(); ++s) {
            auto sigma = perm_from_index(n, s);
            bool c = orbit_map_condition(l, h, x, sigma);
            CHECK(c == orbit_map_exists(g, l, h, x, sigma));
            agree += c == orbit_map_exists(g, l, h, x, sigma);
            holds += c;
          }
    CHECK(holds > 0);
    CHECK(agree > 0);
  }
  auto c2 = cyclic_group(2);
  for (const auto& p : family_FGn(c2, 2)) CHECK(orbit_map_condition(p, p, 0, {0, 1}));
}

TEST_CASE("naturality of Xi") {
  for (const auto& g : {cyclic_group(2), cyclic_group(3)})
    for (int n = 2; n <= 3; ++n)
      for (const auto& T : {free_orbit(g), coproduct(free_orbit(g), GSet::point(g)).object}) {
        auto r = xi_naturality_sweep(T, n);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
        CHECK(r.connections > 0);
      }
  auto c2 = cyclic_group(2);
  auto p = family_FGn(c2, 2).back();
  CHECK(xi_naturality_check(p, p, 0, {0, 1}, free_orbit(c2)).ok());
}

TEST_CASE("naturality negative control: dropping the twist") {
  auto c3 = cyclic_group(3);
  auto r = xi_naturality_sweep(free_orbit(c3), 3, true);
  CHECK(!r.ok());
  bool pullback = false;
  for (const auto& f : r.failures)
    if (f.find("pullback") != std::string::npos) pullback = true;
  CHECK(pullback);
}

TEST_CASE("serial and parallel sweeps agree") {
  auto c3 = cyclic_group(3);
  auto T = coproduct(free_orbit(c3), GSet::point(c3)).object;
  auto a = xi_naturality_sweep(T, 3, false, ExecPolicy::serial);
  auto b = xi_naturality_sweep(T, 3, false, ExecPolicy::parallel);
  CHECK(a.connections == b.connections);
  CHECK(a.checks == b.checks);
  auto wa = xi_surjectivity(T, 3, ExecPolicy::serial), wb = xi_surjectivity(T, 3, ExecPolicy::parallel);
  REQUIRE(wa.size() == wb.size());
  for (std::size_t i = 0; i < wa.size(); ++i) CHECK(wa[i].basis == wb[i].basis);
}

TEST_CASE("surjectivity witnesses") {
  for (const auto& g : {cyclic_group(2), cyclic_group(3)})
    for (int n = 1; n <= 3; ++n)
      for (const auto& T : {free_orbit(g), coproduct(free_orbit(g), GSet::point(g)).object}) {
        auto basis = ft_basis(T, GSet::point(g), n);
        auto ws = xi_surjectivity(T, n);
        REQUIRE(ws.size() == basis.size());
        std::set<OrbitKey> covered;
        for (const auto& w : ws) {
          CHECK(w.verified);
          CHECK(static_cast<int>(w.f.size()) == n);
          covered.insert(w.basis);
        }
        CHECK(covered == std::set<OrbitKey>(basis.begin(), basis.end()));
      }
  // n = 1: the witness span is the basis span itself
  auto c2 = cyclic_group(2);
  for (const auto& w : xi_surjectivity(free_orbit(c2), 1)) CHECK(w.phi.n == 1);
}
