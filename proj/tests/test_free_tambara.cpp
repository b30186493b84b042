#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tamb/error.hpp"
#include "tamb/free_tambara.hpp"

using namespace tamb;

namespace {

GSet free_orbit(const GroupPtr& g) { return make_orbit(g, trivial_subgroup(g)); }
GSet plus(const GSet& a, const GSet& b) { return coproduct(a, b).object; }

// Basis diagrams of degree d, by enumerating every T <- U -> V -> X with
// V a coset orbit and fibers of size d, deduplicated by isomorphism search.
std::vector<Bispan> basis_bruteforce(const GroupPtr& g, const GSet& T, const GSet& X, int d) {
  std::vector<GSet> orbits;
  for (const auto& k : oracle::subgroups_by_subsets(g)) orbits.push_back(oracle::orbit_by_cosets(g, k));
  std::vector<Bispan> found;
  for (const auto& V : orbits) {
    const int usize = d * V.size();
    // U as a union of orbits of total size usize, orbits in nondecreasing index
    std::vector<GSet> us;
    std::function<void(std::size_t, int, GSet)> build = [&](std::size_t from, int left, GSet acc) {
      if (left == 0) {
        us.push_back(acc);
        return;
      }
      for (std::size_t i = from; i < orbits.size(); ++i)
        if (orbits[i].size() <= left) build(i, left - orbits[i].size(), plus(acc, orbits[i]));
    };
    build(0, usize, GSet::empty(g));
    for (const auto& c : oracle::equivariant_maps(V, X))
      for (const auto& U : us)
        for (const auto& b : oracle::equivariant_maps(U, V)) {
          std::vector<int> fib(V.size(), 0);
          for (int v : b) ++fib[v];
          if (std::count(fib.begin(), fib.end(), d) != V.size()) continue;
          for (const auto& a : oracle::equivariant_maps(U, T)) {
            Bispan cand{T, U, V, X, a, b, c};
            bool dup = false;
            for (const auto& f : found)
              if (oracle::bispan_iso(f, cand)) {
                dup = true;
                break;
              }
            if (!dup) found.push_back(cand);
          }
        }
  }
  return found;
}

void compare_basis(const GroupPtr& g, const GSet& T, const GSet& X, int d) {
  auto keys = ft_basis(T, X, d);
  auto brute = basis_bruteforce(g, T, X, d);
  CHECK(keys.size() == brute.size());
  std::set<OrbitKey> ks(keys.begin(), keys.end());
  for (const auto& b : brute) {
    auto cls = bispan_canonical(b);
    REQUIRE(cls.components.size() == 1);
    CHECK(ks.count(cls.components[0]) == 1);
  }
}

}  // namespace

TEST_CASE("ft_basis against brute-force enumeration") {
  auto c2 = cyclic_group(2);
  auto T = plus(free_orbit(c2), GSet::point(c2));
  for (int d = 0; d <= 2; ++d) {
    compare_basis(c2, T, free_orbit(c2), d);
    compare_basis(c2, T, GSet::point(c2), d);
  }
  auto c3 = cyclic_group(3);
  for (int d = 0; d <= 2; ++d) compare_basis(c3, plus(GSet::point(c3), GSet::point(c3)), GSet::point(c3), d);
  auto s3 = symmetric_group(3);
  auto s3mod2 = make_orbit(s3, Subgroup(s3, {0, 1}));
  for (int d = 0; d <= 1; ++d) compare_basis(s3, s3mod2, GSet::point(s3), d);
  compare_basis(s3, GSet::point(s3), s3mod2, 2);
}

TEST_CASE("ft_basis small values") {
  auto g = trivial_group();
  for (int m = 0; m <= 3; ++m)
    for (int d = 0; d <= 3; ++d)
      CHECK(ft_basis(GSet::trivial(g, m), GSet::point(g), d).size() == oracle::multisets(m, d));
  // empty generator: only degree 0 survives, and it is the Burnside basis
  auto c2 = cyclic_group(2);
  CHECK(ft_basis(GSet::empty(c2), GSet::point(c2), 0).size() == 2);
  CHECK(ft_basis(GSet::empty(c2), GSet::point(c2), 1).empty());
  CHECK(ft_basis(GSet::point(c2), GSet::empty(c2), 1).empty());
  CHECK(ft_basis(GSet::point(c2), GSet::point(c2), std::nullopt, 2).size() ==
        ft_basis(GSet::point(c2), GSet::point(c2), 0).size() + ft_basis(GSet::point(c2), GSet::point(c2), 1).size() +
            ft_basis(GSet::point(c2), GSet::point(c2), 2).size());
  for (const auto& k : ft_basis(free_orbit(c2), GSet::point(c2), 2)) CHECK(key_degree(k) == 2);
}

TEST_CASE("ft_basis respects the enumeration cap") {
  auto saved = limits();
  limits().enum_cap = 3;
  auto c2 = cyclic_group(2);
  CHECK_THROWS_AS(ft_basis(free_orbit(c2), GSet::point(c2), 2), ResourceBound);
  limits() = saved;
}

TEST_CASE("window structure matrices") {
  auto c2 = cyclic_group(2);
  auto w = build_window(GSet::point(c2), 2, 2);
  CHECK(w.objects.size() == gsets_up_to(c2, 2).size());
  for (const auto& x : w.objects)
    for (const auto& y : w.objects)
      for (const auto& z : w.objects)
        for (const auto& f : all_gmaps(x, y))
          for (const auto& g : all_gmaps(y, z))
            for (int d = 0; d <= 2; ++d) {
              auto gf = compose(g, f);
              CHECK(ft_structure(w, gf, StructureKind::transfer, d) ==
                    mat_mul(ft_structure(w, g, StructureKind::transfer, d), ft_structure(w, f, StructureKind::transfer, d)));
              CHECK(ft_structure(w, gf, StructureKind::restriction, d) ==
                    mat_mul(ft_structure(w, f, StructureKind::restriction, d),
                            ft_structure(w, g, StructureKind::restriction, d)));
            }
  auto big = gsets_up_to(c2, 3).back();
  CHECK_THROWS_AS(ft_structure(w, to_point(big), StructureKind::transfer, 0), InputError);
}

TEST_CASE("F_T[n] tables satisfy the semi-Mackey axioms") {
  for (const auto& g : {cyclic_group(2), cyclic_group(3), symmetric_group(3)})
    for (const auto& T : gsets_up_to(g, 2))
      for (int n = 0; n <= 2; ++n) {
        auto t = ft_table(T, n);
        auto r = check_mackey_axioms(t);
        CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
        CHECK(t.semi);
      }
}

TEST_CASE("verify_semi_tambara: small windows pass") {
  for (const auto& g : {trivial_group(), cyclic_group(2), cyclic_group(3)})
    for (const auto& T : gsets_up_to(g, 2)) {
      VerifyOptions o;
      o.k = 3;
      auto r = verify_semi_tambara(T, o);
      CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
      CHECK(r.checks["distributive"] > 0);
      CHECK(r.checks["pullback"] > 0);
    }
}

TEST_CASE("verify_semi_tambara: corrupted norms are caught") {
  auto c2 = cyclic_group(2);
  VerifyOptions o;
  o.k = 2;
  o.corrupt_norm = true;
  auto r = verify_semi_tambara(GSet::point(c2), o);
  CHECK(!r.ok());
  bool functorial = false, pulled = false;
  for (const auto& f : r.failures) {
    if (f.find("norm not functorial") != std::string::npos) functorial = true;
    if (f.find("distributive") != std::string::npos || f.find("norm pullback") != std::string::npos) pulled = true;
  }
  CHECK(functorial);
  CHECK(pulled);
}

TEST_CASE("serial and parallel verification agree") {
  auto c3 = cyclic_group(3);
  auto T = plus(GSet::point(c3), GSet::point(c3));
  VerifyOptions s, p;
  s.k = p.k = 3;
  p.policy = ExecPolicy::parallel;
  auto a = verify_semi_tambara(T, s), b = verify_semi_tambara(T, p);
  CHECK(a.checks == b.checks);
  CHECK(a.failures == b.failures);
  auto ta = ft_table(T, 2, ExecPolicy::serial), tb = ft_table(T, 2, ExecPolicy::parallel);
  REQUIRE(ta.levels.size() == tb.levels.size());
  for (std::size_t l = 0; l < ta.levels.size(); ++l) CHECK(ta.levels[l].keys == tb.levels[l].keys);
  for (std::size_t m = 0; m < ta.maps.size(); ++m) {
    CHECK(ta.maps[m].restriction == tb.maps[m].restriction);
    CHECK(ta.maps[m].transfer == tb.maps[m].transfer);
  }
}

TEST_CASE("degree 0 and 1 graded isomorphisms") {
  for (const auto& g : {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)})
    for (const auto& T : gsets_up_to(g, g->order() == 6 ? 2 : 3)) {
      auto i0 = ft0_iso(T);
      CHECK(is_permutation_iso(i0.map));
      CHECK(is_table_map(i0.source, i0.target, i0.map));
      CHECK(table_iso(i0.source, i0.target).has_value());
      auto i1 = ft1_iso(T);
      CHECK(is_permutation_iso(i1.map));
      CHECK(is_table_map(i1.source, i1.target, i1.map));
    }
}

TEST_CASE("degree 1 is not degree 0 when T is nonempty") {
  auto c2 = cyclic_group(2);
  auto T = free_orbit(c2);
  CHECK(!table_iso(ft_table(T, 0), ft_table(T, 1)).has_value());
}

TEST_CASE("restriction compatibility") {
  auto c2 = cyclic_group(2), c4 = cyclic_group(4), s3 = symmetric_group(3);
  std::vector<std::pair<Subgroup, GroupPtr>> cases = {
      {trivial_subgroup(c2), c2}, {Subgroup(c4, {0, 2}), c4}, {Subgroup(s3, {0, 3, 4}), s3}};
  for (const auto& [h, g] : cases)
    for (const auto& T : gsets_up_to(g, 2)) {
      auto r = restriction_compat(h, T, 2, 2);
      CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
      CHECK(r.basis_pairs > 0);
    }
}

TEST_CASE("induce_bispan is a valid bispan") {
  auto s3 = symmetric_group(3);
  Subgroup h(s3, {0, 3, 4});
  auto T = make_orbit(s3, Subgroup(s3, {0, 1}));
  auto th = restrict(h, T);
  for (const auto& y : gsets_up_to(h.as_group(), 2))
    for (const auto& k : ft_basis(th, y, std::nullopt, 2)) {
      auto b = induce_bispan(h, T, realize_key(th, y, k));
      CHECK_NOTHROW(make_bispan(b.T, b.U, b.V, b.X, b.a, b.b, b.c));
      CHECK(b.V.size() == 2 * realize_key(th, y, k).V.size());
    }
}

TEST_CASE("universal map out of F_T") {
  auto c2 = cyclic_group(2);
  for (const auto& T : gsets_up_to(c2, 2)) {
    auto id = universal_map_check(T, theta_element(T), 2, 2);
    CHECK_MESSAGE(id.ok(), (id.failures.empty() ? "" : id.failures[0]));
    // theta gives the identity on every basis element
    for (const auto& x : gsets_up_to(c2, 2))
      for (const auto& k : ft_basis(T, x, std::nullopt, 2)) {
        auto e = EffectiveElement::basis(T, x, k);
        CHECK(universal_map_apply(theta_element(T), e) == e);
      }
    auto burn = universal_map_check(T, unit_element(GSet::empty(c2), T), 2, 2);
    CHECK_MESSAGE(burn.ok(), (burn.failures.empty() ? "" : burn.failures[0]));
    auto cp = coproduct(T, T);
    auto inc = universal_map_check(T, restrict(theta_element(cp.object), cp.in1), 2, 2);
    CHECK_MESSAGE(inc.ok(), (inc.failures.empty() ? "" : inc.failures[0]));
  }
  CHECK_THROWS_AS(universal_map_check(GSet::point(c2), theta_element(free_orbit(c2))), InputError);
}

TEST_CASE("trivial group: polynomial semiring") {
  for (int m = 0; m <= 3; ++m) {
    auto r = trivial_group_check(m, 3);
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
    CHECK(r.basis_counts == r.monomial_counts);
    for (int d = 0; d <= 3; ++d) CHECK(r.monomial_counts[d] == oracle::multisets(m, d));
    CHECK(r.products_checked > 0);
  }
}
