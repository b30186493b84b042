#include <numeric>

#include "doctest.h"
#include "tamb/mackey.hpp"

using namespace tamb;

namespace {

std::vector<GroupPtr> groups() { return {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)}; }

// Exhaustive search over all levelwise permutations, no pruning.
bool iso_exhaustive(const MackeyTable& a, const MackeyTable& b) {
  if (a.levels.size() != b.levels.size()) return false;
  std::vector<std::vector<int>> perm(a.levels.size());
  for (std::size_t l = 0; l < a.levels.size(); ++l) {
    if (a.levels[l].rank() != b.levels[l].rank()) return false;
    perm[l].resize(a.levels[l].rank());
    std::iota(perm[l].begin(), perm[l].end(), 0);
  }
  auto check = [&] {
    MackeyTableMap m;
    for (std::size_t l = 0; l < a.levels.size(); ++l) {
      IntMatrix c(a.levels[l].rank(), std::vector<std::int64_t>(a.levels[l].rank(), 0));
      for (int i = 0; i < a.levels[l].rank(); ++i) c[perm[l][i]][i] = 1;
      m.components.push_back(c);
    }
    return is_table_map(a, b, m);
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t l) -> bool {
    if (l == perm.size()) return check();
    std::sort(perm[l].begin(), perm[l].end());
    do
      if (rec(l + 1)) return true;
    while (std::next_permutation(perm[l].begin(), perm[l].end()));
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("Burnside table ranks") {
  auto t = burnside_table(trivial_group());
  REQUIRE(t.levels.size() == 1);
  CHECK(t.levels[0].rank() == 1);
  auto c2 = burnside_table(cyclic_group(2));
  REQUIRE(c2.levels.size() == 2);
  // level 0 is {e}, level 1 is C_2
  CHECK(c2.levels[0].rank() == 1);
  CHECK(c2.levels[1].rank() == 2);
  for (const auto& g : groups()) {
    auto b = burnside_table(g);
    for (const auto& lev : b.levels) CHECK(lev.rank() == static_cast<int>(conj_classes(lev.subgroup.as_group()).size()));
  }
}

TEST_CASE("Burnside: transfer of the restricted unit is the free orbit") {
  auto g = cyclic_group(2);
  auto b = burnside_table(g);
  int m = b.find_map(0, 1, 0);
  REQUIRE(m >= 0);
  // unit at C_2/C_2 is the point orbit; find its index
  int unit = -1, free = -1;
  for (int i = 0; i < b.levels[1].rank(); ++i) {
    if (b.levels[1].keys[i][0] == 2) unit = i;
    if (b.levels[1].keys[i][0] == 1) free = i;
  }
  REQUIRE(unit >= 0);
  REQUIRE(free >= 0);
  auto rt = mat_mul(b.maps[m].transfer, b.maps[m].restriction);
  for (int i = 0; i < b.levels[1].rank(); ++i) CHECK(rt[i][unit] == (i == free ? 1 : 0));
}

TEST_CASE("represented tables") {
  auto g = cyclic_group(2);
  auto empty = represented_table(GSet::empty(g));
  for (const auto& l : empty.levels) CHECK(l.rank() == 0);
  for (const auto& gr : groups()) {
    auto rp = represented_table(GSet::point(gr));
    auto b = burnside_table(gr);
    auto iso = table_iso(b, rp);
    REQUIRE(iso.has_value());
    CHECK(is_table_map(b, rp, *iso));
  }
  auto free = represented_table(make_orbit(g, trivial_subgroup(g)));
  CHECK(free.levels[1].rank() == 1);
}

TEST_CASE("axioms hold for Burnside and represented tables") {
  for (const auto& g : groups()) {
    auto r = check_mackey_axioms(burnside_table(g));
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
    CHECK(r.checks > 0);
  }
  auto c2 = cyclic_group(2);
  for (const auto& t : gsets_up_to(c2, 3)) {
    auto r = check_mackey_axioms(represented_table(t));
    CHECK_MESSAGE(r.ok(), (r.failures.empty() ? "" : r.failures[0]));
  }
  auto s3 = symmetric_group(3);
  auto r = check_mackey_axioms(represented_table(make_orbit(s3, Subgroup(s3, {0, 1}))));
  CHECK(r.ok());
}

TEST_CASE("corrupted transfer entry is reported") {
  auto t = burnside_table(cyclic_group(2));
  int m = t.find_map(0, 1, 0);
  t.maps[m].transfer[0][0] += 1;
  auto r = check_mackey_axioms(t);
  CHECK(!r.ok());
  bool named = false;
  for (const auto& f : r.failures)
    if (f.find("pullback relation") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("completion") {
  auto b = burnside_table(cyclic_group(3));
  auto semi = b;
  semi.semi = true;
  auto c = completion(semi);
  CHECK(!c.semi);
  CHECK(completion(c).semi == c.semi);
  for (std::size_t i = 0; i < b.maps.size(); ++i) {
    CHECK(c.maps[i].restriction == semi.maps[i].restriction);
    CHECK(c.maps[i].transfer == semi.maps[i].transfer);
  }
}

TEST_CASE("table_iso") {
  for (const auto& g : groups()) {
    auto b = burnside_table(g);
    auto self = table_iso(b, b);
    REQUIRE(self.has_value());
    CHECK(is_permutation_iso(*self));
  }
  auto c2 = cyclic_group(2);
  CHECK(!table_iso(burnside_table(c2), represented_table(make_orbit(c2, trivial_subgroup(c2)))).has_value());
  // agreement with the exhaustive search on small ranks
  for (const auto& g : {cyclic_group(2), cyclic_group(3)})
    for (const auto& x : gsets_up_to(g, 3))
      for (const auto& y : gsets_up_to(g, 3)) {
        auto a = represented_table(x), b = represented_table(y);
        bool small = true;
        for (const auto& l : a.levels) small = small && l.rank() <= 4;
        if (!small) continue;
        auto fwd = table_iso(a, b);
        CHECK(fwd.has_value() == iso_exhaustive(a, b));
        CHECK(fwd.has_value() == table_iso(b, a).has_value());
      }
}

TEST_CASE("evaluation at general G-sets") {
  auto g = cyclic_group(2);
  auto b = burnside_table(g);
  auto free = make_orbit(g, trivial_subgroup(g));
  auto x = coproduct(free, GSet::point(g)).object;
  CHECK(evaluate_rank(b, x) == 3);
  auto fold = fold_map(x);
  auto r = evaluate_restriction(b, fold);
  auto t = evaluate_transfer(b, fold);
  // transfer along the fold adds the two copies
  auto tr = mat_mul(t, r);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(tr[i][j] == (i == j ? 2 : 0));
}
