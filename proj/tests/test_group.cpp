#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tamb/error.hpp"
#include "tamb/group.hpp"

using namespace tamb;

namespace {

std::vector<GroupPtr> small_groups() {
  return {trivial_group(),     cyclic_group(2),   cyclic_group(3),  cyclic_group(4),
          dihedral_group(2),   cyclic_group(5),   cyclic_group(6),  symmetric_group(3),
          dihedral_group(4),   cyclic_group(8),   direct_product(cyclic_group(2), cyclic_group(4)),
          dihedral_group(5),   dihedral_group(6), direct_product(cyclic_group(3), cyclic_group(3))};
}

// S_3 tabulated directly from composing permutations of {0,1,2}.
std::vector<std::vector<int>> s3_by_hand() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

std::string error_code(const std::vector<std::vector<int>>& t) {
  try {
    validate_group(t);
  } catch (const InputError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("validate_group accepts small groups") {
  CHECK(validate_group({{0}})->order() == 1);
  auto c2 = validate_group({{0, 1}, {1, 0}});
  CHECK(c2->order() == 2);
  CHECK(c2->identity() == 0);
  auto s3 = validate_group(s3_by_hand());
  CHECK(s3->order() == 6);
  CHECK(*s3 == *symmetric_group(3));
}

TEST_CASE("validate_group names the failing axiom") {
  CHECK(error_code({{0, 1}, {1, 2}}) == "IndexOutOfRange");
  CHECK(error_code({{0, 1}}) == "NotSquare");
  CHECK(error_code({{1, 0}, {0, 0}}) == "NoIdentity");
  CHECK(error_code({{0, 1}, {1, 1}}) == "NoInverse");
  // a 3-element loop that is not associative
  CHECK(error_code({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}) != "");
  CHECK(error_code({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) == "");
}

TEST_CASE("all_subgroups agrees with subset closure") {
  for (const auto& g : small_groups()) {
    auto subs = all_subgroups(g);
    std::set<std::vector<int>> mine;
    for (const auto& s : subs) mine.insert(s.elements());
    CHECK(mine.size() == subs.size());
    CHECK(mine == oracle::subgroups_by_subsets(g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (const auto& s : subs)
      for (int x = 0; x < g->order(); ++x) CHECK(mine.count(s.conjugate(x).elements()) == 1);
  }
  CHECK(all_subgroups(trivial_group()).size() == 1);
  CHECK(all_subgroups(cyclic_group(2)).size() == 2);
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
}

TEST_CASE("conjugacy classes") {
  CHECK(conj_classes(cyclic_group(2)).size() == 2);
  CHECK(conj_classes(cyclic_group(4)).size() == 3);
  auto s3 = conj_classes(symmetric_group(3));
  CHECK(s3.size() == 4);
  for (const auto& g : small_groups()) {
    auto cls = conj_classes(g);
    std::size_t total = 0;
    for (const auto& c : cls) {
      total += c.members.size();
      for (const auto& m : c.members) {
        CHECK(c.representative <= m);
        bool conj = false;
        for (int x = 0; x < g->order(); ++x)
          if (c.representative.conjugate(x) == m) conj = true;
        CHECK(conj);
      }
    }
    CHECK(total == all_subgroups(g).size());
  }
}

TEST_CASE("generated_subgroup matches closure") {
  auto g = symmetric_group(4);
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); b += 5) {
      std::vector<int> gens{a, b};
      CHECK(generated_subgroup(g, gens).elements() == oracle::closure(g, gens));
    }
}

TEST_CASE("symmetric group indexing") {
  for (int n = 1; n <= 4; ++n) {
    auto s = symmetric_group(n);
    for (int a = 0; a < s->order(); ++a) {
      auto pa = perm_from_index(n, a);
      CHECK(perm_index(pa) == a);
      for (int b = 0; b < s->order(); ++b) {
        auto pb = perm_from_index(n, b);
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = pa[pb[i]];
        CHECK(s->mul(a, b) == perm_index(c));
      }
    }
  }
  CHECK(perm_from_index(3, 0) == std::vector<int>{0, 1, 2});
  CHECK(perm_from_index(3, 5) == std::vector<int>{2, 1, 0});
}

TEST_CASE("homs_to_sym") {
  auto c2 = cyclic_group(2);
  auto c3 = cyclic_group(3);
  CHECK(homs_to_sym(trivial_subgroup(c2), 3).size() == 1);
  CHECK(homs_to_sym(whole_group(c2), 2).size() == 2);
  CHECK(homs_to_sym(whole_group(c3), 2).size() == 1);
  // |Hom(C_3, S_3)| = 1 + 2 = 3, |Hom(S_3, S_3)| = 1 + 3 + 6 = 10
  CHECK(homs_to_sym(whole_group(c3), 3).size() == 3);
  CHECK(homs_to_sym(whole_group(symmetric_group(3)), 3).size() == 10);
  CHECK_THROWS_AS(homs_to_sym(whole_group(c2), 5), ResourceBound);
  for (const auto& g : {c2, c3, cyclic_group(4), symmetric_group(3), dihedral_group(2)})
    for (const auto& h : all_subgroups(g))
      for (int n = 1; n <= 3; ++n) {
        auto homs = homs_to_sym(h, n);
        // brute force count: all functions H -> Sigma_n that are homomorphisms
        auto sn = symmetric_group(n);
        std::uint64_t brute = 0;
        std::vector<int> img(h.order(), 0);
        std::function<void(int)> rec = [&](int i) {
          if (i == h.order()) {
            bool ok = true;
            for (int a = 0; a < h.order() && ok; ++a)
              for (int b = 0; b < h.order() && ok; ++b)
                if (img[h.local(g->mul(h.global(a), h.global(b)))] != sn->mul(img[a], img[b])) ok = false;
            brute += ok;
            return;
          }
          for (int v = 0; v < sn->order(); ++v) {
            img[i] = v;
            rec(i + 1);
          }
        };
        if (h.order() <= 4 || n <= 2) {
          rec(0);
          CHECK(homs.size() == brute);
        }
        std::set<std::vector<int>> distinct;
        for (const auto& f : homs) {
          CHECK(is_homomorphism(f));
          distinct.insert(f.values);
        }
        CHECK(distinct.size() == homs.size());
      }
}

TEST_CASE("subgroup helpers") {
  auto g = symmetric_group(3);
  CHECK_THROWS_AS(Subgroup(g, {0, 3}), InputError);
  Subgroup a3(g, {0, 3, 4});
  CHECK(a3.index() == 2);
  CHECK(a3.as_group()->order() == 3);
  CHECK(trivial_subgroup(g).is_subgroup_of(a3));
  CHECK(!whole_group(g).is_subgroup_of(a3));
  auto d = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(d->order() == 6);
}
