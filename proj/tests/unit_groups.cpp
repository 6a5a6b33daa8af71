// permutations, groups, subgroups, and maps between them
#include <catch2/catch_amalgamated.hpp>

#include "fuselab/catalog.hpp"
#include "fuselab/group.hpp"

using namespace fuselab;

TEST_CASE("cycle notation builds permutations and rejects bad input") {
  Permutation r = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(r(0) == 1);
  CHECK(r(3) == 0);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(0, {}), InputError);
}

TEST_CASE("built-in groups have the expected orders") {
  const std::pair<const char*, int> expected[] = {
      {"C3", 3},  {"C9", 9},  {"C2xC2", 4}, {"D8", 8},   {"Q8", 8},
      {"S3", 6},  {"S4", 24}, {"A4", 12},   {"S5", 120}, {"S6", 720}};
  for (const auto& [key, order] : expected) {
    GroupPtr g = catalog_group(key);
    CHECK(g->order() == order);
    CHECK(g->name() == key);
  }
  CHECK_THROWS_AS(catalog_group("SL2"), InputError);
}

TEST_CASE("element arithmetic is a group") {
  GroupPtr g = catalog_group("D8");
  int e = g->identity_index();
  for (int a = 0; a < g->order(); ++a) {
    CHECK(g->mul(a, g->inv(a)) == e);
    CHECK(g->mul(e, a) == a);
    for (int b = 0; b < g->order(); ++b)
      for (int c = 0; c < g->order(); ++c)
        CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
  }
}

TEST_CASE("subgroups verify closure") {
  GroupPtr g = catalog_group("S3");
  CHECK(Subgroup::whole(g).order() == 6);
  CHECK(Subgroup::trivial(g).order() == 1);
  // a transposition generates an order-two subgroup
  int t = -1;
  for (int a = 0; a < g->order(); ++a)
    if (g->element_order(a) == 2) {
      t = a;
      break;
    }
  REQUIRE(t >= 0);
  Subgroup c2 = Subgroup::generated(g, {t});
  CHECK(c2.order() == 2);
  // the raw element set {e, t, another transposition} is not closed
  int t2 = -1;
  for (int a = t + 1; a < g->order(); ++a)
    if (g->element_order(a) == 2) {
      t2 = a;
      break;
    }
  REQUIRE(t2 >= 0);
  CHECK_THROWS_AS(Subgroup(g, {g->identity_index(), t, t2}), InputError);
}

TEST_CASE("subgroup enumeration matches the classical counts") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"C3", 2}, {"C9", 3}, {"C2xC2", 5}, {"D8", 10}, {"Q8", 6}};
  for (const auto& [key, count] : expected) {
    GroupPtr g = catalog_group(key);
    CHECK(all_subgroups(Subgroup::whole(g)).size() == count);
  }
}

TEST_CASE("conjugacy class counts match the classical values") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"C3", 3}, {"C2xC2", 4}, {"D8", 5}, {"Q8", 5},
      {"S3", 3}, {"S4", 5},    {"A4", 4}, {"S5", 7}};
  for (const auto& [key, count] : expected) {
    GroupPtr g = catalog_group(key);
    CHECK(conjugacy_classes(Subgroup::whole(g)).size() == count);
  }
}

TEST_CASE("sylow subgroups have the right order") {
  CHECK(sylow_subgroup(Subgroup::whole(catalog_group("S4")), 2).order() == 8);
  CHECK(sylow_subgroup(Subgroup::whole(catalog_group("S4")), 3).order() == 3);
  CHECK(sylow_subgroup(Subgroup::whole(catalog_group("S5")), 5).order() == 5);
  CHECK(sylow_subgroup(Subgroup::whole(catalog_group("S6")), 3).order() == 9);
  CHECK(sylow_subgroup(Subgroup::whole(catalog_group("A4")), 2).order() == 4);
}

TEST_CASE("normalizer and centralizer bracket the subgroup") {
  GroupPtr g = catalog_group("D8");
  Subgroup whole = Subgroup::whole(g);
  for (const Subgroup& p : all_subgroups(whole)) {
    Subgroup n = normalizer(whole, p);
    Subgroup z = centralizer(whole, p);
    CHECK(n.order() % p.order() == 0);
    for (int x : p.elems()) CHECK(n.contains(x));
    for (int x : z.elems()) CHECK(n.contains(x));
  }
  // the centers of D8 and Q8 both have order two
  CHECK(centralizer(whole, whole).order() == 2);
  GroupPtr q8 = catalog_group("Q8");
  CHECK(centralizer(Subgroup::whole(q8), Subgroup::whole(q8)).order() == 2);
}

TEST_CASE("maps between subgroups verify their element tables") {
  GroupPtr g = catalog_group("C3");
  Subgroup s = Subgroup::whole(g);
  GroupMap id = GroupMap::from_element_table(s, s, {0, 1, 2}, true);
  GroupMap inv = GroupMap::from_element_table(s, s, {0, 2, 1}, true);
  CHECK(id != inv);
  CHECK(inv.after(inv) == id);
  // not injective
  CHECK_THROWS_AS(GroupMap::from_element_table(s, s, {0, 1, 1}, true), InputError);
  // does not fix the identity
  CHECK_THROWS_AS(GroupMap::from_element_table(s, s, {1, 0, 2}, true), InputError);
}

TEST_CASE("conjugation maps act by conjugation") {
  GroupPtr g = catalog_group("D8");
  Subgroup whole = Subgroup::whole(g);
  for (const Subgroup& p : all_subgroups(whole)) {
    for (int c = 0; c < g->order(); ++c) {
      GroupMap conj = GroupMap::conjugation(p, c, p.conjugated_by(c));
      for (int x : p.elems())
        CHECK(conj.apply(x) == g->mul(g->mul(c, x), g->inv(c)));
    }
  }
}
