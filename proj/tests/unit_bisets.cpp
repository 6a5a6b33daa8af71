// double Burnside elements: realization, restriction, characteristic elements
#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "fuselab/biset.hpp"
#include "fuselab/catalog.hpp"

using namespace fuselab;

namespace {
FusionSystem three_point_system() { return FusionSystem::from_group(catalog_group("S3"), 3); }
}  // namespace

TEST_CASE("transitive types and their point counts") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  std::vector<BisetType> types = biset_types(f);
  REQUIRE(types.size() == 3);
  // one free type and two full types, sizes |S|^2/|R|
  CHECK(ExplicitBiset(s, types[0]).size() == 9);
  CHECK(ExplicitBiset(s, types[1]).size() == 3);
  CHECK(ExplicitBiset(s, types[2]).size() == 3);
  CHECK_THROWS_AS(ExplicitBiset(s, types[0], 5), RefusalError);
}

TEST_CASE("orbit decomposition agrees with the double coset formula") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  GroupMap incl_s = GroupMap::identity(s);
  for (const BisetType& t : biset_types(f)) {
    ExplicitBiset x(s, t);
    for (int pi = 0; pi < f.num_subgroups(); ++pi) {
      const Subgroup& q = f.subgroup(pi);
      for (const GroupMap& lam : f.hom_set(q, s)) {
        CHECK(orbit_types(x, q, lam) == restrict_type_by_double_cosets(s, t, q, lam));
      }
    }
  }
}

TEST_CASE("a single full orbit is congruent but not stable") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  FormalBiset w;
  w.add(BisetType{s, GroupMap::identity(s)}, 1);
  CharacteristicCheck c = check_characteristic(f, w);
  CHECK(c.genuine);
  CHECK(c.ratio == 1);
  CHECK(c.congruent);
  CHECK(!c.stable);
  REQUIRE(c.stability.subgroup_index.has_value());
  CHECK(*c.stability.subgroup_index == f.whole_index());
}

TEST_CASE("a single free orbit is stable but violates the congruence") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  Subgroup triv(s.parent(), std::vector<int>{0});
  FormalBiset w;
  w.add(BisetType{triv, GroupMap::inclusion(triv, s)}, 1);
  CharacteristicCheck c = check_characteristic(f, w);
  CHECK(c.stable);
  CHECK(c.ratio == 3);
  CHECK(!c.congruent);
}

TEST_CASE("characteristic element of the three-point fusion system") {
  FusionSystem f = three_point_system();
  CharacteristicElement e = characteristic_biset(f);
  CHECK(e.multiplicities == IntVec{0, 2, 2});
  CHECK(e.ratio == 4);
  CHECK(e.size == 12);
  CHECK(e.kernel_rank == 2);
  CHECK(e.from_ambient_seed);
  CharacteristicCheck c = check_characteristic(f, e.omega);
  CHECK((c.genuine && c.stable && c.congruent));
  // the exhaustive sweep finds the same element without the ambient hint
  CharacteristicElement swept = characteristic_biset(f, /*use_ambient_seed=*/false);
  CHECK(swept.omega == e.omega);
}

TEST_CASE("characteristic elements across small systems") {
  FusionSystem a4 = FusionSystem::from_group(catalog_group("A4"), 2);
  CharacteristicElement ea = characteristic_biset(a4);
  CHECK(ea.size == 12);
  CHECK(ea.ratio == 3);

  NamedFusion rot = rotation_fusion_system();
  CharacteristicElement er = characteristic_biset(rot.system);
  CHECK(er.size == 12);
  CHECK(er.ratio == 3);
  CHECK(!er.from_ambient_seed);  // no ambient group to seed from
  CharacteristicCheck cr = check_characteristic(rot.system, er.omega);
  CHECK((cr.genuine && cr.stable && cr.congruent));

  // a p-group's own fusion is characteristic for itself via the identity orbit
  FusionSystem d8 = FusionSystem::from_generators(Subgroup::whole(catalog_group("D8")), {});
  CharacteristicElement e8 = characteristic_biset(d8);
  CHECK(e8.ratio == 1);
  CHECK(e8.size == 8);
  FormalBiset expected;
  expected.add(BisetType{d8.underlying_group(), GroupMap::identity(d8.underlying_group())}, 1);
  CHECK(e8.omega == expected);
}

TEST_CASE("characteristic elements require saturation") {
  NamedFusion swp = swap_fusion_system();
  CHECK_THROWS_AS(characteristic_biset(swp.system), InputError);
}

TEST_CASE("the identity orbit acts as the identity on class functions") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  CharacterTable t = CharacterTable::compute(s);
  FormalBiset w;
  w.add(BisetType{s, GroupMap::identity(s)}, 1);
  for (int i = 0; i < t.num_irreducibles(); ++i) {
    ClassFunction chi = t.irreducible(i);
    ClassFunction acted = omega_action(f, w, chi);
    CHECK(acted.values() == chi.values());
  }
}

TEST_CASE("induction along the characteristic element") {
  FusionSystem f = three_point_system();
  CharacterTable t = CharacterTable::compute(f.underlying_group());
  FormalBiset omega = characteristic_biset(f).omega;

  InduceResult triv = induce_fusion(f, t, {1, 0, 0}, omega);
  CHECK(triv.multiplicities == IntVec{4, 0, 0});
  CHECK(triv.ratio == 4);

  InduceResult rho1 = induce_fusion(f, t, {0, 1, 0}, omega);
  CHECK(rho1.multiplicities == IntVec{0, 2, 2});
  CHECK(rho1.character.degree() == Rational(4));

  CHECK_THROWS_AS(induce_fusion(f, t, {-1, 1, 0}, omega), InputError);
  InduceResult virt = induce_fusion(f, t, {-1, 1, 0}, omega, /*accept_virtual=*/true);
  CHECK(virt.multiplicities == IntVec{-4, 2, 2});
}

TEST_CASE("induction refuses elements that are not characteristic") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  CharacterTable t = CharacterTable::compute(s);
  FormalBiset unstable;
  unstable.add(BisetType{s, GroupMap::identity(s)}, 1);
  CHECK_THROWS_AS(induce_fusion(f, t, {1, 0, 0}, unstable), InputError);
  Subgroup triv(s.parent(), std::vector<int>{0});
  FormalBiset incongruent;
  incongruent.add(BisetType{triv, GroupMap::inclusion(triv, s)}, 1);
  CHECK_THROWS_AS(induce_fusion(f, t, {1, 0, 0}, incongruent), InputError);
}

TEST_CASE("formal restriction distributes over the orbit decomposition") {
  FusionSystem f = three_point_system();
  const Subgroup& s = f.underlying_group();
  FormalBiset omega = characteristic_biset(f).omega;
  for (int pi = 0; pi < f.num_subgroups(); ++pi) {
    const Subgroup& q = f.subgroup(pi);
    for (const GroupMap& lam : f.hom_set(q, s)) {
      FormalBiset whole_restriction = restrict_biset(s, omega, q, lam);
      FormalBiset term_by_term;
      for (const auto& [t, m] : omega.terms) {
        FormalBiset one;
        one.add(t, 1);
        FormalBiset r = restrict_biset(s, one, q, lam);
        for (const auto& [rt, rm] : r.terms) term_by_term.add(rt, rm * m);
      }
      CHECK(whole_restriction == term_by_term);
    }
  }
}
