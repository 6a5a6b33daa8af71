// stable character lattices and orbit limits
#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

#include "fuselab/catalog.hpp"
#include "fuselab/stable.hpp"

using namespace fuselab;

namespace {
const FusionSystem& named_system(const std::string& name) {
  static std::vector<NamedFusion> all = catalog_fusion_systems();
  for (const auto& nf : all)
    if (nf.name == name) return nf.system;
  throw std::logic_error("no such fixture");
}

const CharacterTable& table_of(const FusionSystem& f) {
  static std::map<const FusionSystem*, CharacterTable> cache;
  auto it = cache.find(&f);
  if (it == cache.end())
    it = cache.emplace(&f, CharacterTable::compute(f.underlying_group())).first;
  return it->second;
}
}  // namespace

TEST_CASE("stable lattice of the symmetric-group fusion on three points") {
  const FusionSystem& f = named_system("S3@3");
  const CharacterTable& t = table_of(f);
  IntMat basis = stable_ring_basis(f, t);
  CHECK(basis == IntMat{{1, 0, 0}, {0, 1, 1}});

  CHECK(fusion_reps(f, t, 1) == std::vector<IntVec>{{1, 0, 0}});
  CHECK(fusion_reps(f, t, 2) == std::vector<IntVec>{{0, 1, 1}, {2, 0, 0}});
  CHECK(fusion_reps(f, t, 0) == std::vector<IntVec>{{0, 0, 0}});
  CHECK_THROWS_AS(fusion_reps(f, t, 1000), RefusalError);
}

TEST_CASE("fusion-preserving predicate singles out stable characters") {
  const FusionSystem& f = named_system("S3@3");
  const CharacterTable& t = table_of(f);
  CHECK(is_fusion_preserving(f, t.irreducible(0)));
  CHECK(!is_fusion_preserving(f, t.irreducible(1)));
  CHECK(!is_fusion_preserving(f, t.irreducible(2)));
  CHECK(is_fusion_preserving(f, t.combination({0, 1, 1})));
  CHECK(is_fusion_preserving(f, regular_character(t.classes())));
}

TEST_CASE("stable rank equals the number of fused element classes") {
  std::map<std::string, int> expected = {
      {"S3@3", 2},       {"S4@2", 4},   {"A4@2", 2},        {"S5@2", 4},
      {"S5@5", 2},       {"S6@3", 3},   {"C3-inner", 3},    {"C9-inner", 9},
      {"C2xC2-inner", 4}, {"D8-inner", 5}, {"Q8-inner", 5},  {"C2xC2-rot", 2}};
  for (const auto& nf : catalog_fusion_systems()) {
    INFO(nf.name);
    const CharacterTable& t = table_of(nf.system);
    IntMat basis = stable_ring_basis(nf.system, t);
    REQUIRE(expected.count(nf.name) == 1);
    CHECK(static_cast<int>(basis.size()) == expected[nf.name]);
    CHECK(basis.size() == nf.system.element_classes().size());
  }
}

TEST_CASE("the generated rotation system matches its stable lattice") {
  NamedFusion rot = rotation_fusion_system();
  CharacterTable t = CharacterTable::compute(rot.system.underlying_group());
  CHECK(stable_ring_basis(rot.system, t) == IntMat{{1, 0, 0, 0}, {0, 1, 1, 1}});
}

TEST_CASE("stable lattices exist for unsaturated systems too") {
  NamedFusion swp = swap_fusion_system();
  CharacterTable t = CharacterTable::compute(swp.system.underlying_group());
  IntMat basis = stable_ring_basis(swp.system, t);
  CHECK(basis == IntMat{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
  // the self-centralizing family still computes the same lattice...
  CHECK(orbit_limit_ring(swp.system, t, OrbitFamily::centric) == basis);
  // ...but the radical family omits the whole group here, so no limit exists
  CHECK(swp.system.centric_radical_indices().empty());
  CHECK_THROWS_AS(orbit_limit_ring(swp.system, t, OrbitFamily::centric_radical), InputError);
}

TEST_CASE("orbit limits over both families recover the stable lattice") {
  for (const auto& nf : catalog_fusion_systems()) {
    INFO(nf.name);
    const CharacterTable& t = table_of(nf.system);
    IntMat basis = stable_ring_basis(nf.system, t);
    CHECK(orbit_limit_ring(nf.system, t, OrbitFamily::centric) == basis);
    CHECK(orbit_limit_ring(nf.system, t, OrbitFamily::centric_radical) == basis);
  }
}

TEST_CASE("limit elements carry compatible components at every representative") {
  const FusionSystem& f = named_system("S3@3");
  const CharacterTable& t = table_of(f);
  OrbitLimitReps lim = orbit_limit_reps(f, t, 2, OrbitFamily::centric);
  REQUIRE(lim.elements.size() == 2);
  std::vector<IntVec> s_parts;
  for (const auto& e : lim.elements) {
    s_parts.push_back(e.s_multiplicities);
    REQUIRE(e.component_multiplicities.size() == lim.family.size());
    // each component has matching total degree in its own subgroup's table
    for (std::size_t j = 0; j < lim.family.size(); ++j) {
      CharacterTable sub = CharacterTable::compute(f.subgroup(lim.family[j]));
      CHECK(sub.combination(e.component_multiplicities[j]).degree() == Rational(2));
    }
  }
  CHECK(s_parts == fusion_reps(f, t, 2));
}

TEST_CASE("limit representatives agree with direct enumeration up to degree four") {
  for (const char* name : {"S3@3", "A4@2", "C2xC2-rot"}) {
    const FusionSystem& f = named_system(name);
    const CharacterTable& t = table_of(f);
    for (std::int64_t n = 0; n <= 4; ++n) {
      std::vector<IntVec> direct = fusion_reps(f, t, n);
      for (OrbitFamily fam : {OrbitFamily::centric, OrbitFamily::centric_radical}) {
        OrbitLimitReps lim = orbit_limit_reps(f, t, n, fam);
        std::vector<IntVec> via_limit;
        for (const auto& e : lim.elements) via_limit.push_back(e.s_multiplicities);
        CHECK(via_limit == direct);
      }
    }
  }
}
