// fusion systems: construction, saturation, centricity, factorization
#include <catch2/catch_amalgamated.hpp>

#include "fuselab/catalog.hpp"
#include "fuselab/fusion.hpp"

using namespace fuselab;

namespace {
FusionSystem sylow_fusion(const char* key, int p) {
  return FusionSystem::from_group(catalog_group(key), p);
}
}  // namespace

TEST_CASE("an ambient group induces fusion on its Sylow subgroup") {
  FusionSystem f = sylow_fusion("S3", 3);
  CHECK(f.prime() == 3);
  CHECK(f.underlying_group().order() == 3);
  CHECK(f.num_subgroups() == 2);  // trivial and whole
  CHECK(f.realized_from_ambient());
  // the whole group carries the identity and the inversion
  CHECK(f.aut_set(f.underlying_group()).size() == 2);
  CHECK_THROWS_AS(sylow_fusion("S3", 5), InputError);
  CHECK_THROWS_AS(sylow_fusion("S3", 4), InputError);
}

TEST_CASE("inner fusion systems contain conjugations only") {
  GroupPtr g = catalog_group("D8");
  Subgroup s = Subgroup::whole(g);
  FusionSystem inner = FusionSystem::from_generators(s, {});
  FusionSystem realized = FusionSystem::from_group(g, 2);
  CHECK(inner.num_morphisms() == realized.num_morphisms());
  CHECK(inner.is_saturated());
  for (int i = 0; i < inner.num_subgroups(); ++i)
    CHECK(inner.morphisms_from(i).size() == realized.morphisms_from(i).size());
}

TEST_CASE("generated fusion systems require a p-group") {
  GroupPtr g = catalog_group("S3");
  CHECK_THROWS_AS(FusionSystem::from_generators(Subgroup::whole(g), {}), InputError);
}

TEST_CASE("every catalog fusion system is saturated") {
  for (const auto& nf : catalog_fusion_systems()) {
    INFO(nf.name);
    CHECK(nf.system.is_saturated());
    CHECK(nf.system.check_saturation().failures.empty());
  }
}

TEST_CASE("the swap-generated system fails the first axiom at the whole group") {
  NamedFusion swp = swap_fusion_system();
  const SaturationReport& r = swp.system.check_saturation();
  REQUIRE(!r.saturated);
  bool at_whole = false;
  for (const auto& f : r.failures) {
    if (f.axiom == "I" && f.subgroup == swp.system.underlying_group().elems()) at_whole = true;
  }
  CHECK(at_whole);
}

TEST_CASE("morphism sets are closed under composition and restriction") {
  FusionSystem f = sylow_fusion("S4", 2);
  // composition closure on a sample: every composable pair lands in the system
  for (int i = 0; i < f.num_subgroups(); ++i) {
    for (const GroupMap& phi : f.morphisms_from(i)) {
      for (const GroupMap& psi : f.morphisms_from(f.subgroup_index(phi.target()))) {
        CHECK(f.contains_morphism(psi.after(phi)));
      }
    }
  }
}

TEST_CASE("hom sets contain conjugations and respect fusion classes") {
  FusionSystem f = sylow_fusion("A4", 2);
  const Subgroup& s = f.underlying_group();
  // all three order-two subgroups fuse into one class
  std::vector<std::vector<int>> classes = f.subgroup_classes();
  std::size_t order_two_class = 0;
  for (const auto& cls : classes)
    if (f.subgroup(cls[0]).order() == 2) {
      order_two_class = cls.size();
    }
  CHECK(order_two_class == 3);
  // morphisms between fused subgroups exist
  for (const auto& cls : classes)
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = 0; b < cls.size(); ++b)
        CHECK(!f.hom_set(f.subgroup(cls[a]), f.subgroup(cls[b])).empty());
  CHECK(f.hom_set(s, s).size() == f.aut_set(s).size());
}

TEST_CASE("element classes refine into fused conjugacy classes") {
  FusionSystem f = sylow_fusion("S3", 3);
  // identity alone, then the two nontrivial elements fused by inversion
  std::vector<std::vector<int>> classes = f.element_classes();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
}

TEST_CASE("centric and centric radical subgroups of the octahedral fusion") {
  FusionSystem f = sylow_fusion("S4", 2);
  CHECK(f.centric_indices().size() == 4);
  CHECK(f.centric_radical_indices().size() == 2);
  // the whole group is always centric and here also radical
  CHECK(f.is_centric(f.whole_index()));
  CHECK(f.is_radical(f.whole_index()));
}

TEST_CASE("self-maps up to inner twist") {
  FusionSystem f3 = sylow_fusion("S3", 3);
  const Subgroup& s3 = f3.underlying_group();
  CHECK(f3.orbit_hom_set(s3, s3).size() == 2);
  FusionSystem f2 = sylow_fusion("S4", 2);
  const Subgroup& s2 = f2.underlying_group();
  CHECK(f2.orbit_hom_set(s2, s2).size() == 1);
}

TEST_CASE("factorization through centric radical hosts recomposes exactly") {
  for (const char* key : {"S3", "S4"}) {
    FusionSystem f = sylow_fusion(key, key[1] == '3' ? 3 : 2);
    for (int i = 0; i < f.num_subgroups(); ++i) {
      for (const GroupMap& phi : f.morphisms_from(i)) {
        AlperinDecomposition d = f.alperin_decompose(phi);
        for (const auto& st : d.steps) {
          int host = f.subgroup_index(st.host);
          CHECK(f.is_fully_normalized(host));
          CHECK(f.is_centric(host));
          CHECK(f.is_radical(host));
          CHECK(f.contains_morphism(st.alpha));
        }
        for (int x : phi.source().elems()) CHECK(d.apply(x) == phi.apply(x));
      }
    }
  }
}

TEST_CASE("factorization rejects maps outside the system") {
  FusionSystem inner = FusionSystem::from_generators(
      Subgroup::whole(catalog_group("C2xC2")), {});
  Subgroup s = inner.underlying_group();
  GroupMap rot = GroupMap::from_element_table(s, s, {0, 2, 3, 1}, true);
  CHECK(!inner.contains_morphism(rot));
  CHECK_THROWS_AS(inner.alperin_decompose(rot), InputError);
}
