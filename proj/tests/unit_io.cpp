// JSON descriptors: parsing, validation, canonical emission
#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "fuselab/catalog.hpp"
#include "fuselab/json_io.hpp"

using namespace fuselab;

TEST_CASE("groups round-trip through cycle descriptors") {
  Json j = Json::parse(R"({"degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]})");
  GroupPtr g = group_from_json(j);
  CHECK(g->order() == 6);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 0, "generators": []})")),
                  InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[[0, 3]]]})")),
                  InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[[0, 0]]]})")),
                  InputError);
}

TEST_CASE("unknown keys are rejected everywhere") {
  CHECK_THROWS_AS(
      group_from_json(Json::parse(R"({"degree": 3, "generators": [], "extra": 1})")),
      InputError);
  GroupPtr s3 = catalog_group("S3");
  CHECK_THROWS_AS(morphism_from_json(
                      s3, Json::parse(R"({"source": [0], "images": [0], "junk": true})")),
                  InputError);
  CHECK_THROWS_AS(fusion_from_json(Json::parse(
                      R"({"ambient": {"degree": 3, "generators": []}, "p": 3, "x": 0})")),
                  InputError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(
                      R"({"char": 2, "generators": [], "relations": [], "why": 0})")),
                  InputError);
}

TEST_CASE("morphism descriptors produce verified maps") {
  GroupPtr s3 = catalog_group("S3");
  GroupMap inv = morphism_from_json(s3, Json::parse(R"({"source": [0, 3, 4], "images": [0, 4, 3]})"));
  CHECK(inv.apply(3) == 4);
  CHECK(inv.apply(4) == 3);
  // image order follows source order, so pairs may be listed arbitrarily
  GroupMap same =
      morphism_from_json(s3, Json::parse(R"({"source": [4, 0, 3], "images": [3, 0, 4]})"));
  CHECK(same.images() == inv.images());
  // not injective, hence not a homomorphism of C3
  CHECK_THROWS_AS(
      morphism_from_json(s3, Json::parse(R"({"source": [0, 3, 4], "images": [0, 3, 3]})")),
      InputError);
  // order 2 cannot map to order 3
  CHECK_THROWS_AS(
      morphism_from_json(s3, Json::parse(R"({"source": [0, 1], "images": [0, 3]})")),
      InputError);
}

TEST_CASE("fusion descriptors build both flavors of system") {
  Json ambient = Json::parse(
      R"({"ambient": {"degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]}, "p": 3})");
  FusionSystem f = fusion_from_json(ambient);
  CHECK(f.prime() == 3);
  CHECK(f.is_saturated());

  Json generated = Json::parse(R"({
    "sylow": {"degree": 4, "generators": [[[0, 1]], [[2, 3]]]},
    "p": 2,
    "generators": [{"source": [0, 1, 2, 3], "images": [0, 2, 3, 1]}]
  })");
  FusionSystem rot = fusion_from_json(generated);
  CHECK(rot.underlying_group().order() == 4);
  CHECK(rot.is_saturated());

  // the declared prime must match the group
  Json wrong = generated;
  wrong["p"] = 3;
  CHECK_THROWS_AS(fusion_from_json(wrong), InputError);
}

TEST_CASE("character tables emit a stable fingerprint") {
  CharacterTable t = CharacterTable::compute(Subgroup::whole(catalog_group("C3")));
  std::string fp = table_fingerprint(t);
  CHECK(fp.size() == 16);
  CHECK(fp == table_fingerprint(t));
  CHECK(fp == "653dd98fccc2a967");
  // the same abstract group placed inside a larger ambient group fingerprints
  // differently: class representatives are ambient element indices
  GroupPtr s3g = catalog_group("S3");
  CharacterTable sylow_t = CharacterTable::compute(sylow_subgroup(Subgroup::whole(s3g), 3));
  CHECK(table_fingerprint(sylow_t) == "a4ee2db2563ed2fb");
  Json tj = table_json(t);
  REQUIRE(tj.contains("classes"));
  REQUIRE(tj.contains("irreducibles"));
  CHECK(tj["classes"].size() == 3);
  // emission is canonical: two dumps agree byte for byte
  CHECK(tj.dump() == table_json(t).dump());
}

TEST_CASE("saturation reports serialize with their witnesses") {
  NamedFusion rot = rotation_fusion_system();
  CHECK(saturation_json(rot.system.check_saturation()).dump() == R"({"saturated":true})");
  NamedFusion swp = swap_fusion_system();
  Json j = saturation_json(swp.system.check_saturation());
  CHECK(!j["saturated"].get<bool>());
  REQUIRE(!j["failures"].empty());
  CHECK(j["failures"][0]["axiom"] == "I");
  CHECK(j["failures"][0]["subgroup"] == Json::parse("[0, 1, 2, 3]"));
}

TEST_CASE("formal bisets round-trip through descriptors") {
  FusionSystem f = FusionSystem::from_group(catalog_group("S3"), 3);
  FormalBiset omega = characteristic_biset(f).omega;
  Json j = formal_biset_json(omega);
  FormalBiset back = formal_biset_from_json(f.underlying_group(), j);
  CHECK(back == omega);
  CHECK(formal_biset_json(back).dump() == j.dump());
  // twist images must form a morphism
  CHECK_THROWS_AS(
      formal_biset_from_json(f.underlying_group(), Json::parse(R"([
        {"P": [0, 3, 4], "phi": {"images": [0, 3, 3]}, "mult": 1}
      ])")),
      InputError);
  // the left subgroup must sit inside S
  CHECK_THROWS_AS(
      formal_biset_from_json(f.underlying_group(), Json::parse(R"([
        {"P": [0, 1], "phi": {"images": [0, 1]}, "mult": 1}
      ])")),
      InputError);
}

TEST_CASE("algebra descriptors carry characteristic, generators, relations") {
  Json j = Json::parse(R"({
    "char": 2,
    "generators": [{"name": "y7", "degree": 7}, {"name": "y11", "degree": 11}, {"name": "y13", "degree": 13}],
    "relations": [[0, 2, 0], [0, 0, 2], [4, 0, 0]]
  })");
  GradedMonomialAlgebra a = algebra_from_json(j);
  PoincareCheck c = poincare_duality(a);
  CHECK(c.poincare_duality);
  CHECK(c.top_degree == 45);
  Json out = poincare_json(c);
  CHECK(out["poincare_duality"] == true);
  CHECK(out["top_degree"] == 45);
  CHECK(out["dimension"] == 16);
  CHECK(out["certificate"].contains("dual_partner"));
  CHECK(!out["certificate"].contains("failing_degrees"));
}

TEST_CASE("morphism emission is a faithful inverse of parsing") {
  GroupPtr s3 = catalog_group("S3");
  GroupMap inv =
      morphism_from_json(s3, Json::parse(R"({"source": [0, 3, 4], "images": [0, 4, 3]})"));
  Json j = morphism_json(inv);
  GroupMap again = morphism_from_json(s3, j);
  CHECK(again.images() == inv.images());
  CHECK(again.source().elems() == inv.source().elems());
}
