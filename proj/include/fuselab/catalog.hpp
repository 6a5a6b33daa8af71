#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusion.hpp"
#include "group.hpp"

namespace fuselab {

// Built-in permutation groups addressable by name from the CLI and tests.
// Q8 is realized by its regular action; everything else by its natural one.
inline GroupPtr catalog_group(const std::string& key) {
  using C = std::vector<std::vector<int>>;
  auto mk = [](int degree, const std::vector<C>& gen_cycles, const std::string& name) {
    std::vector<Permutation> gens;
    gens.reserve(gen_cycles.size());
    for (const auto& c : gen_cycles) gens.push_back(Permutation::from_cycles(degree, c));
    return std::make_shared<const Group>(degree, std::move(gens), name);
  };
  if (key == "C3") return mk(3, {{{0, 1, 2}}}, "C3");
  if (key == "C9") return mk(9, {{{0, 1, 2, 3, 4, 5, 6, 7, 8}}}, "C9");
  if (key == "C2xC2") return mk(4, {{{0, 1}}, {{2, 3}}}, "C2xC2");
  if (key == "D8") return mk(4, {{{0, 1, 2, 3}}, {{0, 2}}}, "D8");
  if (key == "Q8") return mk(8, {{{0, 1, 2, 3}, {4, 5, 6, 7}}, {{0, 4, 2, 6}, {1, 7, 3, 5}}}, "Q8");
  if (key == "S3") return mk(3, {{{0, 1}}, {{0, 1, 2}}}, "S3");
  if (key == "S4") return mk(4, {{{0, 1}}, {{0, 1, 2, 3}}}, "S4");
  if (key == "A4") return mk(4, {{{0, 1, 2}}, {{1, 2, 3}}}, "A4");
  if (key == "S5") return mk(5, {{{0, 1}}, {{0, 1, 2, 3, 4}}}, "S5");
  if (key == "S6") return mk(6, {{{0, 1}}, {{0, 1, 2, 3, 4, 5}}}, "S6");
  throw InputError("unknown catalog group: " + key);
}

inline const std::vector<std::string>& catalog_keys() {
  static const std::vector<std::string> keys = {"C3", "C9", "C2xC2", "D8", "Q8",
                                                "S3", "S4", "A4",    "S5", "S6"};
  return keys;
}

struct NamedFusion {
  std::string name;
  FusionSystem system;
};

// The rotation-generated fusion system on C2 x C2: one outer automorphism of
// order three permuting the involutions cyclically. Saturated.
inline NamedFusion rotation_fusion_system() {
  GroupPtr g = catalog_group("C2xC2");
  Subgroup s = Subgroup::whole(g);
  return {"C2xC2-rot", FusionSystem::from_generators(
                           s, {GroupMap::from_element_table(s, s, {0, 2, 3, 1}, true)},
                           "C2xC2-rot")};
}

// The swap-generated fusion system on C2 x C2: one outer automorphism of
// order two exchanging two involutions. Not saturated (the automorphism group
// of the whole group has even order while inner automorphisms are trivial).
inline NamedFusion swap_fusion_system() {
  GroupPtr g = catalog_group("C2xC2");
  Subgroup s = Subgroup::whole(g);
  return {"C2xC2-swap", FusionSystem::from_generators(
                            s, {GroupMap::from_element_table(s, s, {0, 3, 2, 1}, true)},
                            "C2xC2-swap")};
}

// Every saturated fusion system the test suites exercise: the six
// ambient-realized systems, the inner (conjugation-only) systems of the
// catalog p-groups, and the generated rotation system.
inline std::vector<NamedFusion> catalog_fusion_systems() {
  std::vector<NamedFusion> out;
  auto ambient = [&out](const std::string& key, int p) {
    std::string name = key + "@" + std::to_string(p);
    out.push_back({name, FusionSystem::from_group(catalog_group(key), p, name)});
  };
  ambient("S3", 3);
  ambient("S4", 2);
  ambient("A4", 2);
  ambient("S5", 2);
  ambient("S5", 5);
  ambient("S6", 3);
  auto inner = [&out](const std::string& key) {
    GroupPtr g = catalog_group(key);
    std::string name = key + "-inner";
    out.push_back({name, FusionSystem::from_generators(Subgroup::whole(g), {}, name)});
  };
  inner("C3");
  inner("C9");
  inner("C2xC2");
  inner("D8");
  inner("Q8");
  out.push_back(rotation_fusion_system());
  return out;
}

}  // namespace fuselab
