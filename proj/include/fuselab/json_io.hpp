#pragma once

// JSON descriptors (groups, fusion systems, graded algebras, formal bisets)
// and canonical serialization of results. Parsing is strict: unknown keys are
// rejected so that a typo in an option name cannot silently change a run.
// Emission uses nlohmann's object type, which keeps keys sorted, so dumping
// the same data twice yields byte-identical text.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "biset.hpp"
#include "catalog.hpp"
#include "character.hpp"
#include "duality.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "group.hpp"
#include "lattice.hpp"

namespace fuselab {

using Json = nlohmann::json;

namespace detail {

inline void require_object_keys(const Json& j, const std::string& what,
                                const std::vector<std::string>& required,
                                const std::vector<std::string>& optional = {}) {
  input_check(j.is_object(), what + " must be a JSON object");
  for (const auto& k : required)
    input_check(j.contains(k), what + " is missing key \"" + k + "\"");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    input_check(known, what + " has unknown key \"" + key + "\"");
  }
}

inline std::int64_t json_int(const Json& j, const std::string& what) {
  input_check(j.is_number_integer(), what + " must be an integer");
  return j.get<std::int64_t>();
}

inline int json_small_int(const Json& j, const std::string& what) {
  std::int64_t v = json_int(j, what);
  input_check(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(),
              what + " is out of range");
  return static_cast<int>(v);
}

inline std::vector<int> json_int_vector(const Json& j, const std::string& what) {
  input_check(j.is_array(), what + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(json_small_int(v, "an entry of " + what));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// descriptor parsing

// {"degree": int, "generators": [[cycle, ...], ...], "name"?: string} with
// cycles as arrays of 0-based points.
inline GroupPtr group_from_json(const Json& j) {
  detail::require_object_keys(j, "group descriptor", {"degree", "generators"}, {"name"});
  int degree = detail::json_small_int(j.at("degree"), "group degree");
  const Json& gens = j.at("generators");
  input_check(gens.is_array(), "group generators must be an array");
  std::vector<Permutation> perms;
  for (const auto& gj : gens) {
    input_check(gj.is_array(), "a permutation must be an array of cycles");
    std::vector<std::vector<int>> cycles;
    for (const auto& cj : gj) cycles.push_back(detail::json_int_vector(cj, "a cycle"));
    perms.push_back(Permutation::from_cycles(degree, cycles));
  }
  std::string name;
  if (j.contains("name")) {
    input_check(j.at("name").is_string(), "group name must be a string");
    name = j.at("name").get<std::string>();
  }
  return std::make_shared<const Group>(degree, std::move(perms), std::move(name));
}

// a sorted list of element indices of the parent group
inline Subgroup subgroup_from_json(const GroupPtr& g, const Json& j) {
  std::vector<int> elems = detail::json_int_vector(j, "a subgroup element list");
  for (int e : elems)
    input_check(e >= 0 && e < g->order(), "subgroup element index out of range");
  return Subgroup(g, std::move(elems));
}

// {"source": [elements], "images": [elements]}: an injective homomorphism
// between subgroups of g given by its full element table. Pairs are matched
// positionally; the i-th source element maps to the i-th image.
inline GroupMap morphism_from_json(const GroupPtr& g, const Json& j) {
  detail::require_object_keys(j, "morphism descriptor", {"source", "images"});
  std::vector<int> src = detail::json_int_vector(j.at("source"), "morphism source");
  std::vector<int> img = detail::json_int_vector(j.at("images"), "morphism images");
  input_check(src.size() == img.size(),
              "morphism source and image lists must have equal length");
  input_check(!src.empty(), "morphism descriptor must list at least the identity");
  std::map<int, int> table;
  for (std::size_t i = 0; i < src.size(); ++i) {
    input_check(src[i] >= 0 && src[i] < g->order() && img[i] >= 0 && img[i] < g->order(),
                "morphism element index out of range");
    input_check(table.emplace(src[i], img[i]).second, "morphism source repeats an element");
  }
  std::vector<int> source_elems, images_sorted_by_source;
  for (const auto& [a, b] : table) {
    source_elems.push_back(a);
    images_sorted_by_source.push_back(b);
  }
  Subgroup source(g, source_elems);
  Subgroup target(g, images_sorted_by_source);
  return GroupMap::from_element_table(source, target, images_sorted_by_source, true);
}

// Either {"ambient": <group descriptor>, "p": int} for the fusion system a
// finite group induces on one of its Sylow p-subgroups, or
// {"sylow": <group descriptor>, "p": int, "generators": [<morphism>, ...]}
// for the smallest fusion system on the given p-group containing the listed
// maps (an empty list gives the inner, conjugation-only system).
inline FusionSystem fusion_from_json(const Json& j,
                                     int order_bound = kDefaultSubgroupOrderBound) {
  input_check(j.is_object(), "fusion descriptor must be a JSON object");
  if (j.contains("ambient")) {
    detail::require_object_keys(j, "fusion descriptor", {"ambient", "p"});
    GroupPtr g = group_from_json(j.at("ambient"));
    int p = detail::json_small_int(j.at("p"), "fusion prime");
    return FusionSystem::from_group(g, p, g->name(), order_bound);
  }
  detail::require_object_keys(j, "fusion descriptor", {"sylow", "p", "generators"});
  GroupPtr g = group_from_json(j.at("sylow"));
  int p = detail::json_small_int(j.at("p"), "fusion prime");
  input_check(is_prime(p) && is_p_power_order(g->order(), p),
              "the underlying group of a generated fusion system must be a p-group "
              "for the given prime");
  const Json& gens = j.at("generators");
  input_check(gens.is_array(), "fusion generators must be an array");
  std::vector<GroupMap> maps;
  for (const auto& mj : gens) maps.push_back(morphism_from_json(g, mj));
  return FusionSystem::from_generators(Subgroup::whole(g), std::move(maps), g->name(),
                                       order_bound);
}

// {"char": p, "generators": [{"name": s, "degree": d}, ...],
//  "relations": [[exponents], ...]}
inline GradedMonomialAlgebra algebra_from_json(const Json& j) {
  detail::require_object_keys(j, "algebra descriptor", {"char", "generators", "relations"});
  GradedMonomialAlgebra a;
  a.characteristic = detail::json_small_int(j.at("char"), "algebra characteristic");
  const Json& gens = j.at("generators");
  input_check(gens.is_array(), "algebra generators must be an array");
  for (const auto& gj : gens) {
    detail::require_object_keys(gj, "algebra generator", {"name", "degree"});
    input_check(gj.at("name").is_string(), "algebra generator name must be a string");
    a.generators.push_back({gj.at("name").get<std::string>(),
                            detail::json_small_int(gj.at("degree"), "generator degree")});
  }
  const Json& rels = j.at("relations");
  input_check(rels.is_array(), "algebra relations must be an array");
  for (const auto& rj : rels) a.relations.push_back(detail::json_int_vector(rj, "a relation"));
  return a;
}

// [{"P": [elements], "phi": {"images": [elements]}, "mult": n}, ...]; the
// twist images are listed against P's elements in ascending order.
inline FormalBiset formal_biset_from_json(const Subgroup& s, const Json& j) {
  input_check(j.is_array(), "biset descriptor must be an array of terms");
  const GroupPtr& g = s.parent();
  FormalBiset omega;
  for (const auto& tj : j) {
    detail::require_object_keys(tj, "biset term", {"P", "phi", "mult"});
    Subgroup p = subgroup_from_json(g, tj.at("P"));
    input_check(s.contains_subgroup(p), "biset term subgroup leaves the underlying group");
    detail::require_object_keys(tj.at("phi"), "biset twist", {"images"});
    std::vector<int> img = detail::json_int_vector(tj.at("phi").at("images"), "twist images");
    input_check(img.size() == p.elems().size(),
                "twist image count must match the subgroup order");
    for (int e : img) input_check(s.contains(e), "twist image leaves the underlying group");
    Subgroup q(g, img);
    GroupMap phi = GroupMap::from_element_table(p, q, img, true);
    omega.add(BisetType{p, phi}, detail::json_int(tj.at("mult"), "biset multiplicity"));
  }
  return omega;
}

// ---------------------------------------------------------------------------
// canonical emission

inline Json subgroup_json(const Subgroup& p) { return Json(p.elems()); }

inline Json morphism_json(const GroupMap& m) {
  Json j = Json::object();
  j["source"] = m.source().elems();
  j["images"] = m.images();
  return j;
}

inline Json cyclotomic_json(const Cyclotomic& v) {
  Json num = Json::array(), den = Json::array();
  for (const Rational& r : v.coeffs()) {
    num.push_back(r.num());
    den.push_back(r.den());
  }
  Json j = Json::object();
  j["den"] = std::move(den);
  j["num"] = std::move(num);
  j["order"] = v.order();
  return j;
}

inline Json table_json(const CharacterTable& t) {
  Json classes = Json::array();
  for (int c = 0; c < t.classes()->num_classes(); ++c) {
    Json cj = Json::object();
    cj["rep"] = t.classes()->rep(c);
    cj["size"] = t.classes()->class_members(c).size();
    classes.push_back(std::move(cj));
  }
  Json irr = Json::array();
  for (const ClassFunction& chi : t.irreducibles()) {
    Json row = Json::array();
    for (const Cyclotomic& v : chi.values()) row.push_back(cyclotomic_json(v));
    irr.push_back(std::move(row));
  }
  Json j = Json::object();
  j["classes"] = std::move(classes);
  j["irreducibles"] = std::move(irr);
  return j;
}

inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// Hash of the canonical table serialization. Multiplicity vectors are only
// meaningful against a fixed irreducible order; emitting the fingerprint next
// to them lets a consumer detect a table mismatch instead of silently
// misreading coordinates.
inline std::string table_fingerprint(const CharacterTable& t) {
  return fnv1a_hex(table_json(t).dump());
}

inline Json formal_biset_json(const FormalBiset& omega) {
  Json arr = Json::array();
  for (const auto& [type, mult] : omega.terms) {
    Json phij = Json::object();
    phij["images"] = type.twist.images();
    Json tj = Json::object();
    tj["P"] = type.left.elems();
    tj["mult"] = mult;
    tj["phi"] = std::move(phij);
    arr.push_back(std::move(tj));
  }
  return arr;
}

inline Json saturation_json(const SaturationReport& r) {
  Json j = Json::object();
  j["saturated"] = r.saturated;
  if (!r.saturated) {
    Json fails = Json::array();
    for (const auto& f : r.failures) {
      Json fj = Json::object();
      fj["axiom"] = f.axiom;
      fj["detail"] = f.detail;
      fj["subgroup"] = f.subgroup;
      fails.push_back(std::move(fj));
    }
    j["failures"] = std::move(fails);
  }
  return j;
}

inline Json alperin_json(const AlperinDecomposition& d) {
  Json steps = Json::array();
  for (const auto& st : d.steps) {
    Json sj = Json::object();
    sj["host"] = st.host.elems();
    sj["map"] = morphism_json(st.alpha);
    steps.push_back(std::move(sj));
  }
  Json j = Json::object();
  j["steps"] = std::move(steps);
  return j;
}

inline Json poincare_json(const PoincareCheck& c) {
  Json cert = Json::object();
  if (c.poincare_duality) cert["dual_partner"] = c.dual_partner;
  if (!c.failing_degrees.empty()) cert["failing_degrees"] = c.failing_degrees;
  cert["socle"] = c.socle;
  Json j = Json::object();
  j["certificate"] = std::move(cert);
  j["dimension"] = c.dimension;
  j["hilbert"] = c.hilbert;
  j["poincare_duality"] = c.poincare_duality;
  j["top_degree"] = c.top_degree;
  return j;
}

}  // namespace fuselab
