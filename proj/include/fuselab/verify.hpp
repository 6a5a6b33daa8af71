#pragma once

// Named verification checks grouped into three suites:
//   core            group and character invariants on the built-in systems
//   paper-examples  pinned values from the worked examples the library models
//   oracles         cross-checks between independent implementations
// Reports carry no timing or environment data, so two runs over the same
// build emit byte-identical output.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "biset.hpp"
#include "catalog.hpp"
#include "character.hpp"
#include "duality.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "stable.hpp"

namespace fuselab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, empty when passing
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"core", "paper-examples", "oracles"};
  return names;
}

namespace verify_detail {

struct Ctx {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

struct Check {
  std::string name;
  std::function<void(Ctx&)> fn;
};

// shared fixtures, built once per process
inline const std::vector<NamedFusion>& systems() {
  static const std::vector<NamedFusion> s = catalog_fusion_systems();
  return s;
}

inline const NamedFusion& swap_system() {
  static const NamedFusion s = swap_fusion_system();
  return s;
}

inline const FusionSystem& system_named(const std::string& name) {
  for (const auto& nf : systems())
    if (nf.name == name) return nf.system;
  throw InternalError("unknown built-in fusion system: " + name);
}

inline const CharacterTable& underlying_table(const std::string& name) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, CharacterTable::compute(system_named(name).underlying_group()))
             .first;
  return it->second;
}

inline std::uint32_t name_seed(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return static_cast<std::uint32_t>(h ^ (h >> 32));
}

// ---------------------------------------------------------------------------
// core: group and character invariants

inline std::vector<Check> core_checks() {
  std::vector<Check> out;

  out.push_back({"catalog-groups", [](Ctx& c) {
                   const std::map<std::string, int> expected = {
                       {"A4", 12}, {"C2xC2", 4}, {"C3", 3},  {"C9", 9},   {"D8", 8},
                       {"Q8", 8},  {"S3", 6},    {"S4", 24}, {"S5", 120}, {"S6", 720}};
                   for (const std::string& key : catalog_keys()) {
                     GroupPtr g = catalog_group(key);
                     auto it = expected.find(key);
                     c.expect(it != expected.end() && g->order() == it->second,
                              key + " has order " + std::to_string(g->order()));
                   }
                 }});

  const std::map<std::string, int> subgroup_counts = {
      {"S3@3", 2},     {"S4@2", 10},       {"A4@2", 5},      {"S5@2", 10},
      {"S5@5", 2},     {"S6@3", 6},        {"C3-inner", 2},  {"C9-inner", 3},
      {"C2xC2-inner", 5}, {"D8-inner", 10}, {"Q8-inner", 6},  {"C2xC2-rot", 5}};
  for (const auto& [name, count] : subgroup_counts) {
    out.push_back({"subgroup-count/" + name, [name, count](Ctx& c) {
                     int got = system_named(name).num_subgroups();
                     c.expect(got == count, "found " + std::to_string(got) + " subgroups, expected " +
                                                std::to_string(count));
                   }});
  }

  for (const auto& nf : systems()) {
    const std::string name = nf.name;

    out.push_back({"orthogonality/" + name, [name](Ctx& c) {
                     const CharacterTable& t = underlying_table(name);
                     const ConjClasses& cls = *t.classes();
                     int k = t.num_irreducibles();
                     c.expect(k == cls.num_classes(),
                              "irreducible count differs from class count");
                     for (int i = 0; i < k && c.ok; ++i)
                       for (int j = 0; j < k && c.ok; ++j)
                         c.expect(inner_product(t.irreducible(i), t.irreducible(j)) ==
                                      Rational(i == j ? 1 : 0),
                                  "row orthogonality fails at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
                     const Group& g = cls.group.group();
                     for (int a = 0; a < cls.num_classes() && c.ok; ++a)
                       for (int b = 0; b < cls.num_classes() && c.ok; ++b) {
                         Cyclotomic sum = Cyclotomic::zero();
                         int ra = cls.rep(a), rb = g.inv(cls.rep(b));
                         for (int i = 0; i < k; ++i)
                           sum += t.irreducible(i).value_at_element(ra) *
                                  t.irreducible(i).value_at_element(rb);
                         Rational want =
                             a == b ? Rational(cls.group.order()) *
                                          Rational(1, static_cast<std::int64_t>(
                                                          cls.class_members(a).size()))
                                    : Rational(0);
                         c.expect(sum.is_rational() && sum.as_rational() == want,
                                  "column orthogonality fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
                       }
                   }});

    out.push_back({"degree-sum/" + name, [name](Ctx& c) {
                     const CharacterTable& t = underlying_table(name);
                     std::int64_t sum = 0;
                     for (std::int64_t d : t.degrees())
                       sum = checked::add(sum, checked::mul(d, d));
                     c.expect(sum == t.group().order(),
                              "degree squares sum to " + std::to_string(sum) + ", group order is " +
                                  std::to_string(t.group().order()));
                   }});

    out.push_back({"linear-count/" + name, [name](Ctx& c) {
                     const CharacterTable& t = underlying_table(name);
                     const Subgroup& s = t.group();
                     const Group& g = s.group();
                     std::vector<int> comm;
                     for (int a : s.elems())
                       for (int b : s.elems())
                         comm.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
                     std::vector<int> derived = g.close(comm);
                     std::int64_t linear = 0;
                     for (std::int64_t d : t.degrees()) linear += d == 1;
                     c.expect(linear * static_cast<std::int64_t>(derived.size()) == s.order(),
                              "linear character count does not match the abelianization order");
                   }});

    out.push_back({"frobenius-reciprocity/" + name, [name](Ctx& c) {
                     const FusionSystem& f = system_named(name);
                     const CharacterTable& st = underlying_table(name);
                     std::map<int, CharacterTable> sub_tables;
                     std::mt19937 rng(name_seed(name));
                     for (int trial = 0; trial < 100 && c.ok; ++trial) {
                       int pi = static_cast<int>(rng() % f.num_subgroups());
                       auto it = sub_tables.find(pi);
                       if (it == sub_tables.end())
                         it = sub_tables.emplace(pi, CharacterTable::compute(f.subgroup(pi)))
                                  .first;
                       const CharacterTable& pt = it->second;
                       const ClassFunction& chi =
                           pt.irreducible(static_cast<int>(rng() % pt.num_irreducibles()));
                       const ClassFunction& psi =
                           st.irreducible(static_cast<int>(rng() % st.num_irreducibles()));
                       ClassFunction ind = induce(chi, st.classes());
                       ClassFunction res = restrict_to(psi, pt.classes());
                       c.expect(inner_product(ind, psi) == inner_product(chi, res),
                                "reciprocity fails on trial " + std::to_string(trial) +
                                    " at subgroup " + std::to_string(pi));
                     }
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------
// paper-examples: pinned values from the worked examples

inline std::vector<Check> paper_example_checks() {
  std::vector<Check> out;

  out.push_back({"saturation/catalog", [](Ctx& c) {
                   for (const auto& nf : systems())
                     c.expect(nf.system.is_saturated(), nf.name + " must be saturated");
                 }});

  out.push_back({"saturation/C2xC2-swap", [](Ctx& c) {
                   const FusionSystem& f = swap_system().system;
                   const SaturationReport& r = f.check_saturation();
                   c.expect(!r.saturated, "the swap-generated system must not be saturated");
                   bool at_whole = false;
                   for (const auto& fail : r.failures)
                     if (fail.axiom == "I" && fail.subgroup == f.underlying_group().elems())
                       at_whole = true;
                   c.expect(at_whole,
                            "expected a first-axiom failure at the whole underlying group");
                 }});

  out.push_back({"stable-basis/S3@3", [](Ctx& c) {
                   IntMat basis =
                       stable_ring_basis(system_named("S3@3"), underlying_table("S3@3"));
                   IntMat want = {{1, 0, 0}, {0, 1, 1}};
                   c.expect(basis == want, "stable lattice basis differs from the pinned value");
                 }});

  out.push_back({"preserving-pattern/S3@3", [](Ctx& c) {
                   const FusionSystem& f = system_named("S3@3");
                   const CharacterTable& t = underlying_table("S3@3");
                   c.expect(is_fusion_preserving(f, t.irreducible(0)),
                            "the trivial character must be preserving");
                   c.expect(!is_fusion_preserving(f, t.irreducible(1)),
                            "the second linear character must not be preserving");
                   c.expect(!is_fusion_preserving(f, t.irreducible(2)),
                            "the third linear character must not be preserving");
                   c.expect(is_fusion_preserving(f, t.combination({0, 1, 1})),
                            "the sum of the nontrivial linear characters must be preserving");
                 }});

  out.push_back({"degree-reps/S3@3", [](Ctx& c) {
                   const FusionSystem& f = system_named("S3@3");
                   const CharacterTable& t = underlying_table("S3@3");
                   auto r1 = fusion_reps(f, t, 1);
                   auto r2 = fusion_reps(f, t, 2);
                   c.expect(r1 == std::vector<IntVec>{{1, 0, 0}},
                            "degree-one preserving characters differ from the pinned value");
                   c.expect(r2 == std::vector<IntVec>({{0, 1, 1}, {2, 0, 0}}),
                            "degree-two preserving characters differ from the pinned value");
                 }});

  out.push_back({"regular-character/all", [](Ctx& c) {
                   for (const auto& nf : systems()) {
                     const CharacterTable& t = underlying_table(nf.name);
                     c.expect(is_fusion_preserving(nf.system, regular_character(t.classes())),
                              "regular character not preserving on " + nf.name);
                   }
                   const FusionSystem& swp = swap_system().system;
                   CharacterTable t = CharacterTable::compute(swp.underlying_group());
                   c.expect(is_fusion_preserving(swp, regular_character(t.classes())),
                            "regular character not preserving on " + swap_system().name);
                 }});

  out.push_back({"characteristic-biset/S3@3", [](Ctx& c) {
                   CharacteristicElement ce = characteristic_biset(system_named("S3@3"));
                   c.expect(ce.multiplicities == IntVec({0, 2, 2}),
                            "solution multiplicities differ from the pinned value");
                   c.expect(ce.ratio == 4, "point count over group order must be four");
                   c.expect(ce.size == 12, "point count must be twelve");
                 }});

  out.push_back({"induced-character/S3@3", [](Ctx& c) {
                   const FusionSystem& f = system_named("S3@3");
                   const CharacterTable& t = underlying_table("S3@3");
                   CharacteristicElement ce = characteristic_biset(f);
                   InduceResult r = induce_fusion(f, t, {0, 1, 0}, ce.omega);
                   c.expect(r.multiplicities == IntVec({0, 2, 2}),
                            "induction of the second linear character differs from the pinned "
                            "value");
                   c.expect(r.ratio == 4, "induction ratio must be four");
                   c.expect(r.character.degree() == Rational(4),
                            "induced character must have degree four");
                 }});

  out.push_back({"outer-classes/S3@3", [](Ctx& c) {
                   const FusionSystem& f = system_named("S3@3");
                   const Subgroup& s = f.underlying_group();
                   c.expect(f.orbit_hom_set(s, s).size() == 2,
                            "self-maps up to inner twist must form two classes");
                 }});

  out.push_back({"outer-classes/S4@2", [](Ctx& c) {
                   const FusionSystem& f = system_named("S4@2");
                   const Subgroup& s = f.underlying_group();
                   c.expect(f.orbit_hom_set(s, s).size() == 1,
                            "every fusion automorphism of the Sylow group must be inner");
                 }});

  auto alperin_check = [](const std::string& name) {
    return [name](Ctx& c) {
      const FusionSystem& f = system_named(name);
      for (int i = 0; i < f.num_subgroups() && c.ok; ++i) {
        for (const GroupMap& phi : f.morphisms_from(i)) {
          AlperinDecomposition d = f.alperin_decompose(phi);
          for (const auto& st : d.steps) {
            int host = f.subgroup_index(st.host);
            c.expect(f.is_fully_normalized(host), "a host is not fully normalized");
            c.expect(f.is_centric(host), "a host is not centric");
            c.expect(f.is_radical(host), "a host is not radical");
            c.expect(st.alpha.source().elems() == st.host.elems() &&
                         st.alpha.target().elems() == st.host.elems(),
                     "a step is not an automorphism of its host");
            c.expect(f.contains_morphism(st.alpha),
                     "a step is not a morphism of the fusion system");
          }
          for (int x : phi.source().elems())
            c.expect(d.apply(x) == phi.apply(x),
                     "the factorization does not recompose the morphism");
          if (!c.ok) return;
        }
      }
    };
  };
  out.push_back({"factorization/S4@2", alperin_check("S4@2")});
  out.push_back({"factorization/S3@3", alperin_check("S3@3")});

  out.push_back({"duality-accept/three-generators", [](Ctx& c) {
                   GradedMonomialAlgebra a;
                   a.characteristic = 2;
                   a.generators = {{"y7", 7}, {"y11", 11}, {"y13", 13}};
                   a.relations = {{0, 2, 0}, {0, 0, 2}, {4, 0, 0}};
                   PoincareCheck r = poincare_duality(a);
                   c.expect(r.poincare_duality, "duality must hold");
                   c.expect(r.top_degree == 45, "top degree must be 45");
                   c.expect(r.dimension == 16, "total dimension must be 16");
                   bool palindrome = true;
                   for (std::size_t d = 0; d < r.hilbert.size(); ++d)
                     if (r.hilbert[d] != r.hilbert[r.hilbert.size() - 1 - d]) palindrome = false;
                   c.expect(palindrome, "dimension counts per degree must be palindromic");
                 }});

  out.push_back({"duality-reject/two-generators", [](Ctx& c) {
                   GradedMonomialAlgebra a;
                   a.characteristic = 2;
                   a.generators = {{"x", 1}, {"y", 1}};
                   a.relations = {{2, 0}, {1, 1}, {0, 3}};
                   PoincareCheck r = poincare_duality(a);
                   c.expect(!r.poincare_duality, "duality must fail");
                   c.expect(r.socle == std::vector<std::vector<int>>({{1, 0}, {0, 2}}),
                            "socle certificate differs from the pinned value");
                   c.expect(r.failing_degrees == std::vector<int>({1}),
                            "the pairing must be singular exactly in degree one");
                 }});

  return out;
}

// ---------------------------------------------------------------------------
// oracles: independent implementations must agree

inline std::vector<Check> oracle_checks() {
  std::vector<Check> out;

  for (const auto& nf : systems()) {
    const std::string name = nf.name;

    if (nf.system.underlying_group().order() <= 16) {
      out.push_back(
          {"restriction-oracle/" + name, [name](Ctx& c) {
             const FusionSystem& f = system_named(name);
             const Subgroup& s = f.underlying_group();
             for (const BisetType& t : biset_types(f)) {
               ExplicitBiset x(s, t);
               for (int pi = 0; pi < f.num_subgroups() && c.ok; ++pi) {
                 const Subgroup& p = f.subgroup(pi);
                 for (const GroupMap& phi : f.hom_set(p, s)) {
                   c.expect(orbit_types(x, p, phi) ==
                                restrict_type_by_double_cosets(s, t, p, phi),
                            "orbit decomposition disagrees with the double-coset formula");
                   if (!c.ok) break;
                 }
               }
             }
           }});
    }

    out.push_back({"characteristic-certificate/" + name, [name](Ctx& c) {
                     const FusionSystem& f = system_named(name);
                     CharacteristicElement ce = characteristic_biset(f);
                     CharacteristicCheck chk = check_characteristic(f, ce.omega);
                     c.expect(chk.genuine, "solution must have positive multiplicities");
                     c.expect(chk.stable, "solution must be stable under restriction");
                     c.expect(chk.congruent,
                              "point count over group order must be 1 modulo the prime");
                   }});

    out.push_back({"orbit-limit-ring/" + name, [name](Ctx& c) {
                     const FusionSystem& f = system_named(name);
                     const CharacterTable& t = underlying_table(name);
                     IntMat stable = stable_ring_basis(f, t);
                     c.expect(orbit_limit_ring(f, t, OrbitFamily::centric) == stable,
                              "the centric-family limit differs from the stable lattice");
                     c.expect(orbit_limit_ring(f, t, OrbitFamily::centric_radical) == stable,
                              "the centric-radical-family limit differs from the stable "
                              "lattice");
                   }});

    out.push_back({"orbit-limit-reps/" + name, [name](Ctx& c) {
                     const FusionSystem& f = system_named(name);
                     const CharacterTable& t = underlying_table(name);
                     for (int n = 1; n <= 4 && c.ok; ++n) {
                       std::vector<IntVec> direct = fusion_reps(f, t, n);
                       OrbitLimitReps lim = orbit_limit_reps(f, t, n, OrbitFamily::centric);
                       std::vector<IntVec> from_limit;
                       for (const auto& e : lim.elements)
                         from_limit.push_back(e.s_multiplicities);
                       c.expect(direct == from_limit,
                                "limit elements of degree " + std::to_string(n) +
                                    " differ from the directly computed characters");
                     }
                   }});

    out.push_back({"stable-rank/" + name, [name](Ctx& c) {
                     const FusionSystem& f = system_named(name);
                     IntMat basis = stable_ring_basis(f, underlying_table(name));
                     c.expect(basis.size() == f.element_classes().size(),
                              "stable lattice rank differs from the element class count");
                   }});

    if (nf.system.realized_from_ambient()) {
      out.push_back({"seedless-agreement/" + name, [name](Ctx& c) {
                       const FusionSystem& f = system_named(name);
                       CharacteristicElement seeded = characteristic_biset(f, true);
                       CharacteristicElement swept = characteristic_biset(f, false);
                       c.expect(seeded.omega == swept.omega,
                                "the exhaustive sweep disagrees with the seeded search");
                     }});
    }
  }

  out.push_back({"stable-rank/C2xC2-swap", [](Ctx& c) {
                   const FusionSystem& f = swap_system().system;
                   CharacterTable t = CharacterTable::compute(f.underlying_group());
                   IntMat basis = stable_ring_basis(f, t);
                   c.expect(basis.size() == f.element_classes().size(),
                            "stable lattice rank differs from the element class count");
                 }});

  return out;
}

}  // namespace verify_detail

inline SuiteReport run_suite(const std::string& suite) {
  std::vector<verify_detail::Check> checks;
  if (suite == "core")
    checks = verify_detail::core_checks();
  else if (suite == "paper-examples")
    checks = verify_detail::paper_example_checks();
  else if (suite == "oracles")
    checks = verify_detail::oracle_checks();
  else
    throw InputError("unknown verification suite: " + suite);

  SuiteReport report;
  report.suite = suite;
  for (const auto& check : checks) {
    verify_detail::Ctx ctx;
    try {
      check.fn(ctx);
    } catch (const Error& e) {
      ctx.expect(false, std::string("exception: ") + e.what());
    } catch (const std::exception& e) {
      ctx.expect(false, std::string("unexpected exception: ") + e.what());
    }
    report.checks.push_back({check.name, ctx.ok, ctx.ok ? std::string() : ctx.detail});
    ++(ctx.ok ? report.passed : report.failed);
  }
  return report;
}

}  // namespace fuselab
