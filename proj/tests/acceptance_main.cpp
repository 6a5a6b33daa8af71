// Acceptance gate: every shipped guarantee of the library and CLI, one line
// of output per criterion. Usage: acceptance <path-to-cli-binary>.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuselab/biset.hpp"
#include "fuselab/catalog.hpp"
#include "fuselab/character.hpp"
#include "fuselab/duality.hpp"
#include "fuselab/fusion.hpp"
#include "fuselab/stable.hpp"

using namespace fuselab;

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

const std::vector<NamedFusion>& catalog() {
  static std::vector<NamedFusion> all = catalog_fusion_systems();
  return all;
}

const FusionSystem& named(const std::string& name) {
  for (const auto& nf : catalog())
    if (nf.name == name) return nf.system;
  throw std::runtime_error("missing catalog system " + name);
}

const CharacterTable& table_of(const FusionSystem& f) {
  static std::map<const FusionSystem*, CharacterTable> cache;
  auto it = cache.find(&f);
  if (it == cache.end())
    it = cache.emplace(&f, CharacterTable::compute(f.underlying_group())).first;
  return it->second;
}

std::uint32_t name_seed(const std::string& name) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return static_cast<std::uint32_t>(h);
}

// ---------------------------------------------------------------------------

void criterion_degree_two_classification() {
  const FusionSystem& f = named("S3@3");
  const CharacterTable& t = table_of(f);
  expect(t.num_irreducibles() == 3, "three irreducibles expected");
  expect(!is_fusion_preserving(f, t.irreducible(1)), "second irreducible must not be stable");
  expect(!is_fusion_preserving(f, t.irreducible(2)), "third irreducible must not be stable");
  // among multiplicity-free characters of degree at most two, exactly the
  // trivial character and the sum of the two nontrivial ones are stable
  for (std::int64_t a = 0; a <= 1; ++a)
    for (std::int64_t b = 0; b <= 1; ++b)
      for (std::int64_t c = 0; c <= 1; ++c) {
        if (a + b + c == 0 || a + b + c > 2) continue;
        ClassFunction chi = t.combination({a, b, c});
        bool stable = is_fusion_preserving(f, chi);
        bool should = (a == 1 && b == 0 && c == 0) || (a == 0 && b == 1 && c == 1);
        expect(stable == should, "stability classification mismatch");
      }
}

void criterion_regular_character() {
  std::vector<NamedFusion> all = catalog();
  all.push_back(swap_fusion_system());
  for (const auto& nf : all) {
    ClassFunction reg = regular_character(make_classes(nf.system.underlying_group()));
    expect(reg.degree() == Rational(nf.system.underlying_group().order()),
           nf.name + ": regular character degree");
    expect(is_fusion_preserving(nf.system, reg), nf.name + ": regular character must be stable");
  }
}

void criterion_saturation() {
  for (const auto& nf : catalog()) {
    const SaturationReport& r = nf.system.check_saturation();
    expect(r.saturated && r.failures.empty(), nf.name + " must be saturated");
  }
  NamedFusion swp = swap_fusion_system();
  const SaturationReport& r = swp.system.check_saturation();
  expect(!r.saturated, "swap system must fail");
  bool witness_at_whole = false;
  for (const auto& fail : r.failures)
    if (fail.axiom == "I" && fail.subgroup == swp.system.underlying_group().elems())
      witness_at_whole = true;
  expect(witness_at_whole, "swap system needs a first-axiom witness at the whole group");
}

void criterion_factorization() {
  for (const char* name : {"S4@2", "S3@3"}) {
    const FusionSystem& f = named(name);
    for (int i = 0; i < f.num_subgroups(); ++i) {
      for (const GroupMap& phi : f.morphisms_from(i)) {
        AlperinDecomposition d = f.alperin_decompose(phi);
        for (const auto& st : d.steps) {
          int host = f.subgroup_index(st.host);
          expect(f.is_fully_normalized(host), "host must be fully normalized");
          expect(f.is_centric(host), "host must be centric");
          expect(f.is_radical(host), "host must be radical");
          expect(st.alpha.source().elems() == st.host.elems() &&
                     st.alpha.target().elems() == st.host.elems(),
                 "each step must be an automorphism of its host");
          expect(f.contains_morphism(st.alpha), "each step must belong to the system");
        }
        for (int x : phi.source().elems())
          expect(d.apply(x) == phi.apply(x), "factorization must recompose exactly");
      }
    }
  }
}

void criterion_orbit_limits() {
  for (const auto& nf : catalog()) {
    expect(nf.system.is_saturated(), nf.name + " expected saturated");
    const CharacterTable& t = table_of(nf.system);
    IntMat basis = stable_ring_basis(nf.system, t);
    for (OrbitFamily fam : {OrbitFamily::centric, OrbitFamily::centric_radical}) {
      expect(orbit_limit_ring(nf.system, t, fam) == basis,
             nf.name + ": limit lattice must equal the stable lattice");
      for (std::int64_t n = 0; n <= 4; ++n) {
        OrbitLimitReps lim = orbit_limit_reps(nf.system, t, n, fam);
        std::vector<IntVec> via;
        via.reserve(lim.elements.size());
        for (const auto& e : lim.elements) via.push_back(e.s_multiplicities);
        expect(via == fusion_reps(nf.system, t, n),
               nf.name + ": degree-" + std::to_string(n) + " limit elements must match");
      }
    }
  }
}

void criterion_stable_rank() {
  for (const auto& nf : catalog()) {
    const CharacterTable& t = table_of(nf.system);
    IntMat basis = stable_ring_basis(nf.system, t);
    expect(basis.size() == nf.system.element_classes().size(),
           nf.name + ": rank must equal the number of fused element classes");
  }
  expect(stable_ring_basis(named("S3@3"), table_of(named("S3@3"))).size() == 2,
         "three-point system must have rank two");
}

void criterion_characteristic_elements() {
  // pinned answer on the three-point system: identity and inversion, twice each
  const FusionSystem& s3 = named("S3@3");
  CharacteristicElement e3 = characteristic_biset(s3);
  expect(e3.multiplicities == IntVec{0, 2, 2}, "pinned multiplicities on the three-point system");
  expect(e3.ratio == 4 && e3.ratio % 3 == 1, "pinned ratio must be four");
  const Subgroup& s = s3.underlying_group();
  FormalBiset pinned;
  pinned.add(BisetType{s, GroupMap::identity(s)}, 2);
  pinned.add(BisetType{s, GroupMap::from_element_table(s, s, {0, 4, 3}, true)}, 2);
  expect(e3.omega == pinned, "pinned element on the three-point system");

  for (const auto& nf : catalog()) {
    CharacteristicElement e = characteristic_biset(nf.system);
    CharacteristicCheck c = check_characteristic(nf.system, e.omega);
    expect(c.genuine && c.stable && c.congruent, nf.name + ": element must be characteristic");
    expect(c.ratio % nf.system.prime() == 1, nf.name + ": ratio congruence");

    // set-level oracle: explicit orbit decomposition of every realized type
    // against the double-coset formula, for every restriction of the system
    if (nf.system.underlying_group().order() <= 16) {
      const Subgroup& sg = nf.system.underlying_group();
      for (const BisetType& t : biset_types(nf.system)) {
        ExplicitBiset x(sg, t);
        for (int pi = 0; pi < nf.system.num_subgroups(); ++pi) {
          const Subgroup& q = nf.system.subgroup(pi);
          for (const GroupMap& lam : nf.system.hom_set(q, sg))
            expect(orbit_types(x, q, lam) == restrict_type_by_double_cosets(sg, t, q, lam),
                   nf.name + ": restriction identity must hold on the nose");
        }
      }
    }
  }
}

void criterion_induction() {
  for (const auto& nf : catalog()) {
    const CharacterTable& t = table_of(nf.system);
    FormalBiset omega = characteristic_biset(nf.system).omega;
    for (int i = 0; i < t.num_irreducibles(); ++i) {
      IntVec rho(t.num_irreducibles(), 0);
      rho[i] = 1;
      InduceResult res = induce_fusion(nf.system, t, rho, omega);
      expect(is_fusion_preserving(nf.system, res.character),
             nf.name + ": induced character must be stable");
      for (int j = 0; j < t.num_irreducibles(); ++j)
        expect(res.multiplicities[j] >= rho[j], nf.name + ": induction must dominate the input");
    }
  }
  const FusionSystem& s3 = named("S3@3");
  InduceResult res = induce_fusion(s3, table_of(s3), {0, 1, 0}, characteristic_biset(s3).omega);
  expect(res.multiplicities == IntVec{0, 2, 2}, "pinned induction on the three-point system");
  expect(res.character.degree() == Rational(4), "pinned induced degree must be four");
}

void criterion_character_theory() {
  for (const auto& nf : catalog()) {
    const FusionSystem& f = nf.system;
    const Subgroup& s = f.underlying_group();
    const CharacterTable& t = table_of(f);
    const ConjClasses& cls = *t.classes();
    int k = t.num_irreducibles();
    expect(k == cls.num_classes(), nf.name + ": table must be square");

    // row orthogonality and degree sum
    std::int64_t degree_square_sum = 0;
    for (int i = 0; i < k; ++i) {
      std::int64_t d = t.irreducible(i).degree().as_integer();
      degree_square_sum = checked::add(degree_square_sum, checked::mul(d, d));
      for (int j = 0; j < k; ++j)
        expect(inner_product(t.irreducible(i), t.irreducible(j)) == Rational(i == j ? 1 : 0),
               nf.name + ": row orthogonality");
    }
    expect(degree_square_sum == s.order(), nf.name + ": degrees must sum to the group order");

    // column orthogonality
    const Group& amb = *s.parent();
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        Cyclotomic acc = Cyclotomic::zero();
        for (int i = 0; i < k; ++i)
          acc += t.irreducible(i).value_at_element(cls.rep(a)) *
                 t.irreducible(i).value_at_element(amb.inv(cls.rep(b)));
        Rational want = a == b ? Rational(s.order()) * Rational(1, static_cast<std::int64_t>(
                                                                       cls.class_members(a).size()))
                               : Rational(0);
        expect(acc.is_rational() && acc.as_rational() == want,
               nf.name + ": column orthogonality");
      }

    // adjointness of induction and restriction on randomly drawn triples
    std::vector<Subgroup> subs = all_subgroups(s);
    std::map<std::vector<int>, CharacterTable> sub_tables;
    std::mt19937 rng(name_seed(nf.name));
    ClassesPtr scl = t.classes();
    for (int trial = 0; trial < 100; ++trial) {
      const Subgroup& p = subs[rng() % subs.size()];
      auto it = sub_tables.find(p.elems());
      if (it == sub_tables.end())
        it = sub_tables.emplace(p.elems(), CharacterTable::compute(p)).first;
      const CharacterTable& pt = it->second;
      const ClassFunction& chi = t.irreducible(static_cast<int>(rng() % k));
      const ClassFunction& psi =
          pt.irreducible(static_cast<int>(rng() % pt.num_irreducibles()));
      expect(inner_product(induce(psi, scl), chi) ==
                 inner_product(psi, restrict_to(chi, pt.classes())),
             nf.name + ": induced and restricted pairings must agree");
    }
  }
}

void criterion_duality() {
  GradedMonomialAlgebra good;
  good.characteristic = 2;
  good.generators = {{"y7", 7}, {"y11", 11}, {"y13", 13}};
  good.relations = {{0, 2, 0}, {0, 0, 2}, {4, 0, 0}};
  PoincareCheck ok = poincare_duality(good);
  expect(ok.poincare_duality, "three-generator quotient must satisfy duality");
  expect(ok.top_degree == 45, "top degree must be forty-five");
  std::vector<std::int64_t> reversed(ok.hilbert.rbegin(), ok.hilbert.rend());
  expect(ok.hilbert == reversed, "dimension series must be palindromic");

  GradedMonomialAlgebra bad;
  bad.characteristic = 2;
  bad.generators = {{"x", 1}, {"y", 1}};
  bad.relations = {{2, 0}, {1, 1}, {0, 3}};
  PoincareCheck no = poincare_duality(bad);
  expect(!no.poincare_duality, "two-generator counterexample must be rejected");
  expect(no.socle == std::vector<std::vector<int>>{{1, 0}, {0, 2}},
         "rejection must carry the socle certificate");
  expect(no.failing_degrees == std::vector<int>{1}, "failing degree must be reported");
}

// criterion 11 plumbing: run the CLI verify suites twice and compare bytes
std::string g_cli_path;

std::vector<std::string> verify_suite_names() { return {"core", "paper-examples", "oracles"}; }

std::string run_verify_once(const std::string& suite, int run, bool& ok) {
  std::string path = "acceptance_cli_" + suite + "_" + std::to_string(run) + ".out";
  std::string cmd = "\"" + g_cli_path + "\" verify " + suite + " > " + path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  ok = rc == 0;
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(path.c_str());
  return buf.str();
}

void criterion_determinism() {
  expect(!g_cli_path.empty(), "path to the command-line binary is required");
  for (const std::string& suite : verify_suite_names()) {
    bool ok1 = false, ok2 = false;
    std::string first = run_verify_once(suite, 1, ok1);
    std::string second = run_verify_once(suite, 2, ok2);
    expect(ok1 && ok2, suite + ": both runs must succeed");
    expect(!first.empty(), suite + ": report must not be empty");
    expect(first == second, suite + ": consecutive reports must be byte-identical");
  }
}

struct Criterion {
  const char* label;
  double budget_seconds;  // zero when the guarantee is exact with no time bound
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2) g_cli_path = argv[1];

  std::vector<Criterion> criteria = {
      {"degree-two stable classification on the three-point system", 1.0,
       criterion_degree_two_classification},
      {"regular character is stable for every catalog system", 30.0, criterion_regular_character},
      {"saturation holds on the catalog and fails on the swap system with a witness", 60.0,
       criterion_saturation},
      {"every morphism factors through fully normalized centric radical hosts", 60.0,
       criterion_factorization},
      {"orbit limits over both families recover the stable lattice and its elements", 300.0,
       criterion_orbit_limits},
      {"stable rank equals the number of fused element classes", 0.0, criterion_stable_rank},
      {"characteristic elements: pinned answer, stability, congruence, restriction oracle", 600.0,
       criterion_characteristic_elements},
      {"induction along the characteristic element is stable and dominating", 0.0,
       criterion_induction},
      {"orthogonality, degree sums, and adjointness on random triples", 0.0,
       criterion_character_theory},
      {"duality verdicts with certificates on both reference algebras", 1.0, criterion_duality},
      {"verify suites are deterministic across consecutive runs", 0.0, criterion_determinism},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::string reason;
    bool ok = true;
    try {
      c.run();
    } catch (const std::exception& e) {
      ok = false;
      reason = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.budget_seconds > 0 && secs >= c.budget_seconds) {
      ok = false;
      reason = "exceeded the time budget";
    }
    if (ok) ++passed;
    std::printf("criterion %2zu %s %8.3fs", i + 1, ok ? "PASS" : "FAIL", secs);
    if (c.budget_seconds > 0)
      std::printf(" (budget %gs)", c.budget_seconds);
    std::printf("  %s", c.label);
    if (!ok) std::printf(" -- %s", reason.c_str());
    std::printf("\n");
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
