// fuselab: exact computations with fusion systems on finite p-groups.
//
// Batch front end: every command reads JSON descriptors (or a built-in
// catalog key), writes one canonical JSON document to standard output or
// --output, and exits 0 on success, 1 on a domain refusal, 2 on invalid
// input, 3 on a broken internal invariant.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "fuselab/biset.hpp"
#include "fuselab/catalog.hpp"
#include "fuselab/character.hpp"
#include "fuselab/duality.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/fusion.hpp"
#include "fuselab/json_io.hpp"
#include "fuselab/stable.hpp"
#include "fuselab/verify.hpp"

namespace {

using namespace fuselab;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  input_check(in.good(), "cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError("invalid JSON in " + what + ": " + e.what());
  }
}

struct FusionOptions {
  std::string input;    // descriptor path
  std::string catalog;  // built-in group key
  int prime = 0;
  int bound_order = kDefaultSubgroupOrderBound;
};

void add_fusion_options(CLI::App* cmd, FusionOptions& fo) {
  cmd->add_option("input", fo.input, "path to a fusion descriptor (JSON)");
  cmd->add_option("--catalog", fo.catalog,
                  "built-in group key; with -p, the fusion system the group induces on one of "
                  "its Sylow p-subgroups");
  cmd->add_option("-p,--prime", fo.prime, "the prime");
  cmd->add_option("--bound-order", fo.bound_order,
                  "refuse subgroup enumeration beyond this order");
}

FusionSystem load_fusion(const FusionOptions& fo) {
  input_check(fo.input.empty() != fo.catalog.empty(),
              "provide exactly one of a descriptor path or --catalog");
  if (!fo.catalog.empty()) {
    input_check(fo.prime > 0, "--catalog requires -p/--prime");
    return FusionSystem::from_group(catalog_group(fo.catalog), fo.prime,
                                    fo.catalog + "@" + std::to_string(fo.prime),
                                    fo.bound_order);
  }
  Json j = load_json_file(fo.input);
  if (fo.prime > 0 && j.is_object() && j.contains("p") && j.at("p").is_number_integer())
    input_check(j.at("p").get<std::int64_t>() == fo.prime,
                "-p disagrees with the descriptor's prime");
  return fusion_from_json(j, fo.bound_order);
}

// L1 mass of the difference between restriction along the inclusion and
// restriction along each other morphism into the underlying group, in
// canonical (subgroup, morphism) order; all zero exactly when omega is stable.
Json restriction_residuals(const FusionSystem& f, const FormalBiset& omega) {
  const Subgroup& s = f.underlying_group();
  Json out = Json::array();
  for (int pi = 0; pi < f.num_subgroups(); ++pi) {
    const Subgroup& p = f.subgroup(pi);
    GroupMap incl = GroupMap::inclusion(p, s);
    FormalBiset base = restrict_biset(s, omega, p, incl);
    for (const GroupMap& phi : f.hom_set(p, s)) {
      if (phi.images() == incl.images()) continue;
      FormalBiset diff = restrict_biset(s, omega, p, phi);
      for (const auto& [t, m] : base.terms) diff.add(t, -m);
      std::int64_t l1 = 0;
      for (const auto& [t, m] : diff.terms) l1 = checked::add(l1, m < 0 ? -m : m);
      out.push_back(l1);
    }
  }
  return out;
}

IntVec multiplicities_from_json(const Json& j, int expected_len) {
  input_check(j.is_array(), "a multiplicity vector must be a JSON array");
  input_check(static_cast<int>(j.size()) == expected_len,
              "multiplicity vector length must match the number of irreducible characters (" +
                  std::to_string(expected_len) + ")");
  IntVec v;
  for (const auto& e : j) v.push_back(detail::json_int(e, "a multiplicity"));
  return v;
}

void emit(const Json& doc, const std::string& output_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  input_check(out.good(), "cannot open output file: " + output_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fuselab: exact fusion systems, character lattices, bisets, and duality checks "
      "on finite p-groups"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: lets --output appear after the subcommand

  // one (document, exit code) job is selected during parsing
  std::function<std::pair<Json, int>()> job;
  std::string output;
  app.add_option("-o,--output", output, "write the JSON document to this file instead of stdout")
      ->configurable(false);

  // catalog ------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand("catalog", "list the built-in groups");
    cmd->callback([&job] {
      job = [] {
        Json groups = Json::array();
        for (const std::string& key : catalog_keys()) {
          GroupPtr g = catalog_group(key);
          Json gj = Json::object();
          gj["degree"] = g->degree();
          gj["key"] = key;
          gj["order"] = g->order();
          groups.push_back(std::move(gj));
        }
        Json doc = Json::object();
        doc["groups"] = std::move(groups);
        return std::make_pair(doc, 0);
      };
    });
  }

  // saturation ---------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand("saturation", "check the saturation axioms");
    static FusionOptions fo;
    add_fusion_options(cmd, fo);
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        return std::make_pair(saturation_json(f.check_saturation()), 0);
      };
    });
  }

  // centrics -----------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "centrics", "list the centric and the centric radical subgroups");
    static FusionOptions fo;
    add_fusion_options(cmd, fo);
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        Json cent = Json::array(), rad = Json::array();
        for (int i : f.centric_indices()) cent.push_back(f.subgroup(i).elems());
        for (int i : f.centric_radical_indices()) rad.push_back(f.subgroup(i).elems());
        Json doc = Json::object();
        doc["centric"] = std::move(cent);
        doc["centric_radical"] = std::move(rad);
        return std::make_pair(doc, 0);
      };
    });
  }

  // alperin ------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "alperin", "factor a morphism through automorphisms of centric radical subgroups");
    static FusionOptions fo;
    static std::string map_path;
    add_fusion_options(cmd, fo);
    cmd->add_option("--map", map_path, "path to a morphism descriptor (JSON)")->required();
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        GroupMap phi =
            morphism_from_json(f.underlying_group().parent(), load_json_file(map_path));
        return std::make_pair(alperin_json(f.alperin_decompose(phi)), 0);
      };
    });
  }

  // fus-classes --------------------------------------------------------------
  {
    CLI::App* cmd =
        app.add_subcommand("fus-classes", "list the element classes under fusion");
    static FusionOptions fo;
    add_fusion_options(cmd, fo);
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        Json doc = Json::object();
        doc["classes"] = f.element_classes();
        return std::make_pair(doc, 0);
      };
    });
  }

  // repring ------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "repring", "basis of the lattice of fusion-preserving virtual characters");
    static FusionOptions fo;
    add_fusion_options(cmd, fo);
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        CharacterTable t = CharacterTable::compute(f.underlying_group(), fo.bound_order);
        IntMat basis = stable_ring_basis(f, t);
        Json doc = Json::object();
        doc["basis"] = basis;
        doc["fingerprint"] = table_fingerprint(t);
        doc["rank"] = basis.size();
        return std::make_pair(doc, 0);
      };
    });
  }

  // fus-reps -----------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "fus-reps", "all fusion-preserving characters of a fixed degree");
    static FusionOptions fo;
    static std::int64_t degree = -1;
    static std::int64_t bound_degree = -1;
    add_fusion_options(cmd, fo);
    cmd->add_option("-n,--degree", degree, "character degree to enumerate")->required();
    cmd->add_option("--bound-degree", bound_degree,
                    "refuse enumeration beyond this degree (default: four times the group "
                    "order)");
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        CharacterTable t = CharacterTable::compute(f.underlying_group(), fo.bound_order);
        std::vector<IntVec> reps = fusion_reps(f, t, degree, bound_degree);
        Json doc = Json::object();
        doc["degree"] = degree;
        doc["fingerprint"] = table_fingerprint(t);
        doc["reps"] = reps;
        return std::make_pair(doc, 0);
      };
    });
  }

  // biset --------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "biset", "smallest characteristic element of a saturated fusion system");
    static FusionOptions fo;
    static bool seedless = false;
    add_fusion_options(cmd, fo);
    cmd->add_flag("--seedless", seedless,
                  "skip the ambient-group starting candidate and rely on the deterministic "
                  "exhaustive sweep alone");
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        CharacteristicElement ce = characteristic_biset(f, !seedless);
        CharacteristicCheck chk = check_characteristic(f, ce.omega);
        Json cert = Json::object();
        cert["congruent"] = chk.congruent;
        cert["genuine"] = chk.genuine;
        cert["ratio"] = chk.ratio;
        cert["residuals"] = restriction_residuals(f, ce.omega);
        cert["size"] = ce.size;
        cert["stable"] = chk.stable;
        Json doc = Json::object();
        doc["certificate"] = std::move(cert);
        doc["omega"] = formal_biset_json(ce.omega);
        doc["ratio"] = ce.ratio;
        doc["size"] = ce.size;
        return std::make_pair(doc, 0);
      };
    });
  }

  // induce -------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "induce", "induce a character along a characteristic element");
    static FusionOptions fo;
    static std::string rho_text;
    static std::string omega_path;
    static bool seedless = false;
    static bool accept_virtual = false;
    add_fusion_options(cmd, fo);
    cmd->add_option("--rho", rho_text,
                    "multiplicity vector of the character to induce, as a JSON array against "
                    "the canonical irreducible order")
        ->required();
    cmd->add_option("--omega", omega_path,
                    "path to a formal biset (JSON); computed when omitted");
    cmd->add_flag("--seedless", seedless,
                  "skip the ambient-group starting candidate when computing omega");
    cmd->add_flag("--accept-virtual", accept_virtual,
                  "allow a virtual character as input");
    cmd->callback([&job] {
      job = [] {
        FusionSystem f = load_fusion(fo);
        CharacterTable t = CharacterTable::compute(f.underlying_group(), fo.bound_order);
        IntVec rho = multiplicities_from_json(
            parse_json_text(rho_text, "--rho"), t.num_irreducibles());
        FormalBiset omega =
            omega_path.empty()
                ? characteristic_biset(f, !seedless).omega
                : formal_biset_from_json(f.underlying_group(), load_json_file(omega_path));
        InduceResult r = induce_fusion(f, t, rho, omega, accept_virtual);
        Json doc = Json::object();
        doc["degree"] = r.character.degree().as_integer();
        doc["fingerprint"] = table_fingerprint(t);
        doc["multiplicities"] = r.multiplicities;
        doc["ratio"] = r.ratio;
        return std::make_pair(doc, 0);
      };
    });
  }

  // pd-check -----------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand(
        "pd-check", "decide Poincare duality for a graded monomial algebra");
    static std::string input;
    static std::int64_t bound_dim = kDefaultAlgebraDimBound;
    cmd->add_option("input", input, "path to an algebra descriptor (JSON)")->required();
    cmd->add_option("--bound-dim", bound_dim,
                    "refuse algebras whose monomial basis exceeds this size");
    cmd->callback([&job] {
      job = [] {
        GradedMonomialAlgebra a = algebra_from_json(load_json_file(input));
        return std::make_pair(poincare_json(poincare_duality(a, bound_dim)), 0);
      };
    });
  }

  // verify -------------------------------------------------------------------
  {
    CLI::App* cmd = app.add_subcommand("verify", "run a bundled verification suite");
    static std::string suite;
    cmd->add_option("suite", suite, "one of: core, paper-examples, oracles")->required();
    cmd->callback([&job] {
      job = [] {
        SuiteReport r = run_suite(suite);
        Json checks = Json::array();
        for (const CheckResult& c : r.checks) {
          Json cj = Json::object();
          if (!c.detail.empty()) cj["detail"] = c.detail;
          cj["name"] = c.name;
          cj["pass"] = c.pass;
          checks.push_back(std::move(cj));
        }
        Json doc = Json::object();
        doc["checks"] = std::move(checks);
        doc["failed"] = r.failed;
        doc["passed"] = r.passed;
        doc["suite"] = r.suite;
        return std::make_pair(doc, r.all_pass() ? 0 : 1);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err = Json::object();
    err["error"] = Json::object();
    err["error"]["message"] = std::string(e.what());
    err["error"]["type"] = "input";
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  std::string type;
  std::string message;
  try {
    auto [doc, code] = job();
    emit(doc, output);
    return code;
  } catch (const RefusalError& e) {
    type = "refusal";
    message = e.what();
  } catch (const InputError& e) {
    type = "input";
    message = e.what();
  } catch (const InternalError& e) {
    type = "internal";
    message = e.what();
  } catch (const std::exception& e) {
    type = "internal";
    message = e.what();
  }
  Json err = Json::object();
  err["error"] = Json::object();
  err["error"]["message"] = message;
  err["error"]["type"] = type;
  std::cout << err.dump(2) << "\n";
  return type == "refusal" ? 1 : type == "input" ? 2 : 3;
}
