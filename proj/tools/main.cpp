// Command-line front end: construction, duality, equation checking, variety
// decisions, packaged scenario suites and DOT/JSON emission.
//
// Exit status: 0 = computation succeeded and the verdict is true / all
// checks pass; 1 = computation succeeded, verdict false (the report carries
// a witness); 2 = input or usage error; 3 = a resource cap was exceeded.
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "esakia/constructions.hpp"
#include "esakia/duality.hpp"
#include "esakia/io.hpp"
#include "esakia/terms.hpp"
#include "esakia/variety.hpp"
#include "scenarios.hpp"

using namespace esakia;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

json poset_json(const FinitePoset& p) { return json::parse(poset_to_json(p)); }
json algebra_json(const HeytingAlgebra& a) { return json::parse(algebra_to_json(a)); }

void emit(const json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

FinitePoset load_poset(const std::string& path) { return poset_from_json(read_file(path)); }

HeytingAlgebra load_algebra(const std::string& path) {
  HeytingAlgebra a = algebra_from_json(read_file(path));
  if (auto v = verify_heyting(a); !v.ok)
    throw validation_error("algebra in " + path + " fails the axioms: " + v.str());
  return a;
}

VarietyPresentation load_variety(const std::vector<std::string>& gen_paths) {
  std::vector<HeytingAlgebra> gens;
  for (const auto& path : gen_paths) gens.push_back(load_algebra(path));
  return VarietyPresentation{std::move(gens)};
}

struct MakeResult {
  std::optional<FinitePoset> poset;
  std::optional<HeytingAlgebra> algebra;
  std::optional<Partition> partition;

  const FinitePoset& space() const {
    if (poset) return *poset;
    throw validation_error("this object is an algebra; no poset to draw");
  }
};

MakeResult make_object(const std::string& name, int k, int n, int copies, bool with_top,
                       const std::string& element, bool want_partition) {
  MakeResult r;
  if (name == "bool2") {
    r.algebra = bool2();
  } else if (name == "chain") {
    r.algebra = chain_algebra(k);
  } else if (name == "diamond") {
    r.algebra = diamond();
  } else if (name == "d2-space") {
    r.poset = d2_space();
  } else if (name == "xn-space") {
    r.poset = x_n_space(n);
  } else if (name == "xn-tower") {
    LabeledTower t = x_n_tower(n, copies, with_top);
    if (want_partition) r.partition = r_n_partition(t);
    r.poset = std::move(t.poset);
  } else if (name == "d2-tower") {
    LabeledTower t = d2_tower(copies, with_top);
    if (want_partition) r.partition = d2_partition(t);
    r.poset = std::move(t.poset);
  } else if (name == "rn-downset") {
    r.algebra = rn_downset(RNElement::parse(element));
  } else if (name == "bn") {
    r.algebra = b_n_family(n);
  } else if (name == "algebra-d") {
    r.algebra = algebra_d();
  } else {
    throw validation_error("unknown object '" + name +
                           "' (try: bool2, chain, diamond, d2-space, xn-space, xn-tower, "
                           "d2-tower, rn-downset, bn, algebra-d)");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Heyting algebras, Esakia duality and epimorphism surjectivity"};
  app.require_subcommand(1);

  std::string out_path, dot_path, partition_out;
  std::uint64_t seed = 1;
  int threads = 1;
  app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for equation scans")
      ->capture_default_str();

  auto* make = app.add_subcommand("make", "construct a named algebra or space");
  std::string make_name, make_element = "a1";
  int make_k = 3, make_n = 2, make_copies = 2;
  bool make_top = false;
  make->add_option("name", make_name, "object name")->required();
  make->add_option("--k", make_k, "chain length");
  make->add_option("--n", make_n, "branching/family parameter");
  make->add_option("--copies", make_copies, "tower copies");
  make->add_flag("--top", make_top, "cap the tower with a fresh top");
  make->add_option("--element", make_element, "downset top, e.g. a3 or w2");
  make->add_option("--out", out_path, "write the JSON here instead of stdout");
  make->add_option("--dot", dot_path, "also write a DOT drawing (posets only)");
  make->add_option("--partition-out", partition_out,
                   "write the tower's pairing partition as JSON");

  auto* dualize = app.add_subcommand("dualize", "cross the duality in either direction");
  std::string dz_alg, dz_poset;
  dualize->add_option("--alg", dz_alg, "algebra JSON file");
  dualize->add_option("--poset", dz_poset, "poset JSON file");
  dualize->add_option("--out", out_path, "output file");

  auto* check_eq = app.add_subcommand("check-eq", "decide an equation in a finite algebra");
  std::string ce_alg, ce_eq;
  check_eq->add_option("--alg", ce_alg, "algebra JSON file")->required();
  check_eq->add_option("--eq", ce_eq, "equation, e.g. \"(x0->x1)|(x1->x0) = 1\"")->required();
  check_eq->add_option("--out", out_path, "output file");

  auto* measures = app.add_subcommand("measures", "depth, width, incomparability degree");
  std::string ms_poset, ms_alg;
  measures->add_option("--poset", ms_poset, "poset JSON file");
  measures->add_option("--alg", ms_alg, "algebra JSON file (measured on its dual)");
  measures->add_option("--out", out_path, "output file");

  auto* subs_cmd = app.add_subcommand("subalgebras", "list all subalgebra universes");
  std::string sa_alg;
  subs_cmd->add_option("--alg", sa_alg, "algebra JSON file")->required();
  subs_cmd->add_option("--out", out_path, "output file");

  auto* congs = app.add_subcommand("congruences", "list congruences through dual upsets");
  std::string cg_alg;
  congs->add_option("--alg", cg_alg, "algebra JSON file")->required();
  congs->add_option("--out", out_path, "output file");

  auto* variety = app.add_subcommand("variety", "decisions about finitely generated varieties");
  variety->require_subcommand(1);
  std::vector<std::string> gen_paths;
  std::string vt_alg, vt_members;
  int max_n = 3;
  auto* ves = variety->add_subcommand("es", "decide epimorphism surjectivity");
  ves->add_option("--gens", gen_paths, "generator algebra files")->required();
  ves->add_option("--out", out_path, "output file");
  auto* vmember = variety->add_subcommand("member", "finite membership test");
  vmember->add_option("--gens", gen_paths, "generator algebra files")->required();
  vmember->add_option("--alg", vt_alg, "candidate algebra file")->required();
  vmember->add_option("--out", out_path, "output file");
  auto* vepic = variety->add_subcommand("epic", "decide epicness of a subalgebra");
  vepic->add_option("--gens", gen_paths, "generator algebra files")->required();
  vepic->add_option("--alg", vt_alg, "ambient algebra file")->required();
  vepic->add_option("--members", vt_members, "comma-separated element indices")->required();
  vepic->add_option("--out", out_path, "output file");
  auto* vcert = variety->add_subcommand("kg-cert", "sum-exclusion certificate search");
  vcert->add_option("--gens", gen_paths, "generator algebra files")->required();
  vcert->add_option("--max-n", max_n, "largest level to try")->capture_default_str();
  vcert->add_option("--out", out_path, "output file");

  auto* scenario = app.add_subcommand("scenario", "run a packaged suite");
  std::string scenario_name;
  scenario->add_option("name", scenario_name, "scenario name or 'all'")->required();
  scenario->add_option("--out", out_path, "output file");

  auto* emit_dot = app.add_subcommand("emit-dot", "draw a poset, partition or morphism");
  std::string ed_poset, ed_partition, ed_map, ed_target;
  emit_dot->add_option("--poset", ed_poset, "poset JSON file")->required();
  emit_dot->add_option("--partition", ed_partition, "partition JSON file");
  emit_dot->add_option("--map", ed_map, "point map JSON file");
  emit_dot->add_option("--target", ed_target, "target poset for the map");
  emit_dot->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);

    if (*make) {
      MakeResult r = make_object(make_name, make_k, make_n, make_copies, make_top, make_element,
                                 !partition_out.empty() || !dot_path.empty());
      json report;
      if (r.algebra) report = algebra_json(*r.algebra);
      if (r.poset) report = poset_json(*r.poset);
      emit(report, out_path);
      if (!dot_path.empty()) {
        const Partition* part = r.partition ? &*r.partition : nullptr;
        write_file(dot_path, poset_to_dot(r.space(), part));
      }
      if (!partition_out.empty()) {
        if (!r.partition) throw validation_error("object has no associated partition");
        write_file(partition_out, partition_to_json(*r.partition) + "\n");
      }
      return kExitTrue;
    }

    if (*dualize) {
      if (dz_alg.empty() == dz_poset.empty())
        throw validation_error("pass exactly one of --alg or --poset");
      json report;
      if (!dz_alg.empty())
        report = poset_json(prime_filters(load_algebra(dz_alg)));
      else
        report = algebra_json(dual_algebra(load_poset(dz_poset)));
      emit(report, out_path);
      return kExitTrue;
    }

    if (*check_eq) {
      HeytingAlgebra a = load_algebra(ce_alg);
      Equation eq = parse_equation(ce_eq);
      ValidityVerdict v = validates(a, eq, 10'000'000, threads);
      json report{{"equation", eq.str()}, {"valid", v.valid}};
      if (!v.valid) {
        report["falsifier"] = v.falsifier;
        report["lhs_value"] = v.lhs_value;
        report["rhs_value"] = v.rhs_value;
      }
      emit(report, out_path);
      return v.valid ? kExitTrue : kExitFalse;
    }

    if (*measures) {
      if (ms_poset.empty() == ms_alg.empty())
        throw validation_error("pass exactly one of --poset or --alg");
      FinitePoset p =
          ms_poset.empty() ? prime_filters(load_algebra(ms_alg)) : load_poset(ms_poset);
      emit(json{{"points", p.size()},
                {"depth", p.depth()},
                {"width", p.width()},
                {"incomparability", p.incomparability_degree()}},
           out_path);
      return kExitTrue;
    }

    if (*subs_cmd) {
      HeytingAlgebra a = load_algebra(sa_alg);
      json list = json::array();
      for (const auto& h : enumerate_subalgebras(a))
        list.push_back(json{{"members", h.members}, {"proper", h.proper()}});
      emit(json{{"count", list.size()}, {"subalgebras", list}}, out_path);
      return kExitTrue;
    }

    if (*congs) {
      HeytingAlgebra a = load_algebra(cg_alg);
      json list = json::array();
      for (const auto& [upset, quotient] : congruences_via_upsets(a)) {
        std::vector<int> pts;
        for (int i = 0; i < kMaxPoints; ++i)
          if (test_bit(upset, i)) pts.push_back(i);
        list.push_back(json{{"dual_upset", pts}, {"quotient_size", quotient.size()}});
      }
      emit(json{{"count", list.size()}, {"congruences", list}}, out_path);
      return kExitTrue;
    }

    if (*ves) {
      VarietyPresentation v = load_variety(gen_paths);
      EsVerdict verdict = es_property(v);
      json log = json::array();
      for (const auto& entry : verdict.log) {
        json e{{"fsi_representative", entry.rep_index},
               {"subalgebra", entry.sub_members},
               {"epic", entry.verdict.epic}};
        if (entry.verdict.witness) {
          const EpicWitness& w = *entry.verdict.witness;
          e["witness"] = json{{"space", poset_json(w.space)},
                              {"g", json{{"map", w.g}}},
                              {"h", json{{"map", w.h}}},
                              {"differs_at", w.differs_at}};
        }
        log.push_back(std::move(e));
      }
      json reps = json::array();
      for (const auto& r : v.fsi_representatives()) reps.push_back(poset_json(r));
      emit(json{{"es", verdict.es}, {"fsi_representatives", reps}, {"log", log}}, out_path);
      return verdict.es ? kExitTrue : kExitFalse;
    }

    if (*vmember) {
      VarietyPresentation v = load_variety(gen_paths);
      HeytingAlgebra b = load_algebra(vt_alg);
      MembershipVerdict mv = contains(v, b);
      json report{{"member", mv.member}, {"point_match", mv.point_match}};
      if (!mv.member) report["failing_point"] = mv.failing_point;
      emit(report, out_path);
      return mv.member ? kExitTrue : kExitFalse;
    }

    if (*vepic) {
      VarietyPresentation v = load_variety(gen_paths);
      HeytingAlgebra b = load_algebra(vt_alg);
      std::vector<int> members;
      std::string token;
      std::istringstream ss(vt_members);
      while (std::getline(ss, token, ',')) members.push_back(std::stoi(token));
      std::sort(members.begin(), members.end());
      if (!is_subuniverse(b, members))
        throw validation_error("the listed elements are not a subalgebra");
      SubalgebraHandle sub{&b, members};
      EpicVerdict verdict = is_epic(b, sub, v);
      json report{{"epic", verdict.epic}};
      if (verdict.witness) {
        const EpicWitness& w = *verdict.witness;
        report["witness"] = json{{"space", poset_json(w.space)},
                                 {"g", json{{"map", w.g}}},
                                 {"h", json{{"map", w.h}}},
                                 {"differs_at", w.differs_at}};
      }
      emit(report, out_path);
      return verdict.epic ? kExitTrue : kExitFalse;
    }

    if (*vcert) {
      VarietyPresentation v = load_variety(gen_paths);
      KgCertificate cert = kg_es_certificate(v, max_n);
      json table = json::array();
      for (const auto& level : cert.table) {
        json members = json::array();
        for (bool m : level.member) members.push_back(m);
        table.push_back(
            json{{"level", level.level}, {"member", members}, {"excluded", level.excluded}});
      }
      json report{{"certificate", cert.level.has_value()}, {"table", table}};
      if (cert.level) report["level"] = *cert.level;
      emit(report, out_path);
      return cert.level ? kExitTrue : kExitFalse;
    }

    if (*scenario) {
      std::vector<std::string> to_run;
      if (scenario_name == "all")
        to_run = cli::scenario_names();
      else
        to_run.push_back(scenario_name);
      json reports = json::array();
      bool all_pass = true;
      for (const auto& name : to_run) {
        cli::ScenarioReport rep = cli::run_scenario(name, seed);
        json checks = json::array();
        for (const auto& c : rep.checks) {
          json jc{{"name", c.name}, {"pass", c.pass}};
          if (!c.note.empty()) jc["note"] = c.note;
          checks.push_back(std::move(jc));
        }
        reports.push_back(json{{"scenario", rep.name}, {"pass", rep.pass()}, {"checks", checks}});
        all_pass &= rep.pass();
      }
      emit(json{{"pass", all_pass}, {"scenarios", reports}}, out_path);
      return all_pass ? kExitTrue : kExitFalse;
    }

    if (*emit_dot) {
      FinitePoset p = load_poset(ed_poset);
      std::string dot;
      if (!ed_map.empty()) {
        if (ed_target.empty()) throw validation_error("--map needs --target");
        FinitePoset q = load_poset(ed_target);
        std::vector<int> f = point_map_from_json(read_file(ed_map));
        if (auto v = is_esakia_morphism(f, p, q); !v.ok)
          throw validation_error("map is not an Esakia morphism: " + v.str());
        dot = morphism_to_dot(p, q, f);
      } else if (!ed_partition.empty()) {
        Partition r = partition_from_json(read_file(ed_partition), p.size());
        dot = poset_to_dot(p, &r);
      } else {
        dot = poset_to_dot(p);
      }
      if (out_path.empty())
        std::cout << dot;
      else
        write_file(out_path, dot);
      return kExitTrue;
    }

    throw validation_error("no subcommand");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitUsage;
  } catch (const cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
