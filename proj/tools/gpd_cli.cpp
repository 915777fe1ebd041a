// gpd: command-line front end for the finite groupoid toolkit.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <gpd/catalog.hpp>
#include <gpd/io.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// path references inside a file resolve relative to that file
gpd::io::FileResolver resolver_for(std::string const &path) {
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  return [dir](std::string const &ref) { return read_file((dir / ref).string()); };
}

std::string sniff_schema(std::string const &text) {
  nlohmann::json j = nlohmann::json::parse(text);  // parse errors surface upstream
  if (j.is_object() && j.contains("schema") && j["schema"].is_string())
    return j["schema"].get<std::string>();
  if (j.contains("arrows")) return "groupoid.v1";
  if (j.contains("vertexAction")) return "action.v1";
  if (j.contains("vertices")) return "complex.v1";
  if (j.contains("total")) return "bibundle.v1";
  if (j.contains("generators")) return "presentation.v1";
  if (j.contains("f") && j.contains("N")) return "cocycle.v1";
  throw InputError("cannot determine the schema; add a \"schema\" member");
}

struct Output {
  bool json = false;
  void line(std::string const &s) const {
    if (!json) std::cout << s << "\n";
  }
  void payload(std::string const &s) const {
    if (json) std::cout << s << "\n";
  }
};

int run_validate(Output const &out, std::string const &file) {
  std::string text = read_file(file);
  std::string schema;
  try {
    schema = sniff_schema(text);
  } catch (nlohmann::json::parse_error const &) {
    // re-parse through the io layer for a line-anchored message
    gpd::io::read_groupoid(text);
    throw;
  }
  auto resolver = resolver_for(file);
  std::vector<std::string> violations;
  if (schema == "groupoid.v1") {
    auto loaded = gpd::io::read_groupoid(text);
    auto report = gpd::validate_groupoid(loaded.groupoid);
    out.payload(gpd::io::groupoid_report_json(report));
    for (auto const &v : report) violations.push_back(v.message);
  } else if (schema == "bibundle.v1") {
    auto loaded = gpd::io::read_bibundle(text, resolver);
    auto report = gpd::validate_bibundle(loaded.bundle);
    out.payload(gpd::io::bibundle_report_json(report));
    for (auto const &v : report) violations.push_back(v.message);
  } else if (schema == "cocycle.v1") {
    auto loaded = gpd::io::read_cocycle(text, resolver);
    auto report = gpd::validate_cocycle(loaded.cocycle);
    out.payload(gpd::io::cocycle_report_json(report));
    for (auto const &v : report) violations.push_back(v.message);
  } else if (schema == "complex.v1") {
    gpd::io::read_complex(text);  // loader enforces the invariants
  } else if (schema == "action.v1") {
    gpd::io::read_action(text, resolver);
  } else if (schema == "presentation.v1") {
    gpd::io::read_presentation(text);
  } else {
    throw InputError("unsupported schema " + schema);
  }
  if (violations.empty()) {
    out.line(schema + ": valid");
    return kExitPass;
  }
  out.line(schema + ": " + std::to_string(violations.size()) + " violation(s)");
  for (auto const &v : violations) out.line("  " + v);
  return kExitCheckFailed;
}

int run_orbits(Output const &out, std::string const &file) {
  auto loaded = gpd::io::read_groupoid(read_file(file));
  gpd::OrbitPartition p = gpd::orbits(loaded.groupoid);
  nlohmann::json j{{"schema", "report.v1"}, {"classes", nlohmann::json::array()}};
  for (auto const &cls : p.classes) {
    std::ostringstream os;
    nlohmann::json jc = nlohmann::json::array();
    os << "{ ";
    for (int x : cls) {
      os << loaded.object_ids[x] << " ";
      jc.push_back(loaded.object_ids[x]);
    }
    os << "}";
    out.line(os.str());
    j["classes"].push_back(jc);
  }
  out.payload(j.dump(2));
  return kExitPass;
}

int run_isotropy(Output const &out, std::string const &file, long at) {
  auto loaded = gpd::io::read_groupoid(read_file(file));
  gpd::Isotropy iso = gpd::isotropy(loaded.groupoid, loaded.object_index(at));
  out.line("isotropy at " + std::to_string(at) + " = " + gpd::group_description(iso.group) +
           " (order " + std::to_string(iso.group.order()) + ")");
  nlohmann::json j{{"schema", "report.v1"},
                   {"object", at},
                   {"order", iso.group.order()},
                   {"group", gpd::group_description(iso.group)},
                   {"arrows", nlohmann::json::array()}};
  for (int a : iso.arrows) j["arrows"].push_back(loaded.arrow_ids[a]);
  out.payload(j.dump(2));
  return kExitPass;
}

int run_pi1(Output const &out, std::string const &file, bool nerve, bool borel,
            std::string const &action_file, long base, bool base_set, long at, bool at_set) {
  if (borel) {
    if (action_file.empty()) throw InputError("--borel needs --action <file>");
    std::string complex_text = read_file(file);
    auto action =
        gpd::io::read_action(read_file(action_file), resolver_for(action_file), complex_text);
    int x0 = base_set ? action.complex.vertex_index(base) : 0;
    gpd::BorelModel model = gpd::borel_pi1(action.action, x0);
    gpd::Abelianization ab = gpd::abelianization(model.presentation);
    out.line("pi1 presentation: " + std::to_string(model.presentation.generators()) +
             " generators, " + std::to_string(model.presentation.relators().size()) +
             " relators");
    out.line("abelianization = " + ab.to_string());
    gpd::IsoReport iso = gpd::probably_isomorphic(model.presentation, model.group_presentation);
    if (iso.verdict == gpd::IsoVerdict::YesCertified)
      out.line("identified with the acting group: " + iso.detail);
    nlohmann::json j = nlohmann::json::parse(gpd::io::write_presentation(model.presentation));
    j["abelianization"] = ab.to_string();
    out.payload(j.dump(2));
    return kExitPass;
  }
  auto loaded = gpd::io::read_groupoid(read_file(file));
  int a0 = at_set ? loaded.object_index(at) : 0;
  if (nerve) {
    gpd::GroupPresentation pres = gpd::pi1_nerve(loaded.groupoid, a0);
    gpd::Abelianization ab = gpd::abelianization(pres);
    out.line("pi1 (nerve) presentation: " + std::to_string(pres.generators()) +
             " generators, " + std::to_string(pres.relators().size()) + " relators");
    out.line("abelianization = " + ab.to_string());
    nlohmann::json j = nlohmann::json::parse(gpd::io::write_presentation(pres));
    j["abelianization"] = ab.to_string();
    out.payload(j.dump(2));
    return kExitPass;
  }
  gpd::Isotropy iso = gpd::pi1_finite(loaded.groupoid, a0);
  out.line("pi1 = " + gpd::group_description(iso.group) + " (order " +
           std::to_string(iso.group.order()) + ")");
  out.payload(nlohmann::json{{"schema", "report.v1"},
                             {"pi1", gpd::group_description(iso.group)},
                             {"order", iso.group.order()}}
                  .dump(2));
  return kExitPass;
}

int run_morita(Output const &out, std::string const &file_a, std::string const &file_b) {
  auto a = gpd::io::read_groupoid(read_file(file_a));
  auto b = gpd::io::read_groupoid(read_file(file_b));
  gpd::MoritaDecision d =
      gpd::morita_equivalent(gpd::make_groupoid(a.groupoid), gpd::make_groupoid(b.groupoid));
  out.line(d.equivalent ? "equivalent" : "not equivalent");
  out.line("  " + d.reason);
  if (d.witness)
    out.line("  witness: biprincipal bundle with " + std::to_string(d.witness->total()) +
             " points");
  out.payload(gpd::io::morita_json(d));
  return d.equivalent ? kExitPass : kExitCheckFailed;
}

int run_tensor(Output const &out, std::string const &file_q, std::string const &file_p) {
  auto q = gpd::io::read_bibundle(read_file(file_q), resolver_for(file_q));
  auto p = gpd::io::read_bibundle(read_file(file_p), resolver_for(file_p));
  gpd::Bibundle t = gpd::tensor(q.bundle, p.bundle);
  std::cout << gpd::io::write_bibundle(t) << "\n";
  return kExitPass;
}

int run_eff(Output const &out, std::string const &action_file,
            std::string const &complex_file) {
  std::optional<std::string> complex_text;
  if (!complex_file.empty()) complex_text = read_file(complex_file);
  auto action =
      gpd::io::read_action(read_file(action_file), resolver_for(action_file), complex_text);
  gpd::EffResult eff = gpd::eff_translation(action.action);
  if (!eff.uniform) {
    out.line("non-uniform ineffectivity at vertex " +
             std::to_string(action.complex.vertex_ids[eff.non_uniform_vertex]) +
             "; effect groupoid not computed");
    out.payload(nlohmann::json{{"schema", "report.v1"},
                               {"pass", false},
                               {"uniform", false},
                               {"vertex", action.complex.vertex_ids[eff.non_uniform_vertex]}}
                    .dump(2));
    return kExitCheckFailed;
  }
  out.line("ineffective kernel = " + gpd::group_description(eff.kernel) + " (order " +
           std::to_string(eff.kernel.order()) + ")");
  out.line("effect acts through " + gpd::group_description(eff.quotient_action.group));
  nlohmann::json j{{"schema", "report.v1"},
                   {"pass", true},
                   {"uniform", true},
                   {"kernelOrder", eff.kernel.order()},
                   {"kernel", gpd::group_description(eff.kernel)},
                   {"quotientGroup", gpd::group_description(eff.quotient_action.group)},
                   {"kernelElements", nlohmann::json::array()}};
  for (int e : eff.kernel_elements) j["kernelElements"].push_back(action.group.arrow_ids[e]);
  out.payload(j.dump(2));
  return kExitPass;
}

int run_lift_cocycle(Output const &out, std::string const &functor_file,
                     std::string const &cocycle_file, long seed, bool seed_set) {
  auto functor = gpd::io::read_functor(read_file(functor_file), resolver_for(functor_file));
  auto cocycle = gpd::io::read_cocycle(read_file(cocycle_file), resolver_for(cocycle_file));
  std::optional<int> seed_index;
  if (seed_set) seed_index = functor.source.object_index(seed);
  gpd::Cocycle lifted;
  try {
    lifted = gpd::lift_cocycle(functor.functor, cocycle.cocycle, seed_index);
  } catch (std::invalid_argument const &e) {
    out.line(std::string("lift failed: ") + e.what());
    out.payload(
        nlohmann::json{{"schema", "report.v1"}, {"pass", false}, {"error", e.what()}}.dump(2));
    return kExitCheckFailed;
  }
  std::cout << gpd::io::write_cocycle(lifted) << "\n";
  return kExitPass;
}

int run_check_seq(Output const &out, std::string const &which, std::string const &action_file,
                  std::string const &complex_file, long base, bool base_set) {
  std::optional<std::string> complex_text;
  if (!complex_file.empty()) complex_text = read_file(complex_file);
  auto action =
      gpd::io::read_action(read_file(action_file), resolver_for(action_file), complex_text);
  int x0 = base_set ? action.complex.vertex_index(base) : 0;
  gpd::SequenceCheck check;
  if (which == "example4")
    check = gpd::check_example4_sequence(action.action, x0);
  else if (which == "eff")
    check = gpd::check_eff_sequence(action.action, x0);
  else
    throw InputError("unknown sequence " + which + " (expected example4 or eff)");
  out.line(check.summary);
  for (auto const &item : check.items)
    out.line("  " + item.name + ": " + (item.pass ? "pass" : "FAIL") + " (" + item.detail + ")");
  out.payload(gpd::io::sequence_check_json(check));
  return check.passed() ? kExitPass : kExitCheckFailed;
}

int run_catalog_list(Output const &out) {
  nlohmann::json j = nlohmann::json::array();
  for (auto const &entry : gpd::catalog_entries()) {
    out.line(entry.name + "  -  " + entry.notes);
    j.push_back({{"name", entry.name}, {"notes", entry.notes}});
  }
  out.payload(j.dump(2));
  return kExitPass;
}

int run_catalog_run(Output const &out, std::string const &name, bool all) {
  std::vector<gpd::CatalogEntry const *> selected;
  if (all) {
    for (auto const &entry : gpd::catalog_entries()) selected.push_back(&entry);
  } else {
    gpd::CatalogEntry const *entry = gpd::find_catalog_entry(name);
    if (!entry) throw InputError("unknown catalog entry " + name);
    selected.push_back(entry);
  }
  bool all_pass = true;
  nlohmann::json j = nlohmann::json::array();
  for (auto const *entry : selected) {
    gpd::CatalogResult result = entry->run();
    all_pass = all_pass && result.pass;
    out.line("[" + std::string(result.pass ? "PASS" : "FAIL") + "] " + entry->name);
    for (auto const &line : result.lines) out.line("  " + line);
    j.push_back(nlohmann::json::parse(result.json));
    j.back()["name"] = entry->name;
  }
  out.payload(j.dump(2));
  return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"finite groupoid toolkit: Morita bibundles, cocycle lifting and "
               "homotopy-sequence checks"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "emit machine-readable report.v1 JSON");

  std::string file, file_b, action_file, complex_file, functor_file, cocycle_file, seq_which,
      catalog_name;
  long at = 0, base = 0, seed = 0;
  bool nerve = false, borel = false, run_all = false;

  auto *validate = app.add_subcommand("validate", "validate a file against its schema");
  validate->add_option("file", file)->required();

  auto *orbits_cmd = app.add_subcommand("orbits", "orbit classes of a groupoid");
  orbits_cmd->add_option("file", file)->required();

  auto *isotropy_cmd = app.add_subcommand("isotropy", "isotropy group at an object");
  isotropy_cmd->add_option("file", file)->required();
  isotropy_cmd->add_option("--at", at, "object id")->required();

  auto *pi1_cmd = app.add_subcommand("pi1", "fundamental group");
  pi1_cmd->add_option("file", file, "groupoid (default/nerve) or complex (borel)")->required();
  pi1_cmd->add_flag("--nerve", nerve, "present pi1 of the 2-truncated nerve");
  pi1_cmd->add_flag("--borel", borel, "pi1 of the homotopy quotient of an action");
  pi1_cmd->add_option("--action", action_file, "action.v1 file (with --borel)");
  auto *base_opt = pi1_cmd->add_option("--base", base, "basepoint vertex (with --borel)");
  auto *pi1_at_opt = pi1_cmd->add_option("--at", at, "basepoint object");

  auto *morita_cmd = app.add_subcommand("morita", "decide Morita equivalence");
  morita_cmd->add_option("fileA", file)->required();
  morita_cmd->add_option("fileB", file_b)->required();

  auto *tensor_cmd = app.add_subcommand("tensor", "tensor product of bibundles");
  tensor_cmd->add_option("fileQ", file)->required();
  tensor_cmd->add_option("fileP", file_b)->required();

  auto *eff_cmd = app.add_subcommand("eff", "ineffective kernel and effect of an action");
  eff_cmd->add_option("--action", action_file)->required();
  eff_cmd->add_option("--complex", complex_file, "complex.v1 file when not embedded");

  auto *lift_cmd = app.add_subcommand("lift-cocycle", "lift a cocycle along a functor");
  lift_cmd->add_option("--functor", functor_file)->required();
  lift_cmd->add_option("--cocycle", cocycle_file)->required();
  auto *seed_opt = lift_cmd->add_option("--seed", seed, "object lift of the first cell");

  auto *check_cmd = app.add_subcommand("check-seq", "verify an exact sequence");
  check_cmd->add_option("which", seq_which, "example4 or eff")->required();
  check_cmd->add_option("--action", action_file)->required();
  check_cmd->add_option("--complex", complex_file);
  auto *check_base_opt = check_cmd->add_option("--base", base, "basepoint vertex");

  auto *catalog_cmd = app.add_subcommand("catalog", "worked instance catalog");
  auto *catalog_list = catalog_cmd->add_subcommand("list", "list entries");
  auto *catalog_run = catalog_cmd->add_subcommand("run", "run entries");
  catalog_run->add_option("name", catalog_name, "entry name");
  catalog_run->add_flag("--all", run_all, "run every entry");
  catalog_cmd->require_subcommand(1);

  for (auto *sub : app.get_subcommands({})) sub->fallthrough();
  catalog_list->fallthrough();
  catalog_run->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(out, file);
    if (orbits_cmd->parsed()) return run_orbits(out, file);
    if (isotropy_cmd->parsed()) return run_isotropy(out, file, at);
    if (pi1_cmd->parsed())
      return run_pi1(out, file, nerve, borel, action_file, base, !base_opt->empty(), at,
                     !pi1_at_opt->empty());
    if (morita_cmd->parsed()) return run_morita(out, file, file_b);
    if (tensor_cmd->parsed()) return run_tensor(out, file, file_b);
    if (eff_cmd->parsed()) return run_eff(out, action_file, complex_file);
    if (lift_cmd->parsed())
      return run_lift_cocycle(out, functor_file, cocycle_file, seed, !seed_opt->empty());
    if (check_cmd->parsed())
      return run_check_seq(out, seq_which, action_file, complex_file, base,
                           !check_base_opt->empty());
    if (catalog_cmd->parsed()) {
      if (catalog_list->parsed()) return run_catalog_list(out);
      if (catalog_run->parsed()) {
        if (!run_all && catalog_name.empty())
          throw InputError("catalog run needs an entry name or --all");
        return run_catalog_run(out, catalog_name, run_all);
      }
    }
  } catch (InputError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (gpd::io::ParseError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (nlohmann::json::parse_error const &e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (std::length_error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
