// Command-line front end: validation, law checking, enumeration, orbit
// counting, gauge actions, morphism composition and rediscretization over
// the JSON document formats.
//
// Exit codes: 0 success/valid, 1 domain violations (reported), 2 usage or
// parse errors. Reports are byte-identical for identical inputs.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hgt/format.hpp"
#include "hgt/laws.hpp"
#include "hgt/moduli.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliError {
  int code;
  std::string message;
};

bool use_color() {
  if (isatty(fileno(stdout)) == 0) return false;
  const char* v = std::getenv("HG_COLOR");
  if (v == nullptr) return true;
  std::string s = v;
  return !(s == "0" || s == "off" || s == "false" || s == "no");
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string ok_text() { return paint("ok", "32"); }
std::string fail_text() { return paint("FAIL", "31"); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot read file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hgt::Document load(const std::string& path, hgt::DocKind kind) {
  hgt::ParseResult res = hgt::parse(read_input(path), kind);
  if (!res.ok()) {
    std::string msg;
    for (const hgt::Diagnostic& d : res.diagnostics) msg += path + ": " + d.to_string() + "\n";
    if (!msg.empty()) msg.pop_back();
    throw CliError{2, msg};
  }
  return std::move(*res.doc);
}

// Flag bundle shared by the report-producing subcommands.
struct ReportArgs {
  std::string cm_path;
  std::string disc_path;
  std::string conn_path;
  std::string gauge_path;
  std::string script_path;
  std::string mode = "full";
  bool json_out = false;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t max_states = 10'000'000;
};

json violations_to_json(const hgt::Report& r) {
  json out = json::array();
  for (const hgt::Violation& v : r.violations)
    out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

void print_report_text(const std::string& target, const hgt::Report& r) {
  if (r.ok()) {
    std::cout << target << ": " << ok_text() << "\n";
    return;
  }
  std::cout << target << ": " << fail_text() << " (" << r.violations.size()
            << " violation(s))\n";
  for (const hgt::Violation& v : r.violations)
    std::cout << "  " << v.axiom << ": " << v.witness << "\n";
}

int run_validate(const ReportArgs& a) {
  if (a.cm_path.empty() && a.disc_path.empty())
    throw CliError{2, "validate needs at least --cm or --disc"};
  std::optional<hgt::CrossedModule> cm;
  std::optional<hgt::Discretization> disc;
  std::vector<std::pair<std::string, hgt::Report>> reports;

  if (!a.cm_path.empty()) {
    cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
    reports.emplace_back("crossed_module", hgt::validate_crossed_module(*cm));
  }
  if (!a.disc_path.empty()) {
    disc = *load(a.disc_path, hgt::DocKind::discretization).disc;
    reports.emplace_back("discretization", hgt::validate_discretization(*disc));
  }
  if (!a.conn_path.empty()) {
    if (!cm || !disc) throw CliError{2, "--conn needs both --cm and --disc"};
    hgt::ParsedConnection raw = *load(a.conn_path, hgt::DocKind::connection).conn;
    std::vector<hgt::Diagnostic> diags;
    if (raw.has_eta) {
      auto m = hgt::bind_morphism(*disc, *cm, raw, diags);
      if (!m) {
        std::string msg;
        for (const hgt::Diagnostic& d : diags) msg += a.conn_path + ": " + d.to_string() + "\n";
        throw CliError{2, msg};
      }
      reports.emplace_back("connection", hgt::validate_morphism(*disc, *cm, *m));
    } else {
      auto x = hgt::bind_object(*disc, *cm, raw, diags);
      if (!x) {
        std::string msg;
        for (const hgt::Diagnostic& d : diags) msg += a.conn_path + ": " + d.to_string() + "\n";
        throw CliError{2, msg};
      }
      reports.emplace_back("connection", hgt::validate_object(*disc, *cm, *x));
    }
  }
  if (!a.gauge_path.empty()) {
    if (!cm || !disc) throw CliError{2, "--gauge needs both --cm and --disc"};
    hgt::ParsedGauge raw = *load(a.gauge_path, hgt::DocKind::gauge).gauge;
    std::vector<hgt::Diagnostic> diags;
    bool bound = raw.has_chi ? hgt::bind_gauge_morphism(*disc, *cm, raw, diags).has_value()
                             : hgt::bind_gauge_object(*disc, *cm, raw, diags).has_value();
    if (!bound) {
      std::string msg;
      for (const hgt::Diagnostic& d : diags) msg += a.gauge_path + ": " + d.to_string() + "\n";
      throw CliError{2, msg};
    }
    reports.emplace_back("gauge", hgt::Report{});
  }
  if (!a.script_path.empty()) {
    if (!disc) throw CliError{2, "--script needs --disc"};
    hgt::ChangeScript script = *load(a.script_path, hgt::DocKind::change_script).script;
    hgt::Report r;
    hgt::Discretization cur = *disc;
    for (const hgt::ChangeSpec& spec : script) {
      hgt::Report step = hgt::validate_change(cur, spec);
      r.merge(step);
      if (!step.ok()) break;
      cur = hgt::apply_change(cur, spec);
    }
    reports.emplace_back("script", r);
  }

  bool all_ok = true;
  for (const auto& [target, r] : reports) all_ok &= r.ok();

  if (a.json_out) {
    json out;
    out["schema"] = "report";
    out["command"] = "validate";
    out["status"] = all_ok ? "valid" : "violations";
    json targets = json::array();
    for (const auto& [target, r] : reports)
      targets.push_back({{"target", target}, {"violations", violations_to_json(r)}});
    out["targets"] = std::move(targets);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [target, r] : reports) print_report_text(target, r);
  }
  return all_ok ? 0 : 1;
}

json law_to_json(const hgt::LawResult& r) {
  return json{{"suite", r.suite},     {"law", r.law},
              {"cases", r.cases},     {"violations", r.violations},
              {"sampled", r.sampled}, {"witnesses", r.witnesses}};
}

void print_law_text(const std::string& scope, const hgt::LawResult& r) {
  std::cout << scope << " " << r.suite << ": " << r.law << ": "
            << (r.ok() ? ok_text() : fail_text()) << " (" << r.cases << " cases"
            << (r.sampled ? ", sampled" : "") << ")\n";
  for (const std::string& w : r.witnesses) std::cout << "    witness: " << w << "\n";
}

int run_laws(const ReportArgs& a) {
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::Report axioms = hgt::validate_crossed_module(cm);
  if (!axioms.ok()) {
    print_report_text("crossed_module", axioms);
    return 1;
  }

  hgt::LawOptions opt;
  opt.max_states = a.max_states;
  opt.seed = a.seed;
  opt.prefer_exhaustive = a.exhaustive;

  std::vector<std::pair<std::string, hgt::LawResult>> results;
  for (hgt::LawResult& r : hgt::check_square_laws(cm)) results.emplace_back("[-]", std::move(r));

  std::vector<std::pair<std::string, hgt::Discretization>> targets;
  if (!a.disc_path.empty()) {
    targets.emplace_back("[disc]", *load(a.disc_path, hgt::DocKind::discretization).disc);
  } else {
    for (const char* name : {"s1", "s2", "t2"})
      targets.emplace_back(std::string("[") + name + "]", hgt::build_example(name));
  }
  for (const auto& [scope, d] : targets) {
    for (hgt::LawResult& r : hgt::check_conn_laws(d, cm, opt))
      results.emplace_back(scope, std::move(r));
    for (hgt::LawResult& r : hgt::check_action_laws(d, cm, opt))
      results.emplace_back(scope, std::move(r));
    for (hgt::LawResult& r : hgt::check_double_laws(d, cm, opt))
      results.emplace_back(scope, std::move(r));
  }
  if (!a.script_path.empty()) {
    if (a.disc_path.empty()) throw CliError{2, "--script needs --disc"};
    hgt::ChangeScript script = *load(a.script_path, hgt::DocKind::change_script).script;
    hgt::Discretization cur = targets.front().second;
    for (const hgt::ChangeSpec& spec : script) {
      for (hgt::LawResult& r : hgt::check_change_laws(cur, cm, spec, opt))
        results.emplace_back(std::string("[") + hgt::change_kind_name(spec.kind) + " " +
                                 spec.cell + "]",
                             std::move(r));
      cur = hgt::apply_change(cur, spec);
    }
  }

  std::uint64_t failed = 0;
  for (const auto& [scope, r] : results)
    if (!r.ok()) ++failed;

  if (a.json_out) {
    json out;
    out["schema"] = "report";
    out["command"] = "laws";
    out["status"] = failed == 0 ? "pass" : "fail";
    json laws = json::array();
    for (const auto& [scope, r] : results) {
      json lj = law_to_json(r);
      lj["scope"] = scope;
      laws.push_back(std::move(lj));
    }
    out["laws"] = std::move(laws);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [scope, r] : results) print_law_text(scope, r);
    std::cout << "summary: " << results.size() << " laws, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int run_enumerate(const ReportArgs& a) {
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::Discretization d = *load(a.disc_path, hgt::DocKind::discretization).disc;
  hgt::ConnCounts counts = hgt::count_connections(d, cm, a.max_states);
  if (a.json_out) {
    json out;
    out["schema"] = "report";
    out["command"] = "enumerate";
    out["objects"] = counts.objects;
    out["morphisms"] = counts.morphisms;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "objects: " << counts.objects << "\n";
    std::cout << "morphisms: " << counts.morphisms << "\n";
  }
  return 0;
}

int run_orbits(const ReportArgs& a) {
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::Discretization d = *load(a.disc_path, hgt::DocKind::discretization).disc;
  hgt::EquivalenceMode mode;
  if (a.mode == "conn_morphisms")
    mode = hgt::EquivalenceMode::conn_morphisms;
  else if (a.mode == "gauge_objects")
    mode = hgt::EquivalenceMode::gauge_objects;
  else if (a.mode == "full")
    mode = hgt::EquivalenceMode::full;
  else
    throw CliError{2, "unknown mode: " + a.mode};

  hgt::OrbitResult res = hgt::count_orbits(d, cm, mode, a.max_states);
  if (a.json_out) {
    json out;
    out["schema"] = "report";
    out["command"] = "orbits";
    out["mode"] = a.mode;
    out["orbits"] = res.orbit_count;
    json reps = json::array();
    for (const hgt::ConnObject& x : res.representatives) {
      hgt::ParsedConnection pc = hgt::unparse_connection(cm, x);
      reps.push_back({{"g", pc.g}, {"h", pc.h}});
    }
    out["representatives"] = std::move(reps);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "mode: " << a.mode << "\n";
    std::cout << "orbits: " << res.orbit_count << "\n";
    for (const hgt::ConnObject& x : res.representatives) {
      hgt::ParsedConnection pc = hgt::unparse_connection(cm, x);
      std::cout << "  representative:";
      for (const auto& [id, v] : pc.g) std::cout << " g(" << id << ")=" << v;
      for (const auto& [id, v] : pc.h) std::cout << " h(" << id << ")=" << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_act(const ReportArgs& a) {
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::Discretization d = *load(a.disc_path, hgt::DocKind::discretization).disc;
  hgt::ParsedConnection conn = *load(a.conn_path, hgt::DocKind::connection).conn;
  hgt::ParsedGauge gauge = *load(a.gauge_path, hgt::DocKind::gauge).gauge;

  std::vector<hgt::Diagnostic> diags;
  auto bail = [&](const std::string& path) {
    std::string msg;
    for (const hgt::Diagnostic& dg : diags) msg += path + ": " + dg.to_string() + "\n";
    return CliError{2, msg};
  };

  if (gauge.has_chi && !conn.has_eta)
    throw CliError{1,
                   "a gauge morphism acts on a connection morphism; provide eta or drop chi"};

  if (conn.has_eta) {
    auto m = hgt::bind_morphism(d, cm, conn, diags);
    if (!m) throw bail(a.conn_path);
    hgt::GaugeMorphism gm;
    if (gauge.has_chi) {
      auto g = hgt::bind_gauge_morphism(d, cm, gauge, diags);
      if (!g) throw bail(a.gauge_path);
      gm = *g;
    } else {
      auto g = hgt::bind_gauge_object(d, cm, gauge, diags);
      if (!g) throw bail(a.gauge_path);
      gm = hgt::gauge_identity(cm, *g);
    }
    hgt::ConnMorphism acted = hgt::act_morphism(d, cm, gm, *m);
    std::cout << hgt::serialize_connection(hgt::unparse_connection(cm, acted));
  } else {
    auto x = hgt::bind_object(d, cm, conn, diags);
    if (!x) throw bail(a.conn_path);
    auto g = hgt::bind_gauge_object(d, cm, gauge, diags);
    if (!g) throw bail(a.gauge_path);
    hgt::ConnObject acted = hgt::act_object(d, cm, *g, *x);
    std::cout << hgt::serialize_connection(hgt::unparse_connection(cm, acted));
  }
  return 0;
}

int run_compose(const ReportArgs& a, const std::string& first_path,
                const std::string& second_path) {
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::Discretization d = *load(a.disc_path, hgt::DocKind::discretization).disc;

  auto load_mor = [&](const std::string& path) {
    hgt::ParsedConnection raw = *load(path, hgt::DocKind::connection).conn;
    std::vector<hgt::Diagnostic> diags;
    auto m = hgt::bind_morphism(d, cm, raw, diags);
    if (!m) {
      std::string msg;
      for (const hgt::Diagnostic& dg : diags) msg += path + ": " + dg.to_string() + "\n";
      throw CliError{2, msg};
    }
    return *m;
  };
  hgt::ConnMorphism first = load_mor(first_path);
  hgt::ConnMorphism second = load_mor(second_path);
  hgt::ConnMorphism composite = hgt::conn_compose(d, cm, second, first);
  std::cout << hgt::serialize_connection(hgt::unparse_connection(cm, composite));
  return 0;
}

int run_change(const ReportArgs& a) {
  hgt::Discretization d = *load(a.disc_path, hgt::DocKind::discretization).disc;
  hgt::ChangeScript script = *load(a.script_path, hgt::DocKind::change_script).script;

  if (a.conn_path.empty()) {
    std::cout << hgt::serialize_discretization(hgt::apply_script(d, script));
    return 0;
  }
  if (a.cm_path.empty()) throw CliError{2, "transporting a connection needs --cm"};
  hgt::CrossedModule cm = *load(a.cm_path, hgt::DocKind::crossed_module).cm;
  hgt::ParsedConnection raw = *load(a.conn_path, hgt::DocKind::connection).conn;
  std::vector<hgt::Diagnostic> diags;

  hgt::Document out;
  out.kind = hgt::DocKind::scenario;
  out.cm = cm;
  out.disc = hgt::apply_script(d, script);
  if (raw.has_eta) {
    auto m = hgt::bind_morphism(d, cm, raw, diags);
    if (!m) {
      std::string msg;
      for (const hgt::Diagnostic& dg : diags) msg += a.conn_path + ": " + dg.to_string() + "\n";
      throw CliError{2, msg};
    }
    out.conn = hgt::unparse_connection(cm, hgt::transport_morphism_script(d, script, cm, *m));
  } else {
    auto x = hgt::bind_object(d, cm, raw, diags);
    if (!x) {
      std::string msg;
      for (const hgt::Diagnostic& dg : diags) msg += a.conn_path + ": " + dg.to_string() + "\n";
      throw CliError{2, msg};
    }
    out.conn = hgt::unparse_connection(cm, hgt::transport_object_script(d, script, cm, *x));
  }
  std::cout << hgt::serialize(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-group gauge fields on cell complexes"};
  app.require_subcommand(1);

  ReportArgs args;
  std::string example_name;
  std::string compose_first, compose_second;

  auto add_common = [&](CLI::App* cmd, bool with_json) {
    cmd->add_option("--max-states", args.max_states, "enumeration budget (assignment states)");
    if (with_json) cmd->add_flag("--json", args.json_out, "machine-readable report");
  };

  CLI::App* validate = app.add_subcommand("validate", "check axioms and invariants of inputs");
  validate->add_option("--cm", args.cm_path, "crossed module file");
  validate->add_option("--disc", args.disc_path, "discretization file");
  validate->add_option("--conn", args.conn_path, "connection file");
  validate->add_option("--gauge", args.gauge_path, "gauge element file");
  validate->add_option("--script", args.script_path, "change script file");
  add_common(validate, true);

  CLI::App* laws = app.add_subcommand("laws", "run the algebraic law suites");
  laws->add_option("--cm", args.cm_path, "crossed module file")->required();
  laws->add_option("--disc", args.disc_path, "discretization file (default: bundled examples)");
  laws->add_option("--script", args.script_path, "also check rediscretization laws");
  laws->add_flag("--exhaustive", args.exhaustive, "raise the exhaustive ceiling to the full budget");
  laws->add_option("--seed", args.seed, "seed for sampled laws");
  add_common(laws, true);

  CLI::App* enumerate = app.add_subcommand("enumerate", "count connection objects and morphisms");
  enumerate->add_option("--cm", args.cm_path, "crossed module file")->required();
  enumerate->add_option("--disc", args.disc_path, "discretization file (- for stdin)");
  add_common(enumerate, true);

  CLI::App* orbits = app.add_subcommand("orbits", "count equivalence classes of connections");
  orbits->add_option("--cm", args.cm_path, "crossed module file")->required();
  orbits->add_option("--disc", args.disc_path, "discretization file (- for stdin)");
  orbits->add_option("--mode", args.mode, "conn_morphisms | gauge_objects | full")
      ->check(CLI::IsMember({"conn_morphisms", "gauge_objects", "full"}));
  add_common(orbits, true);

  CLI::App* act = app.add_subcommand("act", "apply a gauge transformation to a connection");
  act->add_option("--cm", args.cm_path, "crossed module file")->required();
  act->add_option("--disc", args.disc_path, "discretization file")->required();
  act->add_option("--conn", args.conn_path, "connection file")->required();
  act->add_option("--gauge", args.gauge_path, "gauge element file")->required();
  add_common(act, false);

  CLI::App* compose = app.add_subcommand("compose", "compose two connection morphisms");
  compose->add_option("--cm", args.cm_path, "crossed module file")->required();
  compose->add_option("--disc", args.disc_path, "discretization file")->required();
  compose->add_option("first", compose_first, "earlier morphism file")->required();
  compose->add_option("second", compose_second, "later morphism file")->required();
  add_common(compose, false);

  CLI::App* change = app.add_subcommand("change", "apply a rediscretization script");
  change->add_option("--disc", args.disc_path, "discretization file")->required();
  change->add_option("--script", args.script_path, "change script file")->required();
  change->add_option("--cm", args.cm_path, "crossed module file");
  change->add_option("--conn", args.conn_path, "connection to transport");
  add_common(change, false);

  CLI::App* example = app.add_subcommand("example", "print a bundled example complex");
  example->add_option("name", example_name, "s1 | s2 | t2")
      ->required()
      ->check(CLI::IsMember({"s1", "s2", "t2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(args);
    if (app.got_subcommand(laws)) return run_laws(args);
    if (app.got_subcommand(enumerate)) {
      if (args.disc_path.empty()) args.disc_path = "-";
      return run_enumerate(args);
    }
    if (app.got_subcommand(orbits)) {
      if (args.disc_path.empty()) args.disc_path = "-";
      return run_orbits(args);
    }
    if (app.got_subcommand(act)) return run_act(args);
    if (app.got_subcommand(compose)) return run_compose(args, compose_first, compose_second);
    if (app.got_subcommand(change)) return run_change(args);
    if (app.got_subcommand(example)) {
      std::cout << hgt::serialize_discretization(hgt::build_example(example_name));
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const hgt::budget_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const hgt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
