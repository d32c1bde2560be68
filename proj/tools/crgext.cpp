// crgext: load a JSON workspace of algebras, corings and extensions, run one
// command, print a JSON report on stdout.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "crg/workspace.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw crg::SchemaError("", "cannot open workspace file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

int emit(const crg::Report& r) {
  std::cout << r.body.dump(2) << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with corings, comodules and coring extensions"};
  app.require_subcommand(1);

  std::string workspace;
  std::size_t max_dim = crg::limits().max_dim;
  std::uint64_t max_enum = crg::limits().max_enum;
  app.add_option("-w,--workspace", workspace, "workspace JSON file ('-' for stdin)");
  app.add_option("--max-dim", max_dim, "largest ambient dimension")->capture_default_str();
  app.add_option("--max-enum", max_enum, "largest brute-force candidate count")->capture_default_str();

  std::map<std::string, std::string> args;
  auto opt = [&](CLI::App* sub, const std::string& name, bool required, const std::string& help) {
    auto* o = sub->add_option("--" + name, args[name], help);
    if (required) o->required();
  };

  bool all = false;
  auto* check = app.add_subcommand("check", "validate every object of the workspace");
  check->add_flag("--all", all, "report every object (default)");
  opt(check, "object", false, "report a single object");

  auto* dual = app.add_subcommand("dualring", "structure constants of the left dual ring");
  opt(dual, "coring", true, "coring name, fixture, or NAME@Fp / NAME@Q");

  auto* meas = app.add_subcommand("enumerate-measurings", "all measurings C (x) B -> A and algebra maps B -> *C");
  opt(meas, "coring", true, "coring name");
  opt(meas, "algebra", true, "algebra name");

  auto* induce = app.add_subcommand("induce", "induced D-comodule of a C-comodule");
  opt(induce, "extension", true, "coring extension name");
  opt(induce, "comodule", true, "comodule name, or 'regular'");

  auto* apply = app.add_subcommand("apply", "image of a C-colinear map under the induced functor");
  opt(apply, "extension", true, "coring extension name");
  opt(apply, "map", true, "comodule map name");

  auto* compose = app.add_subcommand("compose", "composite of two coring extensions");
  opt(compose, "first", true, "extension C over D");
  opt(compose, "second", true, "extension D over E");

  auto* descent = app.add_subcommand("descent", "extension and descent transport for a tower D -> B -> A");
  opt(descent, "data", true, "cor28 object name");
  opt(descent, "datum", false, "descent datum to transport");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    crg::set_limits(crg::Limits{max_dim, max_enum});
    crg::Workspace ws = workspace.empty() ? crg::Workspace{} : crg::parse_workspace(read_all(workspace));
    return emit(crg::run_command(command, args, ws));
  } catch (const std::exception& e) {
    crg::Report r = crg::error_report(e);
    r.body["command"] = command;
    return emit(r);
  }
}
