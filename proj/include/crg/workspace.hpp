#pragma once

// JSON workspaces: named objects over one base field, fixtures, and the
// command dispatcher behind the crgext tool.

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "crg/constructions.hpp"
#include "crg/descent.hpp"
#include "crg/extension.hpp"

namespace crg {

/// Malformed input; path is a JSON pointer into the workspace document.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what) : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class UnknownReference : public Error {
 public:
  UnknownReference(std::string path, const std::string& name)
      : Error(path + ": unknown object '" + name + "'"), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ComoduleMap {
  Comodule source;
  Comodule target;
  Mat matrix;
};

using WorkspaceObject = std::variant<Algebra, AlgebraMap, Bimodule, Coalgebra, Coring, Comodule, ComoduleMap,
                                     Measuring, CoringExtension, DescentDatum, Cor28Data>;

struct Workspace {
  Field field = Field::prime(2);
  std::map<std::string, WorkspaceObject> objects;
  std::map<std::string, std::string> kinds;
};

Workspace parse_workspace(const std::string& text);
Workspace parse_workspace(const nlohmann::json& doc);

/// Name lookup for command arguments: a workspace object, otherwise a
/// fixture "FIX.X" or "X", optionally with a field suffix "@F3" / "@Q".
Algebra resolve_algebra(const Workspace& ws, const std::string& name);
Coring resolve_coring(const Workspace& ws, const std::string& name);

/// Canonical JSON for scalars (F_p: integer in [0, p); Q: "num/den").
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const Algebra& a);

struct Report {
  nlohmann::json body;
  int exit_code = 0;
};

/// Exit codes: 0 pass, 1 a mathematical check failed, 2 bad input, 3 size
/// guard exceeded.
Report run_command(const std::string& command, const std::map<std::string, std::string>& args,
                   const Workspace& ws);
/// Error report and exit code for an exception escaping parsing or a command.
Report error_report(const std::exception& e);

}  // namespace crg
