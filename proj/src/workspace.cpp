#include "crg/workspace.hpp"

#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace crg {

using json = nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

// ---------------------------------------------------------------- scalars and arrays

Scalar parse_scalar(const json& j, Field f, const std::string& path) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return f.from_rational(Rational(j.get<std::string>()));
    } catch (const std::exception&) {
      throw SchemaError(path, "cannot parse scalar '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError(path, "expected an integer or a \"num/den\" string");
}

const json& require_array(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (j.size() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  return j;
}

// Flat row-major entries of a nested array of the given shape.
std::vector<Scalar> parse_tensor(const json& j, Field f, const std::vector<std::size_t>& shape,
                                 const std::string& path) {
  std::vector<Scalar> out;
  std::function<void(const json&, std::size_t, const std::string&)> rec = [&](const json& x, std::size_t level,
                                                                               const std::string& p) {
    if (level == shape.size()) {
      out.push_back(parse_scalar(x, f, p));
      return;
    }
    require_array(x, shape[level], p);
    for (std::size_t i = 0; i < shape[level]; ++i) rec(x[i], level + 1, child(p, i));
  };
  rec(j, 0, path);
  return out;
}

Vec parse_vec(const json& j, Field f, std::size_t n, const std::string& path) { return parse_tensor(j, f, {n}, path); }

Mat parse_mat(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& path) {
  auto e = parse_tensor(j, f, {rows, cols}, path);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = e[i * cols + c];
  return m;
}

// t[x][y][z] -> matrix with column x*d2 + y holding t[x][y] (a map X (x) Y -> Z).
Mat parse_action(const json& j, Field f, std::size_t d1, std::size_t d2, std::size_t d3, const std::string& path) {
  auto e = parse_tensor(j, f, {d1, d2, d3}, path);
  Mat m(f, d3, d1 * d2);
  for (std::size_t x = 0; x < d1 * d2; ++x)
    for (std::size_t z = 0; z < d3; ++z) m(z, x) = e[x * d3 + z];
  return m;
}

// t[x][i][j] -> matrix with row i*d3 + j, column x (a lift X -> Y (x)_k Z).
Mat parse_lift(const json& j, Field f, std::size_t d1, std::size_t d2, std::size_t d3, const std::string& path) {
  auto e = parse_tensor(j, f, {d1, d2, d3}, path);
  Mat m(f, d2 * d3, d1);
  for (std::size_t x = 0; x < d1; ++x)
    for (std::size_t r = 0; r < d2 * d3; ++r) m(r, x) = e[x * d2 * d3 + r];
  return m;
}

json action_json(const Mat& act, std::size_t d1, std::size_t d2) {
  json out = json::array();
  for (std::size_t x = 0; x < d1; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < d2; ++y) {
      json v = json::array();
      for (std::size_t z = 0; z < act.rows(); ++z) v.push_back(to_json(act(z, x * d2 + y)));
      row.push_back(v);
    }
    out.push_back(row);
  }
  return out;
}

json lift_json(const Mat& lift, std::size_t d2, std::size_t d3) {
  json out = json::array();
  for (std::size_t x = 0; x < lift.cols(); ++x) {
    json m = json::array();
    for (std::size_t i = 0; i < d2; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d3; ++j) row.push_back(to_json(lift(i * d3 + j, x)));
      m.push_back(row);
    }
    out.push_back(m);
  }
  return out;
}

std::size_t parse_dim(const json& obj, const std::string& path) {
  if (!obj.contains("dim")) throw SchemaError(child(path, "dim"), "missing");
  const json& d = obj["dim"];
  if (!d.is_number_integer() || d.get<std::int64_t>() < 0) throw SchemaError(child(path, "dim"), "expected a nonnegative integer");
  std::size_t n = d.get<std::size_t>();
  check_dim(n, "object dimension");
  return n;
}

const json& field_of(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(child(path, key), "missing");
  return obj[key];
}

// ---------------------------------------------------------------- fixtures

std::optional<WorkspaceObject> fixture(const std::string& name, Field f) {
  if (name == "D2") return diagonal_algebra(f);
  if (name == "BC2") return cyclic_group_algebra(f, 2);
  if (name == "GC2") return group_coalgebra(f, 2);
  if (name == "SW") return sweedler_fixture(f);
  return std::nullopt;
}

std::string strip_fix(const std::string& name) { return name.rfind("FIX.", 0) == 0 ? name.substr(4) : name; }

Field parse_field_suffix(const std::string& s, const std::string& path) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 1 && s[0] == 'F') {
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(s.substr(1), &used);
      if (used == s.size() - 1 && is_prime(p) && p < (1ull << 31)) return Field::prime(p);
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path, "unknown field '" + s + "'");
}

const char* kind_name(const WorkspaceObject& o) {
  static const char* names[] = {"algebra",         "algebra_map", "bimodule",  "coalgebra",     "coring",    "comodule",
                                "comodule_map",    "measuring",   "extension", "descent_datum", "cor28"};
  return names[o.index()];
}

// ---------------------------------------------------------------- loader

class Loader {
 public:
  Loader(const json& objects, Workspace& ws) : objects_(objects), ws_(ws) {}

  void load_all() {
    for (auto it = objects_.begin(); it != objects_.end(); ++it) load(it.key(), "/objects");
  }

 private:
  const WorkspaceObject& load(const std::string& name, const std::string& ref_path) {
    if (auto it = ws_.objects.find(name); it != ws_.objects.end()) return it->second;
    if (!objects_.contains(name)) {
      if (auto fx = fixture(strip_fix(name), ws_.field); fx && name.rfind("FIX.", 0) == 0) {
        return ws_.objects.emplace(name, *fx).first->second;
      }
      throw UnknownReference(ref_path, name);
    }
    const std::string path = child("/objects", name);
    if (busy_.count(name)) throw SchemaError(path, "cyclic reference");
    busy_.insert(name);
    WorkspaceObject obj = build(name, objects_[name], path);
    busy_.erase(name);
    ws_.kinds[name] = kind_name(obj);
    return ws_.objects.emplace(name, std::move(obj)).first->second;
  }

  template <class T>
  T ref(const json& obj, const char* key, const std::string& path) {
    const std::string p = child(path, key);
    const json& j = field_of(obj, key, path);
    if (!j.is_string()) throw SchemaError(p, "expected an object name");
    const WorkspaceObject& o = load(j.get<std::string>(), p);
    if (auto* t = std::get_if<T>(&o)) return *t;
    if constexpr (std::is_same_v<T, Coring>) {
      if (auto* c = std::get_if<Coalgebra>(&o)) return coalgebra_as_coring(*c);
    }
    throw SchemaError(p, std::string("'") + j.get<std::string>() + "' is a " + kind_name(o));
  }

  Algebra optional_algebra(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key) || obj[key].is_null()) return ground_algebra(ws_.field);
    return ref<Algebra>(obj, key, path);
  }

  WorkspaceObject build(const std::string& name, const json& obj, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    const Field f = ws_.field;
    try {
      if (obj.contains("fixture")) {
        const json& fx = obj["fixture"];
        if (!fx.is_string()) throw SchemaError(child(path, "fixture"), "expected a fixture name");
        auto o = fixture(strip_fix(fx.get<std::string>()), f);
        if (!o) throw UnknownReference(child(path, "fixture"), fx.get<std::string>());
        return *o;
      }
      const json& kj = field_of(obj, "kind", path);
      if (!kj.is_string()) throw SchemaError(child(path, "kind"), "expected a string");
      const std::string kind = kj.get<std::string>();

      if (kind == "algebra") {
        std::size_t n = parse_dim(obj, path);
        Mat mult = parse_action(field_of(obj, "mult", path), f, n, n, n, child(path, "mult"));
        return make_algebra(f, n, mult, parse_vec(field_of(obj, "unit", path), f, n, child(path, "unit")));
      }
      if (kind == "algebra_map") {
        Algebra s = ref<Algebra>(obj, "source", path), t = ref<Algebra>(obj, "target", path);
        return make_algebra_map(s, t, parse_mat(field_of(obj, "matrix", path), f, t.dim(), s.dim(), child(path, "matrix")));
      }
      if (kind == "bimodule") {
        Algebra l = optional_algebra(obj, "left", path), r = optional_algebra(obj, "right", path);
        std::size_t n = parse_dim(obj, path);
        Mat lact = obj.contains("lact") ? parse_action(obj["lact"], f, l.dim(), n, n, child(path, "lact"))
                                         : Bimodule::from_actions(l, l, n, {id(f, n)}, {id(f, n)}).lact();
        Mat ract = obj.contains("ract") ? parse_action(obj["ract"], f, n, r.dim(), n, child(path, "ract"))
                                         : Bimodule::from_actions(r, r, n, {id(f, n)}, {id(f, n)}).ract();
        if (lact.cols() != l.dim() * n) throw SchemaError(child(path, "lact"), "required for a nontrivial left algebra");
        if (ract.cols() != n * r.dim()) throw SchemaError(child(path, "ract"), "required for a nontrivial right algebra");
        return make_bimodule(l, r, n, lact, ract);
      }
      if (kind == "coalgebra") {
        std::size_t n = parse_dim(obj, path);
        Mat delta = parse_lift(field_of(obj, "delta", path), f, n, n, n, child(path, "delta"));
        Vec eps = parse_vec(field_of(obj, "eps", path), f, n, child(path, "eps"));
        return make_coalgebra(f, n, delta, Mat::from_rows(f, n, {eps}));
      }
      if (kind == "coring") {
        Bimodule c = ref<Bimodule>(obj, "bimodule", path);
        const std::size_t n = c.dim();
        Mat delta = parse_lift(field_of(obj, "delta", path), f, n, n, n, child(path, "delta"));
        Mat eps = parse_mat(field_of(obj, "eps", path), f, c.left_alg().dim(), n, child(path, "eps"));
        return make_coring(c, delta, eps);
      }
      if (kind == "trivial_coring") return trivial_coring(ref<Algebra>(obj, "algebra", path));
      if (kind == "sweedler_coring") return sweedler_coring(ref<AlgebraMap>(obj, "map", path));
      if (kind == "coalgebra_coring") return coalgebra_as_coring(ref<Coalgebra>(obj, "coalgebra", path));
      if (kind == "entwining_coring") {
        Algebra a = ref<Algebra>(obj, "algebra", path);
        Coalgebra c = ref<Coalgebra>(obj, "coalgebra", path);
        const json& pj = field_of(obj, "psi", path);
        Mat psi = pj.is_string() && pj.get<std::string>() == "flip"
                      ? flip(f, c.dim, a.dim())
                      : parse_mat(pj, f, a.dim() * c.dim, c.dim * a.dim(), child(path, "psi"));
        return entwining_coring(Entwining{a, c, psi});
      }
      if (kind == "comatrix_coring") {
        Bimodule sigma = ref<Bimodule>(obj, "sigma", path);
        const json& ej = field_of(obj, "elements", path);
        const json& fj = field_of(obj, "functionals", path);
        if (!ej.is_array()) throw SchemaError(child(path, "elements"), "expected an array");
        require_array(fj, ej.size(), child(path, "functionals"));
        DualBasis db;
        for (std::size_t i = 0; i < ej.size(); ++i) {
          db.elements.push_back(parse_vec(ej[i], f, sigma.dim(), child(child(path, "elements"), i)));
          db.functionals.push_back(
              parse_mat(fj[i], f, sigma.right_alg().dim(), sigma.dim(), child(child(path, "functionals"), i)));
        }
        return comatrix_coring(sigma, db);
      }
      if (kind == "comodule") {
        Coring c = ref<Coring>(obj, "coring", path);
        Bimodule m = ref<Bimodule>(obj, "module", path);
        Mat rho = parse_lift(field_of(obj, "rho", path), f, m.dim(), m.dim(), c.dim(), child(path, "rho"));
        return make_comodule(c, m, rho);
      }
      if (kind == "regular_comodule") return regular_comodule(ref<Coring>(obj, "coring", path));
      if (kind == "comodule_map") {
        Comodule s = ref<Comodule>(obj, "source", path), t = ref<Comodule>(obj, "target", path);
        Mat m = parse_mat(field_of(obj, "matrix", path), f, t.dim(), s.dim(), child(path, "matrix"));
        if (auto v = check_colinear(m, s, t); !v) throw NotColinear(name, v);
        return ComoduleMap{s, t, m};
      }
      if (kind == "measuring") {
        Coring c = ref<Coring>(obj, "coring", path);
        Algebra b = ref<Algebra>(obj, "algebra", path);
        Measuring m{c, b, parse_action(field_of(obj, "nu", path), f, c.dim(), b.dim(), c.base().dim(), child(path, "nu"))};
        require(check_measuring(m), name);
        return m;
      }
      if (kind == "extension") {
        Coring c = ref<Coring>(obj, "source", path), d = ref<Coring>(obj, "target", path);
        Mat ract = parse_action(field_of(obj, "ract", path), f, c.dim(), d.base().dim(), c.dim(), child(path, "ract"));
        Mat sigma = parse_lift(field_of(obj, "sigma", path), f, c.dim(), c.dim(), d.dim(), child(path, "sigma"));
        return make_coring_extension(c, d, ract, sigma);
      }
      if (kind == "identity_extension") return identity_extension(ref<Coring>(obj, "coring", path));
      if (kind == "extension_from_coring_map") {
        Coring c = ref<Coring>(obj, "source", path), d = ref<Coring>(obj, "target", path);
        return extension_from_coring_map(parse_mat(field_of(obj, "matrix", path), f, d.dim(), c.dim(), child(path, "matrix")),
                                         c, d);
      }
      if (kind == "extension_from_measuring") {
        Measuring m = ref<Measuring>(obj, "measuring", path);
        return extension_to_trivial(m.c, m.b, action_from_measuring(m));
      }
      if (kind == "descent_datum") {
        AlgebraMap iota = ref<AlgebraMap>(obj, "map", path);
        Bimodule m = ref<Bimodule>(obj, "module", path);
        const std::size_t da = iota.target.dim();
        return make_descent_datum(iota, m, parse_lift(field_of(obj, "f", path), f, m.dim(), m.dim(), da, child(path, "f")));
      }
      if (kind == "cor28") {
        AlgebraMap ib = ref<AlgebraMap>(obj, "iota_b", path), ia = ref<AlgebraMap>(obj, "iota_a", path);
        const std::size_t da = ia.target.dim(), db = ia.source.dim();
        Mat rho = parse_action(field_of(obj, "rho_a", path), f, da, db, da, child(path, "rho_a"));
        auto e = parse_tensor(field_of(obj, "phi", path), f, {da, da, da, db}, child(path, "phi"));
        Mat phi(f, da * da * db, da);
        for (std::size_t a = 0; a < da; ++a)
          for (std::size_t r = 0; r < da * da * db; ++r) phi(r, a) = e[a * da * da * db + r];
        Cor28Data data{ib, ia, rho, phi};
        require(check_cor28(data), name);
        return data;
      }
      throw SchemaError(child(path, "kind"), "unknown kind '" + kind + "'");
    } catch (const NotColinear& e) {
      throw NotColinear(name, e.verdict());
    } catch (const NotCoringMorphism& e) {
      throw NotCoringMorphism(name, e.verdict());
    } catch (const DualBasisInvalid& e) {
      throw DualBasisInvalid(name, e.verdict());
    } catch (const AxiomViolation& e) {
      throw AxiomViolation(name, e.verdict());
    } catch (const DimensionMismatch& e) {
      throw SchemaError(path, e.what());
    }
  }

  const json& objects_;
  Workspace& ws_;
  std::set<std::string> busy_;
};

// ---------------------------------------------------------------- name resolution

std::pair<std::string, Field> split_name(const Workspace& ws, const std::string& name) {
  auto at = name.find('@');
  if (at == std::string::npos) return {name, ws.field};
  return {name.substr(0, at), parse_field_suffix(name.substr(at + 1), "/args/" + name)};
}

const WorkspaceObject* lookup(const Workspace& ws, const std::string& name) {
  auto it = ws.objects.find(name);
  return it == ws.objects.end() ? nullptr : &it->second;
}

template <class T>
const T& named(const Workspace& ws, const std::string& name, const char* arg) {
  const WorkspaceObject* o = lookup(ws, name);
  if (!o) throw UnknownReference(std::string("/args/") + arg, name);
  if (auto* t = std::get_if<T>(o)) return *t;
  throw SchemaError(std::string("/args/") + arg, "'" + name + "' is a " + kind_name(*o));
}

const std::string& arg(const std::map<std::string, std::string>& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end() || it->second.empty()) throw SchemaError("/args/" + key, "missing argument --" + key);
  return it->second;
}

json extension_json(const CoringExtension& e) {
  return json{{"source_dim", e.c.dim()},
              {"target_dim", e.d.dim()},
              {"ract", action_json(e.ract, e.c.dim(), e.b().dim())},
              {"sigma", lift_json(e.sigma_lift, e.c.dim(), e.d.dim())}};
}

json verdict_json(const Verdict& v) {
  if (v.ok) return json{{"status", "pass"}};
  return json{{"status", "fail"}, {"axiom", v.axiom}, {"witness", v.witness}};
}

}  // namespace

// ---------------------------------------------------------------- public

json to_json(const Scalar& s) {
  if (s.field().is_finite()) return s.residue();
  return s.str();
}

json to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json to_json(const Algebra& a) {
  json unit = json::array();
  for (const auto& s : a.unit()) unit.push_back(to_json(s));
  return json{{"dim", a.dim()}, {"mult", action_json(a.mult(), a.dim(), a.dim())}, {"unit", unit}};
}

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_workspace(doc);
}

Workspace parse_workspace(const json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected a JSON object");
  Workspace ws;
  const json& fj = field_of(doc, "field", "");
  if (!fj.is_object() || !fj.contains("type") || !fj["type"].is_string())
    throw SchemaError("/field/type", "expected {\"type\": \"Fp\", \"p\": <prime>} or {\"type\": \"Q\"}");
  const std::string type = fj["type"].get<std::string>();
  if (type == "Q") {
    ws.field = Field::rationals();
  } else if (type == "Fp") {
    if (!fj.contains("p") || !fj["p"].is_number_integer()) throw SchemaError("/field/p", "expected an integer");
    std::int64_t p = fj["p"].get<std::int64_t>();
    if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(static_cast<std::uint64_t>(p)))
      throw SchemaError("/field/p", std::to_string(p) + " is not a prime below 2^31");
    ws.field = Field::prime(static_cast<std::uint64_t>(p));
  } else {
    throw SchemaError("/field/type", "unknown field type '" + type + "'");
  }
  if (doc.contains("objects")) {
    const json& objs = doc["objects"];
    if (!objs.is_object()) throw SchemaError("/objects", "expected an object");
    Loader(objs, ws).load_all();
  }
  return ws;
}

Algebra resolve_algebra(const Workspace& ws, const std::string& name) {
  if (const WorkspaceObject* o = lookup(ws, name)) {
    if (auto* a = std::get_if<Algebra>(o)) return *a;
    throw SchemaError("/args/algebra", "'" + name + "' is a " + kind_name(*o));
  }
  auto [base, f] = split_name(ws, name);
  if (base == "k") return ground_algebra(f);
  if (auto fx = fixture(strip_fix(base), f))
    if (auto* a = std::get_if<Algebra>(&*fx)) return *a;
  throw UnknownReference("/args/algebra", name);
}

Coring resolve_coring(const Workspace& ws, const std::string& name) {
  if (const WorkspaceObject* o = lookup(ws, name)) {
    if (auto* c = std::get_if<Coring>(o)) return *c;
    if (auto* c = std::get_if<Coalgebra>(o)) return coalgebra_as_coring(*c);
    throw SchemaError("/args/coring", "'" + name + "' is a " + kind_name(*o));
  }
  auto [base, f] = split_name(ws, name);
  if (auto fx = fixture(strip_fix(base), f)) {
    if (auto* c = std::get_if<Coring>(&*fx)) return *c;
    if (auto* c = std::get_if<Coalgebra>(&*fx)) return coalgebra_as_coring(*c);
  }
  throw UnknownReference("/args/coring", name);
}

Report run_command(const std::string& command, const std::map<std::string, std::string>& args,
                   const Workspace& ws) {
  Report r;
  json& body = r.body;
  body["command"] = command;
  body["field"] = ws.field.name();
  body["status"] = "pass";

  if (command == "check") {
    json objs = json::object();
    for (const auto& [name, kind] : ws.kinds) {
      json entry{{"kind", kind}, {"status", "pass"}};
      objs[name] = entry;
    }
    if (auto it = args.find("object"); it != args.end() && !it->second.empty()) {
      if (!ws.objects.count(it->second)) throw UnknownReference("/args/object", it->second);
      objs = json{{it->second, objs[it->second]}};
    }
    body["objects"] = objs;
    return r;
  }

  if (command == "dualring") {
    Coring c = resolve_coring(ws, arg(args, "coring"));
    DualRing d = dual_ring(c);
    body["field"] = c.field().name();
    body["coring"] = arg(args, "coring");
    body["algebra"] = to_json(d.alg);
    json basis = json::array();
    for (const auto& b : d.basis) basis.push_back(to_json(b));
    body["basis"] = basis;
    return r;
  }

  if (command == "enumerate-measurings") {
    Coring c = resolve_coring(ws, arg(args, "coring"));
    Algebra b = resolve_algebra(ws, arg(args, "algebra"));
    if (!(c.field() == b.field())) throw SchemaError("/args/algebra", "coring and algebra are over different fields");
    body["field"] = c.field().name();
    auto ms = enumerate_measurings(c, b);
    DualRing d = dual_ring(c);
    auto maps = enumerate_algebra_maps(b, d.alg);
    json list = json::array();
    std::vector<Mat> images;
    for (const auto& m : ms) {
      list.push_back(json{{"nu", action_json(m.nu, c.dim(), b.dim())}});
      images.push_back(measuring_to_algebra_map(m, d).matrix);
    }
    std::sort(images.begin(), images.end(), lex_less);
    bool bijective = images.size() == maps.size();
    for (std::size_t i = 0; bijective && i < maps.size(); ++i) bijective = images[i] == maps[i].matrix;
    json map_list = json::array();
    for (const auto& m : maps) map_list.push_back(to_json(m.matrix));
    body["coring"] = arg(args, "coring");
    body["algebra"] = arg(args, "algebra");
    body["count"] = ms.size();
    body["measurings"] = list;
    body["algebra_map_count"] = maps.size();
    body["algebra_maps"] = map_list;
    body["bijection"] = bijective;
    if (!bijective) {
      body["status"] = "fail";
      r.exit_code = 1;
    }
    return r;
  }

  if (command == "induce") {
    const CoringExtension& e = named<CoringExtension>(ws, arg(args, "extension"), "extension");
    const std::string& mname = arg(args, "comodule");
    Comodule m = mname == "regular" ? regular_comodule(e.c) : named<Comodule>(ws, mname, "comodule");
    Comodule out = induced_coaction(e, m);
    body["extension"] = arg(args, "extension");
    body["comodule"] = mname;
    body["dim"] = out.dim();
    body["action"] = action_json(out.module().ract(), out.dim(), e.b().dim());
    body["coaction"] = lift_json(out.rho_lift(), out.dim(), e.d.dim());
    return r;
  }

  if (command == "apply") {
    const CoringExtension& e = named<CoringExtension>(ws, arg(args, "extension"), "extension");
    const ComoduleMap& f = named<ComoduleMap>(ws, arg(args, "map"), "map");
    Mat g = apply_functor(e, f.matrix, f.source, f.target);
    body["extension"] = arg(args, "extension");
    body["map"] = arg(args, "map");
    body["matrix"] = to_json(g);
    body["colinear"] = true;
    return r;
  }

  if (command == "compose") {
    const CoringExtension& e1 = named<CoringExtension>(ws, arg(args, "first"), "first");
    const CoringExtension& e2 = named<CoringExtension>(ws, arg(args, "second"), "second");
    body["first"] = arg(args, "first");
    body["second"] = arg(args, "second");
    body["extension"] = extension_json(compose_extensions(e1, e2));
    return r;
  }

  if (command == "descent") {
    const Cor28Data& data = named<Cor28Data>(ws, arg(args, "data"), "data");
    body["data"] = arg(args, "data");
    CoringExtension e = assemble_cor28(data);
    body["extension"] = verdict_json(check_coring_extension(e));
    if (auto it = args.find("datum"); it != args.end() && !it->second.empty()) {
      const DescentDatum& d = named<DescentDatum>(ws, it->second, "datum");
      DescentDatum out = descent_functor(data, d);
      body["datum"] = it->second;
      body["image"] = json{{"dim", out.m.dim()},
                           {"action", action_json(out.m.ract(), out.m.dim(), out.iota.target.dim())},
                           {"f", lift_json(out.f_lift, out.m.dim(), out.iota.target.dim())}};
    }
    return r;
  }

  throw SchemaError("/command", "unknown command '" + command + "'");
}

Report error_report(const std::exception& e) {
  Report r;
  json err{{"message", e.what()}};
  auto axiom = [&](const AxiomViolation& a, const char* type) {
    err["type"] = type;
    err["object"] = a.object();
    err["axiom"] = a.axiom();
    err["witness"] = a.witness();
    r.exit_code = 1;
  };
  if (auto* s = dynamic_cast<const SchemaError*>(&e)) {
    err["type"] = "SchemaError";
    err["path"] = s->path();
    r.exit_code = 2;
  } else if (auto* u = dynamic_cast<const UnknownReference*>(&e)) {
    err["type"] = "UnknownReference";
    err["path"] = u->path();
    r.exit_code = 2;
  } else if (auto* a = dynamic_cast<const NotColinear*>(&e)) {
    axiom(*a, "NotColinear");
  } else if (auto* a = dynamic_cast<const NotCoringMorphism*>(&e)) {
    axiom(*a, "NotCoringMorphism");
  } else if (auto* a = dynamic_cast<const DualBasisInvalid*>(&e)) {
    axiom(*a, "DualBasisInvalid");
  } else if (auto* a = dynamic_cast<const AxiomViolation*>(&e)) {
    axiom(*a, "AxiomViolation");
  } else if (dynamic_cast<const SizeLimit*>(&e)) {
    err["type"] = "SizeLimit";
    r.exit_code = 3;
  } else if (dynamic_cast<const NonFiniteField*>(&e)) {
    err["type"] = "NonFiniteField";
    r.exit_code = 2;
  } else if (dynamic_cast<const DimensionMismatch*>(&e)) {
    err["type"] = "DimensionMismatch";
    r.exit_code = 2;
  } else if (dynamic_cast<const MiddleMismatch*>(&e)) {
    err["type"] = "MiddleMismatch";
    r.exit_code = 2;
  } else if (dynamic_cast<const PurityFailure*>(&e)) {
    err["type"] = "PurityFailure";
    r.exit_code = 1;
  } else if (dynamic_cast<const Error*>(&e)) {
    err["type"] = "Error";
    r.exit_code = 1;
  } else {
    err["type"] = "InputError";
    r.exit_code = 2;
  }
  r.body = json{{"status", r.exit_code == 3 ? "size-limit" : r.exit_code == 1 ? "fail" : "error"}, {"error", err}};
  return r;
}

}  // namespace crg
