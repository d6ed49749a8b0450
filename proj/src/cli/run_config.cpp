#include "fdosc/cli/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "fdosc/errors.hpp"

namespace fdosc::cli {

namespace {

using json = nlohmann::json;

const std::vector<std::pair<Task, std::string>>& task_table() {
  static const std::vector<std::pair<Task, std::string>> table = {
      {Task::Spectrum, "spectrum"},
      {Task::Coherent, "coherent"},
      {Task::Compare, "compare"},
      {Task::Commutators, "commutators"},
      {Task::DisplacementCheck, "displacement-check"},
      {Task::Wavefunction, "wavefunction"},
      {Task::HarmonicLimit, "harmonic-limit"}};
  return table;
}

double number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::size_t count(const json& doc, const char* key, std::size_t fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::complex<double> complex_value(const json& v, const char* key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_object() && v.contains("re")) {
    const double im = v.contains("im") ? v.at("im").get<double>() : 0.0;
    return {v.at("re").get<double>(), im};
  }
  throw ConfigError(std::string("'") + key + "' must be a number, [re, im] or {\"re\":..,\"im\":..}");
}

ModelParams parse_model(const json& doc) {
  const std::string name = doc.value("model", std::string("tpt"));
  Model model;
  try {
    model = model_from_string(name);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  try {
    switch (model) {
      case Model::TPT: {
        const double a = number(doc, "a", 1.0);
        double lambda = number(doc, "lambda", 2.0);
        if (doc.contains("U0")) {
          if (doc.contains("lambda")) throw ConfigError("give either 'lambda' or 'U0', not both");
          lambda = solve_lambda(number(doc, "U0", 0.0), a);
        }
        return ModelParams::tpt(lambda, a);
      }
      case Model::Pseudoharmonic: return ModelParams::pseudoharmonic(number(doc, "s", 1.0));
      case Model::Harmonic: return ModelParams::harmonic(number(doc, "omega", 1.0));
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid model parameters: ") + e.what());
  }
  throw ConfigError("unknown model");
}

CoherentKind parse_method(const std::string& s) {
  if (s == "annihilation") return CoherentKind::Annihilation;
  if (s == "displacement-closed") return CoherentKind::DisplacementClosed;
  if (s == "displacement-direct") return CoherentKind::DisplacementDirect;
  if (s == "displacement-factored") return CoherentKind::DisplacementFactored;
  throw ConfigError("unknown coherent-state method '" + s + "'");
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string_view to_string(Task t) {
  for (const auto& [task, name] : task_table())
    if (task == t) return name;
  return "unknown";
}

Task task_from_string(std::string_view name) {
  for (const auto& [task, n] : task_table())
    if (n == name) return task;
  throw ConfigError("unknown task '" + std::string(name) + "'");
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : task_table()) out.push_back(entry.second);
    return out;
  }();
  return names;
}

std::string_view to_string(CoherentKind k) {
  switch (k) {
    case CoherentKind::Annihilation: return "annihilation";
    case CoherentKind::DisplacementClosed: return "displacement-closed";
    case CoherentKind::DisplacementDirect: return "displacement-direct";
    case CoherentKind::DisplacementFactored: return "displacement-factored";
  }
  return "unknown";
}

double RunConfig::tolerance() const {
  if (check_tol > 0.0) return check_tol;
  switch (task) {
    case Task::Spectrum: return 1e-12;
    case Task::Coherent: return 1e-10;
    case Task::Compare: return 1e-12;
    case Task::Commutators: return 1e-12;
    case Task::DisplacementCheck: return 1e-9;
    case Task::Wavefunction: return 1e-6;
    case Task::HarmonicLimit: return 1e-2;
  }
  return 1e-12;
}

void apply_overrides(json& doc, const std::vector<std::string>& overrides) {
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;

    json* node = &doc;
    std::size_t start = 0;
    for (;;) {
      const auto dot = key.find('.', start);
      const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (part.empty()) throw ConfigError("--param key '" + key + "' has an empty component");
      if (!node->is_object()) throw ConfigError("--param key '" + key + "' descends into a non-object");
      if (dot == std::string::npos) {
        (*node)[part] = value;
        break;
      }
      node = &(*node)[part];
      if (node->is_null()) *node = json::object();
      start = dot + 1;
    }
  }
}

RunConfig parse_config(Task task, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known = {
      "model",  "lambda",      "a",          "U0",        "s",       "omega",    "alpha",
      "zeta",   "method",      "cutoff",     "tail_tol",  "check_tol", "max_cutoff", "grid",
      "lambdas", "final_bound", "rate_tol",  "task"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown config key '" + key + "'");
  }
  if (doc.contains("task") && doc.at("task") != std::string(to_string(task)))
    throw ConfigError("config names task '" + doc.at("task").dump() + "' but '" +
                      std::string(to_string(task)) + "' was requested");

  try {
    RunConfig c;
    c.task = task;
    c.params = parse_model(doc);
    if (doc.contains("alpha")) c.alpha = complex_value(doc.at("alpha"), "alpha");
    if (doc.contains("zeta")) c.zeta = complex_value(doc.at("zeta"), "zeta");
    if (doc.contains("method")) c.method = parse_method(doc.at("method").get<std::string>());
    c.cutoff = count(doc, "cutoff", c.cutoff);
    c.tail_tol = number(doc, "tail_tol", c.tail_tol);
    c.check_tol = number(doc, "check_tol", c.check_tol);
    c.max_cutoff = count(doc, "max_cutoff", c.max_cutoff);
    c.final_bound = number(doc, "final_bound", c.final_bound);
    c.rate_tol = number(doc, "rate_tol", c.rate_tol);
    if (doc.contains("grid")) {
      const json& g = doc.at("grid");
      if (!g.is_object()) throw ConfigError("'grid' must be an object");
      c.grid.nodes = count(g, "nodes", c.grid.nodes);
      if (g.contains("rho_max")) c.grid.rho_max = number(g, "rho_max", 0.0);
    }
    if (doc.contains("lambdas")) {
      const json& l = doc.at("lambdas");
      if (!l.is_array() || l.empty()) throw ConfigError("'lambdas' must be a nonempty array");
      c.lambdas.clear();
      for (const auto& v : l) {
        if (!v.is_number()) throw ConfigError("'lambdas' entries must be numbers");
        c.lambdas.push_back(v.get<double>());
      }
    }

    if (auto cap = max_cutoff_from_env()) c.max_cutoff = std::min(c.max_cutoff, *cap);

    if (c.cutoff < 2) throw ConfigError("cutoff must be at least 2");
    if (c.max_cutoff < c.cutoff) c.max_cutoff = c.cutoff;
    if (!(c.tail_tol > 0.0)) throw ConfigError("tail_tol must be positive");
    if (c.check_tol < 0.0 || (doc.contains("check_tol") && !(c.check_tol > 0.0)))
      throw ConfigError("check_tol must be positive");
    if (!(c.final_bound > 0.0) || !(c.rate_tol > 0.0))
      throw ConfigError("final_bound and rate_tol must be positive");
    if (c.grid.nodes < 2) throw ConfigError("grid.nodes must be at least 2");
    if (c.grid.rho_max && !(*c.grid.rho_max > 0.0)) throw ConfigError("grid.rho_max must be positive");
    for (double l : c.lambdas)
      if (!(l > 0.5)) throw ConfigError("every entry of 'lambdas' must exceed 1/2");
    if (c.zeta && !(std::abs(*c.zeta) < 1.0))
      throw ConfigError("zeta must lie inside the unit disk");
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("config file '" + path.string() + "' is not valid JSON");
  return doc;
}

json to_json(const RunConfig& c) {
  json j{{"task", std::string(to_string(c.task))},
         {"model", std::string(fdosc::to_string(c.params.model))},
         {"alpha", complex_json(c.alpha)},
         {"method", std::string(to_string(c.method))},
         {"cutoff", c.cutoff},
         {"tail_tol", c.tail_tol},
         {"check_tol", c.tolerance()},
         {"max_cutoff", c.max_cutoff},
         {"grid", {{"nodes", c.grid.nodes}}},
         {"lambdas", c.lambdas},
         {"final_bound", c.final_bound},
         {"rate_tol", c.rate_tol}};
  switch (c.params.model) {
    case Model::TPT:
      j["lambda"] = c.params.lambda;
      j["a"] = c.params.a;
      break;
    case Model::Pseudoharmonic: j["s"] = c.params.s; break;
    case Model::Harmonic: j["omega"] = c.params.omega; break;
  }
  if (c.zeta) j["zeta"] = complex_json(*c.zeta);
  if (c.grid.rho_max) j["grid"]["rho_max"] = *c.grid.rho_max;
  return j;
}

std::optional<std::size_t> max_cutoff_from_env() {
  const char* raw = std::getenv("FDOSC_MAX_CUTOFF");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 2) throw ConfigError("FDOSC_MAX_CUTOFF must be an integer >= 2");
  return static_cast<std::size_t>(v);
}

}  // namespace fdosc::cli
