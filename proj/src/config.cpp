// Strict JSON configuration parsing with field-path diagnostics.
#include "cavitylz/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cavitylz/errors.hpp"

namespace cavitylz::config {

namespace {

// A JSON object plus its dotted path, for error messages and strict key
// checking.
class Node {
 public:
  Node(const Json& doc, std::string path)
      : json_(&doc), path_(std::move(path)) {
    if (!json_->is_object())
      throw ConfigError("at " + path_ + ": expected an object");
  }

  [[nodiscard]] bool has(const char* key) const { return json_->contains(key); }

  [[nodiscard]] Node child(const char* key) const {
    return Node(field(key), join(key));
  }

  [[nodiscard]] double number(const char* key) const {
    const Json& v = field(key);
    if (!v.is_number())
      throw ConfigError("at " + join(key) + ": expected a number");
    return v.get<double>();
  }

  [[nodiscard]] double number_or(const char* key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  [[nodiscard]] int integer(const char* key) const {
    const Json& v = field(key);
    if (!v.is_number_integer())
      throw ConfigError("at " + join(key) + ": expected an integer");
    return v.get<int>();
  }

  [[nodiscard]] int integer_or(const char* key, int fallback) const {
    return has(key) ? integer(key) : fallback;
  }

  [[nodiscard]] bool boolean_or(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const Json& v = field(key);
    if (!v.is_boolean())
      throw ConfigError("at " + join(key) + ": expected true or false");
    return v.get<bool>();
  }

  [[nodiscard]] std::string text(const char* key) const {
    const Json& v = field(key);
    if (!v.is_string())
      throw ConfigError("at " + join(key) + ": expected a string");
    return v.get<std::string>();
  }

  [[nodiscard]] std::string text_or(const char* key,
                                    const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
  }

  // Accepts a single number or an array of numbers.
  [[nodiscard]] std::vector<double> number_list(const char* key) const {
    const Json& v = field(key);
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array())
      throw ConfigError("at " + join(key) + ": expected a number or array");
    std::vector<double> out;
    for (const Json& item : v) {
      if (!item.is_number())
        throw ConfigError("at " + join(key) + ": expected numeric entries");
      out.push_back(item.get<double>());
    }
    return out;
  }

  // Accepts a single string or an array of strings.
  [[nodiscard]] std::vector<std::string> text_list(const char* key) const {
    const Json& v = field(key);
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array())
      throw ConfigError("at " + join(key) + ": expected a string or array");
    std::vector<std::string> out;
    for (const Json& item : v) {
      if (!item.is_string())
        throw ConfigError("at " + join(key) + ": expected string entries");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  // [re, im] pair.
  [[nodiscard]] std::complex<double> complex_pair(const char* key) const {
    const Json& v = field(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
      throw ConfigError("at " + join(key) + ": expected [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
  }

  void check_keys(std::initializer_list<const char*> allowed) const {
    for (const auto& item : json_->items()) {
      const bool known =
          std::any_of(allowed.begin(), allowed.end(),
                      [&](const char* k) { return item.key() == k; });
      if (!known)
        throw ConfigError("at " + join(item.key().c_str()) +
                          ": unknown key");
    }
  }

  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  [[nodiscard]] const Json& field(const char* key) const {
    if (!json_->contains(key))
      throw ConfigError("at " + join(key) + ": missing required key");
    return (*json_)[key];
  }

  [[nodiscard]] std::string join(const char* key) const {
    return path_ == "<root>" ? std::string(key) : path_ + "." + key;
  }

  const Json* json_;
  std::string path_;
};

void require_positive(double value, const std::string& what) {
  if (!(value > 0.0)) throw ConfigError("at " + what + ": must be > 0");
}

GeometrySection parse_geometry(const Node& node) {
  node.check_keys({"total_length", "delta_L"});
  GeometrySection out;
  out.total_length = node.number("total_length");
  require_positive(out.total_length, node.path() + ".total_length");
  out.delta_L = node.number_or("delta_L", 0.0);
  if (std::abs(out.delta_L) >= out.total_length)
    throw ConfigError("at " + node.path() +
                      ".delta_L: |delta_L| must stay below total_length");
  return out;
}

model::MirrorModel parse_mirror(const Node& node) {
  const std::string type = node.text("type");
  if (type == "delta") {
    node.check_keys({"type", "alpha"});
    model::DeltaMirror m{node.number("alpha")};
    require_positive(m.alpha, node.path() + ".alpha");
    return m;
  }
  if (type == "slab") {
    node.check_keys({"type", "half_width", "refractive_index"});
    model::SlabMirror m{node.number("half_width"),
                        node.number("refractive_index")};
    require_positive(m.half_width, node.path() + ".half_width");
    if (m.refractive_index < 1.0)
      throw ConfigError("at " + node.path() +
                        ".refractive_index: must be >= 1");
    return m;
  }
  if (type == "interdielectric") {
    node.check_keys({"type", "alpha", "n1", "n2"});
    model::InterDielectricDelta m{node.number("alpha"), node.number("n1"),
                                  node.number("n2")};
    if (m.alpha < 0.0)
      throw ConfigError("at " + node.path() + ".alpha: must be >= 0");
    if (m.n1 < 1.0 || m.n2 < 1.0)
      throw ConfigError("at " + node.path() + ": n1 and n2 must be >= 1");
    return m;
  }
  throw ConfigError("at " + node.path() +
                    ".type: expected delta, slab, or interdielectric");
}

ModesSection parse_modes(const Node& node) {
  node.check_keys({"n_min", "n_max", "delta_L_min", "delta_L_max", "steps",
                   "tol", "include_localized", "fit_lz"});
  ModesSection out;
  out.n_min = node.integer("n_min");
  out.n_max = node.integer_or("n_max", out.n_min);
  if (out.n_min < 1 || out.n_max < out.n_min)
    throw ConfigError("at " + node.path() + ": need 1 <= n_min <= n_max");
  out.delta_L_min = node.number_or("delta_L_min", 0.0);
  out.delta_L_max = node.number_or("delta_L_max", out.delta_L_min);
  out.steps = node.integer_or("steps", 1);
  if (out.steps < 1)
    throw ConfigError("at " + node.path() + ".steps: must be >= 1");
  if (out.steps > 1 && !(out.delta_L_max > out.delta_L_min))
    throw ConfigError("at " + node.path() +
                      ": delta_L_max must exceed delta_L_min when steps > 1");
  out.tol = node.number_or("tol", 1.0e-12);
  require_positive(out.tol, node.path() + ".tol");
  out.include_localized = node.boolean_or("include_localized", false);
  out.fit_lz = node.boolean_or("fit_lz", true);
  return out;
}

dynamics::Order parse_order_label(const std::string& label,
                                  const std::string& where) {
  if (label == "first") return dynamics::Order::first;
  if (label == "second") return dynamics::Order::second;
  if (label == "uncoupled") return dynamics::Order::uncoupled_second;
  throw ConfigError("at " + where +
                    ": expected first, second, or uncoupled");
}

DynamicsSection parse_dynamics(const Node& node) {
  node.check_keys({"theta_tilde", "speed", "n", "orders", "delta_ratio",
                   "tau_min", "tau_max", "samples", "tol", "emit_derivatives",
                   "rotated_frame", "initial"});
  DynamicsSection out;
  if (node.has("theta_tilde")) out.theta_tilde = node.number("theta_tilde");
  if (node.has("speed")) out.speed = node.number("speed");
  if (out.theta_tilde.has_value() == out.speed.has_value())
    throw ConfigError("at " + node.path() +
                      ": give exactly one of theta_tilde or speed");
  if (out.theta_tilde && *out.theta_tilde < 0.0)
    throw ConfigError("at " + node.path() + ".theta_tilde: must be >= 0");
  if (out.speed) {
    require_positive(*out.speed, node.path() + ".speed");
    out.n = node.integer("n");
    if (out.n < 1)
      throw ConfigError("at " + node.path() + ".n: must be >= 1");
  }
  for (const std::string& label : node.text_list("orders"))
    out.orders.push_back(parse_order_label(label, node.path() + ".orders"));
  if (out.orders.empty())
    throw ConfigError("at " + node.path() + ".orders: must not be empty");
  if (node.has("delta_ratio")) {
    out.delta_ratios = node.number_list("delta_ratio");
    for (double r : out.delta_ratios)
      require_positive(r, node.path() + ".delta_ratio");
  }
  out.tau_min = node.number_or("tau_min", -25.0);
  out.tau_max = node.number_or("tau_max", 25.0);
  if (!(out.tau_max > out.tau_min))
    throw ConfigError("at " + node.path() + ": tau_max must exceed tau_min");
  out.samples = node.integer_or("samples", 501);
  if (out.samples < 2)
    throw ConfigError("at " + node.path() + ".samples: must be >= 2");
  out.tol = node.number_or("tol", 1.0e-10);
  require_positive(out.tol, node.path() + ".tol");
  out.emit_derivatives = node.boolean_or("emit_derivatives", false);
  out.rotated_frame = node.boolean_or("rotated_frame", true);
  if (node.has("initial")) {
    Node initial = node.child("initial");
    initial.check_keys({"a_left", "a_right"});
    if (initial.has("a_left"))
      out.initial.a_left = initial.complex_pair("a_left");
    if (initial.has("a_right"))
      out.initial.a_right = initial.complex_pair("a_right");
  }
  return out;
}

TransferSection parse_transfer(const Node& node) {
  node.check_keys({"n", "delta_L_min", "delta_L_max", "steps", "branch",
                   "extrema", "tol", "overlay_alphas"});
  TransferSection out;
  out.n = node.integer("n");
  if (out.n < 1) throw ConfigError("at " + node.path() + ".n: must be >= 1");
  out.delta_L_min = node.number_or("delta_L_min", 0.0);
  out.delta_L_max = node.number_or("delta_L_max", out.delta_L_min);
  out.steps = node.integer_or("steps", 1);
  if (out.steps < 1)
    throw ConfigError("at " + node.path() + ".steps: must be >= 1");
  if (out.steps > 1 && !(out.delta_L_max > out.delta_L_min))
    throw ConfigError("at " + node.path() +
                      ": delta_L_max must exceed delta_L_min when steps > 1");
  out.branch = node.text_or("branch", "both");
  if (out.branch != "even" && out.branch != "odd" && out.branch != "both")
    throw ConfigError("at " + node.path() +
                      ".branch: expected even, odd, or both");
  out.extrema = node.boolean_or("extrema", true);
  out.tol = node.number_or("tol", 1.0e-12);
  require_positive(out.tol, node.path() + ".tol");
  if (node.has("overlay_alphas")) {
    out.overlay_alphas = node.number_list("overlay_alphas");
    for (double a : out.overlay_alphas)
      require_positive(a, node.path() + ".overlay_alphas");
  }
  return out;
}

RegimesSection parse_regimes(const Node& node) {
  node.check_keys({"map", "point", "feasibility", "moving_medium",
                   "golden_rule_gap", "thresholds"});
  RegimesSection out;
  if (node.has("map")) {
    Node map = node.child("map");
    map.check_keys({"transmission_min", "transmission_max",
                    "transmission_steps", "omega_ratio_min", "omega_ratio_max",
                    "omega_ratio_steps", "speed", "log_transmission",
                    "log_omega_ratio"});
    RegimesSection::Map m;
    m.transmission_min = map.number("transmission_min");
    m.transmission_max = map.number("transmission_max");
    m.transmission_steps = map.integer("transmission_steps");
    m.omega_ratio_min = map.number("omega_ratio_min");
    m.omega_ratio_max = map.number("omega_ratio_max");
    m.omega_ratio_steps = map.integer("omega_ratio_steps");
    m.speed = map.number("speed");
    m.log_transmission = map.boolean_or("log_transmission", true);
    m.log_omega_ratio = map.boolean_or("log_omega_ratio", true);
    require_positive(m.transmission_min, map.path() + ".transmission_min");
    if (m.transmission_max < m.transmission_min ||
        m.transmission_max > 1.0)
      throw ConfigError("at " + map.path() +
                        ": need transmission_min <= transmission_max <= 1");
    require_positive(m.omega_ratio_min, map.path() + ".omega_ratio_min");
    if (m.omega_ratio_max < m.omega_ratio_min)
      throw ConfigError("at " + map.path() +
                        ": omega_ratio_max must be >= omega_ratio_min");
    if (m.transmission_steps < 1 || m.omega_ratio_steps < 1)
      throw ConfigError("at " + map.path() + ": step counts must be >= 1");
    require_positive(m.speed, map.path() + ".speed");
    out.map = m;
  }
  if (node.has("point")) {
    Node point = node.child("point");
    point.check_keys({"transmission", "omega_fsr", "omega_av", "speed"});
    RegimesSection::Point p;
    p.transmission = point.number("transmission");
    p.omega_fsr = point.number("omega_fsr");
    p.omega_av = point.number("omega_av");
    p.speed = point.number("speed");
    out.point = p;
  }
  if (node.has("feasibility")) {
    Node f = node.child("feasibility");
    f.check_keys({"finesse", "speed", "wavelength", "delta_L_span"});
    RegimesSection::Feasibility fz;
    fz.finesse = f.number("finesse");
    fz.speed = f.number("speed");
    fz.wavelength = f.number("wavelength");
    if (f.has("delta_L_span")) fz.delta_L_span = f.number("delta_L_span");
    out.feasibility = fz;
  }
  if (node.has("moving_medium")) {
    Node m = node.child("moving_medium");
    m.check_keys({"k", "speed", "gap", "omega_av"});
    RegimesSection::MovingMedium mm;
    mm.k = m.number("k");
    mm.speed = m.number("speed");
    mm.gap = m.number("gap");
    mm.omega_av = m.number("omega_av");
    out.moving_medium = mm;
  }
  if (node.has("golden_rule_gap")) {
    out.golden_rule_gap = node.number("golden_rule_gap");
    require_positive(*out.golden_rule_gap, node.path() + ".golden_rule_gap");
  }
  if (node.has("thresholds")) {
    Node t = node.child("thresholds");
    t.check_keys({"reduction", "adiabatic"});
    out.thresholds.reduction =
        t.number_or("reduction", out.thresholds.reduction);
    out.thresholds.adiabatic =
        t.number_or("adiabatic", out.thresholds.adiabatic);
    require_positive(out.thresholds.reduction, t.path() + ".reduction");
    require_positive(out.thresholds.adiabatic, t.path() + ".adiabatic");
  }
  return out;
}

MirrorCurveSection parse_mirror_curve(const Node& node) {
  node.check_keys({"k_min", "k_max", "samples", "overlay_delta",
                   "overlay_alpha", "resonances"});
  MirrorCurveSection out;
  out.k_min = node.number("k_min");
  out.k_max = node.number("k_max");
  if (out.k_min < 0.0 || !(out.k_max > out.k_min))
    throw ConfigError("at " + node.path() + ": need 0 <= k_min < k_max");
  out.samples = node.integer_or("samples", 2);
  if (out.samples < 2)
    throw ConfigError("at " + node.path() + ".samples: must be >= 2");
  out.overlay_delta = node.boolean_or("overlay_delta", false);
  if (node.has("overlay_alpha")) {
    out.overlay_alpha = node.number("overlay_alpha");
    require_positive(*out.overlay_alpha, node.path() + ".overlay_alpha");
  }
  out.resonances = node.boolean_or("resonances", false);
  return out;
}

OutputSection parse_output(const Node& node) {
  node.check_keys({"prefix"});
  OutputSection out;
  out.prefix = node.text_or("prefix", "run");
  if (out.prefix.empty())
    throw ConfigError("at " + node.path() + ".prefix: must not be empty");
  for (char c : out.prefix) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                    c == '_' || c == '-';
    if (!ok)
      throw ConfigError("at " + node.path() +
                        ".prefix: use only letters, digits, '_', '-'");
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config(const Json& doc) {
  Node root(doc, "<root>");
  root.check_keys({"geometry", "mirror", "modes", "dynamics", "transfer",
                   "regimes", "mirror_curve", "output"});
  ScenarioConfig out;
  if (root.has("geometry")) out.geometry = parse_geometry(root.child("geometry"));
  if (root.has("mirror")) out.mirror = parse_mirror(root.child("mirror"));
  if (root.has("modes")) out.modes = parse_modes(root.child("modes"));
  if (root.has("dynamics")) out.dynamics = parse_dynamics(root.child("dynamics"));
  if (root.has("transfer")) out.transfer = parse_transfer(root.child("transfer"));
  if (root.has("regimes")) out.regimes = parse_regimes(root.child("regimes"));
  if (root.has("mirror_curve"))
    out.mirror_curve = parse_mirror_curve(root.child("mirror_curve"));
  if (root.has("output")) out.output = parse_output(root.child("output"));
  out.raw = doc;
  return out;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) throw ConfigError("cannot read config file: " + path.string());
  try {
    return Json::parse(stream);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config is not valid JSON (" + path.string() +
                      "): " + e.what());
  }
}

void apply_override(Json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must look like path.to.key=value: " +
                      assignment);
  const std::string path = assignment.substr(0, eq);
  const std::string value_text = assignment.substr(eq + 1);

  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    tokens.push_back(path.substr(start, dot - start));
    if (tokens.back().empty())
      throw ConfigError("override path has an empty segment: " + assignment);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }

  Json value;
  try {
    value = Json::parse(value_text);
  } catch (const nlohmann::json::parse_error&) {
    value = value_text;  // bare string
  }

  Json* cursor = &doc;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (!cursor->is_object() && !cursor->is_null())
      throw ConfigError("override path crosses a non-object at '" +
                        tokens[i] + "': " + assignment);
    cursor = &(*cursor)[tokens[i]];
  }
  if (!cursor->is_object() && !cursor->is_null())
    throw ConfigError("override path crosses a non-object at '" +
                      tokens.back() + "': " + assignment);
  (*cursor)[tokens.back()] = value;
}

}  // namespace cavitylz::config
