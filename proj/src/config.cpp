#include "spinbeam/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <set>
#include <sstream>

#include "spinbeam/error.hpp"

namespace spinbeam {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidSpec, field + ": " + why);
}

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) fail(where + "." + item.key(), "unknown field");
  }
}

const json& object_at(const json& parent, const char* key, const std::string& where) {
  if (!parent.contains(key)) fail(where + "." + key, "missing");
  const json& v = parent.at(key);
  if (!v.is_object()) fail(where + "." + key, "must be an object");
  return v;
}

double number(const json& obj, const char* key, const std::string& where) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) fail(field, "missing");
  const json& v = obj.at(key);
  if (!v.is_number()) fail(field, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

double number_or(const json& obj, const char* key, const std::string& where, double fallback) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

int integer(const json& obj, const char* key, const std::string& where) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) fail(field, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(field, "must be an integer");
  return v.get<int>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) fail(field, "missing");
  const json& v = obj.at(key);
  if (!v.is_string()) fail(field, "must be a string");
  return v.get<std::string>();
}

BeamSpec parse_beam(const json& b) {
  const std::string where = "beam";
  reject_unknown(b, where, {"configuration", "j", "sigma", "k", "kind", "kappa", "w0", "method", "paraxial_phase"});

  const std::string conf = text(b, "configuration", where);
  Configuration configuration;
  if (conf == "radial") {
    configuration = Configuration::Radial;
  } else if (conf == "azimuthal") {
    configuration = Configuration::Azimuthal;
  } else {
    fail("beam.configuration", "expected \"radial\" or \"azimuthal\"");
  }

  HalfInt j = HalfInt::integer(0);
  try {
    j = HalfInt::parse(text(b, "j", where));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidSpec) throw;
    fail("beam.j", e.what());
  }
  const int sigma = integer(b, "sigma", where);
  const double k = number(b, "k", where);

  const std::string kind = text(b, "kind", where);
  BeamSpec::Kind variant = NonDiffractive{0.0};
  if (kind == "nondiffractive") {
    for (const char* key : {"w0", "method", "paraxial_phase"}) {
      if (b.contains(key)) fail(std::string("beam.") + key, "not used by non-diffractive beams");
    }
    variant = NonDiffractive{number(b, "kappa", where)};
  } else if (kind == "finite") {
    if (b.contains("kappa")) fail("beam.kappa", "not used by finite beams");
    Finite fin{GaussianSpectrum(1.0), Method::ParaxialClosedForm, false};
    try {
      fin.spectrum = GaussianSpectrum(number(b, "w0", where));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidSpec) throw;
      fail("beam.w0", e.what());
    }
    const std::string method = b.contains("method") ? text(b, "method", where) : "paraxial";
    if (method == "paraxial") {
      fin.method = Method::ParaxialClosedForm;
    } else if (method == "quadrature") {
      fin.method = Method::Quadrature;
    } else {
      fail("beam.method", "expected \"paraxial\" or \"quadrature\"");
    }
    if (b.contains("paraxial_phase")) {
      if (!b.at("paraxial_phase").is_boolean()) fail("beam.paraxial_phase", "must be a boolean");
      fin.paraxial_phase = b.at("paraxial_phase").get<bool>();
    }
    variant = fin;
  } else {
    fail("beam.kind", "expected \"nondiffractive\" or \"finite\"");
  }

  try {
    return BeamSpec(configuration, j, sigma, k, variant);
  } catch (const Error& e) {
    fail("beam", e.what());
  }
}

GridSpec parse_grid(const json& g) {
  const std::string where = "grid";
  reject_unknown(g, where, {"r_min", "r_max", "n_r", "n_phi", "z_values"});
  GridSpec grid;
  grid.r_min = number_or(g, "r_min", where, 0.0);
  grid.r_max = number(g, "r_max", where);
  grid.n_r = integer(g, "n_r", where);
  grid.n_phi = g.contains("n_phi") ? integer(g, "n_phi", where) : 1;
  if (grid.r_min < 0.0) fail("grid.r_min", "must be >= 0");
  if (!(grid.r_max > grid.r_min)) fail("grid.r_max", "must exceed r_min");
  if (grid.n_r < 1) fail("grid.n_r", "must be >= 1");
  if (grid.n_phi < 1) fail("grid.n_phi", "must be >= 1");
  if (g.contains("z_values")) {
    const json& zs = g.at("z_values");
    if (!zs.is_array()) fail("grid.z_values", "must be an array of numbers");
    grid.z_values.clear();
    for (const auto& z : zs) {
      if (!z.is_number() || !std::isfinite(z.get<double>())) fail("grid.z_values", "must be an array of numbers");
      grid.z_values.push_back(z.get<double>());
    }
  }
  return grid;
}

Outputs parse_outputs(const json& o) {
  if (!o.is_array()) fail("outputs", "must be an array");
  Outputs out{false, false, false};
  for (const auto& item : o) {
    if (!item.is_string()) fail("outputs", "entries must be strings");
    const auto name = item.get<std::string>();
    if (name == "wavefunction") {
      out.wavefunction = true;
    } else if (name == "density") {
      out.density = true;
    } else if (name == "polarization") {
      out.polarization = true;
    } else {
      fail("outputs", "unknown output \"" + name + "\"");
    }
  }
  return out;
}

}  // namespace

double GridSpec::r_at(int i) const {
  return n_r == 1 ? r_min : r_min + (r_max - r_min) * i / (n_r - 1);
}

double GridSpec::phi_at(int i) const { return 2.0 * std::numbers::pi * i / n_phi; }

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  fail("format", "expected \"csv\" or \"json\"");
}

RunConfig parse_config(const std::string& content) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    fail("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config", "top level must be an object");
  reject_unknown(doc, "config", {"beam", "grid", "outputs", "format", "tolerances", "charge"});

  RunConfig cfg;
  if (doc.contains("beam")) cfg.beam = parse_beam(object_at(doc, "beam", "config"));
  if (doc.contains("grid")) cfg.grid = parse_grid(object_at(doc, "grid", "config"));
  if (doc.contains("outputs")) cfg.outputs = parse_outputs(doc.at("outputs"));
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) fail("format", "must be a string");
    cfg.format = parse_format(doc.at("format").get<std::string>());
  }
  if (doc.contains("tolerances")) {
    const json& t = object_at(doc, "tolerances", "config");
    reject_unknown(t, "tolerances", {"limit_spread"});
    cfg.limit_spread = number_or(t, "limit_spread", "tolerances", kLimitSpread);
    if (!(cfg.limit_spread > 0.0)) fail("tolerances.limit_spread", "must be > 0");
  }
  if (doc.contains("charge")) {
    const json& c = object_at(doc, "charge", "config");
    reject_unknown(c, "charge", {"z", "n_r", "r_max"});
    cfg.charge.z = number_or(c, "z", "charge", 0.0);
    if (c.contains("n_r")) cfg.charge.n_r = integer(c, "n_r", "charge");
    if (c.contains("r_max")) cfg.charge.r_max = number(c, "r_max", "charge");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("config", "cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    content = buffer.str();
  }
  return parse_config(content);
}

}  // namespace spinbeam
