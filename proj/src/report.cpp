#include "weylprice/report.hpp"

#include "weylprice/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace weylprice {

using nlohmann::json;

namespace {

// JSON has no NaN or infinity; both become null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_or_nan(const json& j) {
  return j.is_number() ? j.get<double>() : std::numeric_limits<double>::quiet_NaN();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return csv_field(j.get<std::string>());
  return csv_field(j.dump());
}

}  // namespace

Check make_check(std::string name, json value, json reference, double residual, double tolerance,
                 json detail) {
  Check c;
  c.name = std::move(name);
  c.value = std::move(value);
  c.reference = std::move(reference);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.detail = std::move(detail);
  return c;
}

Check at_least(std::string name, double value, double lower, json detail) {
  const double shortfall = std::isfinite(value) ? std::max(0.0, lower - value) : value;
  return make_check(std::move(name), finite_or_null(value), lower, shortfall, 0.0, std::move(detail));
}

Check failed_check(std::string name, std::string error) {
  Check c;
  c.name = std::move(name);
  c.residual = std::numeric_limits<double>::quiet_NaN();
  c.error = std::move(error);
  return c;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Report::inputs_digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(inputs.dump())));
  return buf;
}

json Report::to_json() const {
  json records = json::array();
  for (const Check& c : checks) {
    json r{{"name", c.name},
           {"value", c.value},
           {"reference", c.reference},
           {"residual", finite_or_null(c.residual)},
           {"tolerance", c.tolerance},
           {"pass", c.pass}};
    if (!c.error.empty()) r["error"] = c.error;
    if (!c.detail.is_null()) r["detail"] = c.detail;
    records.push_back(std::move(r));
  }
  json out{{"command", command},
           {"inputs", inputs},
           {"inputs_digest", inputs_digest()},
           {"version", version},
           {"pass", pass()},
           {"checks", std::move(records)}};
  out["seed"] = seed ? json(*seed) : json(nullptr);
  if (wall_clock) out["wall_clock_s"] = *wall_clock;
  return out;
}

Report Report::from_json(const json& j) {
  if (!j.is_object() || !j.contains("checks") || !j["checks"].is_array())
    throw InputError("report: expected an object with a 'checks' array");
  Report r;
  r.command = j.value("command", "");
  r.inputs = j.value("inputs", json(nullptr));
  r.version = j.value("version", kVersion);
  if (j.contains("seed") && j["seed"].is_number_unsigned()) r.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("wall_clock_s")) r.wall_clock = number_or_nan(j["wall_clock_s"]);
  for (const json& rec : j["checks"]) {
    Check c;
    c.name = rec.value("name", "");
    c.value = rec.value("value", json(nullptr));
    c.reference = rec.value("reference", json(nullptr));
    c.residual = number_or_nan(rec.value("residual", json(nullptr)));
    c.tolerance = number_or_nan(rec.value("tolerance", json(nullptr)));
    c.pass = rec.value("pass", false);
    c.error = rec.value("error", "");
    c.detail = rec.value("detail", json(nullptr));
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::csv() const {
  std::string out = "name,value,reference,residual,tolerance,pass,error\n";
  for (const Check& c : checks) {
    out += csv_field(c.name) + "," + csv_value(c.value) + "," + csv_value(c.reference) + "," +
           csv_value(finite_or_null(c.residual)) + "," + json(c.tolerance).dump() + "," +
           (c.pass ? "true" : "false") + "," + csv_field(c.error) + "\n";
  }
  return out;
}

}  // namespace weylprice
