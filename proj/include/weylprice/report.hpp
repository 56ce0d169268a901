#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weylprice {

inline constexpr const char* kVersion = "0.1.0";

/// One verified quantity. Every record keeps the convention
/// pass ⇔ residual ≤ tolerance; one-sided bounds store their shortfall.
struct Check {
  std::string name;
  nlohmann::json value;
  nlohmann::json reference;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Set when the check raised instead of producing a residual.
  std::string error;
  /// Free-form extras (matrices, h, quadrature order, ...).
  nlohmann::json detail;
};

/// Fills `pass` from residual and tolerance; a non-finite residual fails.
Check make_check(std::string name, nlohmann::json value, nlohmann::json reference, double residual,
                 double tolerance, nlohmann::json detail = nullptr);
/// Passes iff value ≥ lower; residual = max(0, lower − value), tolerance 0.
Check at_least(std::string name, double value, double lower, nlohmann::json detail = nullptr);
Check failed_check(std::string name, std::string error);

struct Report {
  std::string command;
  nlohmann::json inputs;
  std::string version = kVersion;
  std::optional<std::uint64_t> seed;
  std::optional<double> wall_clock;
  std::vector<Check> checks;

  /// Every record passes (vacuously true for no records).
  bool pass() const;
  /// FNV-1a 64 of the compact inputs dump, as 16 hex digits.
  std::string inputs_digest() const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  /// Pretty JSON with sorted keys and a trailing newline.
  std::string dump() const;
  /// name,value,reference,residual,tolerance,pass,error
  std::string csv() const;
};

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace weylprice
