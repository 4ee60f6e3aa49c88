#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace civicroute {

struct ConfigValue;

// Key/value table with preserved insertion order, so saved files and error
// listings are deterministic.
struct ConfigTable {
  std::vector<std::pair<std::string, ConfigValue>> entries;

  const ConfigValue* find(std::string_view key) const;
  bool contains(std::string_view key) const { return find(key) != nullptr; }

  friend bool operator==(const ConfigTable&, const ConfigTable&);
};

// One parsed value of the scenario/key-value text format: a TOML-style
// subset with [dotted.table] headers, `key = value` pairs, strings, numbers,
// booleans, arrays, and inline tables.
struct ConfigValue {
  std::variant<bool, std::int64_t, double, std::string, std::vector<ConfigValue>, ConfigTable> value;
  int line = 0;
  int col = 0;

  bool is_bool() const { return std::holds_alternative<bool>(value); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(value); }
  bool is_number() const { return is_int() || std::holds_alternative<double>(value); }
  bool is_string() const { return std::holds_alternative<std::string>(value); }
  bool is_array() const { return std::holds_alternative<std::vector<ConfigValue>>(value); }
  bool is_table() const { return std::holds_alternative<ConfigTable>(value); }

  bool as_bool() const { return std::get<bool>(value); }
  std::int64_t as_int() const { return std::get<std::int64_t>(value); }
  double as_double() const {
    return is_int() ? static_cast<double>(std::get<std::int64_t>(value)) : std::get<double>(value);
  }
  const std::string& as_string() const { return std::get<std::string>(value); }
  const std::vector<ConfigValue>& as_array() const { return std::get<std::vector<ConfigValue>>(value); }
  const ConfigTable& as_table() const { return std::get<ConfigTable>(value); }
  ConfigTable& as_table() { return std::get<ConfigTable>(value); }

  friend bool operator==(const ConfigValue& a, const ConfigValue& b) { return a.value == b.value; }
};

// Parses the whole document into a root table. Throws ParseError with
// 1-based line/column on malformed input; `source_name` prefixes messages.
ConfigTable parse_config(std::string_view text, const std::string& source_name);

}  // namespace civicroute
