#include "civicroute/config.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "civicroute/errors.hpp"

namespace civicroute {

const ConfigValue* ConfigTable::find(std::string_view key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

bool operator==(const ConfigTable& a, const ConfigTable& b) { return a.entries == b.entries; }

namespace {

bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  ConfigTable parse() {
    ConfigTable root;
    ConfigTable* current = &root;
    std::string current_path;
    std::set<std::string> declared;

    while (true) {
      skip_blank();
      if (at_end()) {
        break;
      }
      if (peek() == '[') {
        std::vector<std::string> path = parse_header();
        std::string joined;
        for (const auto& part : path) {
          joined += joined.empty() ? part : "." + part;
        }
        if (!declared.insert(joined).second) {
          fail("table [" + joined + "] declared twice");
        }
        current = descend(&root, path);
        current_path = joined;
      } else {
        parse_key_value(current);
      }
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(source_, line_, column(), msg);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  // Spaces, tabs, carriage returns; never newlines.
  void skip_inline_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      advance();
    }
  }

  void skip_comment() {
    while (!at_end() && peek() != '\n') {
      advance();
    }
  }

  // Whitespace, newlines, comments: used between top-level statements and
  // inside brackets.
  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void expect_end_of_line(const char* what) {
    skip_inline_ws();
    if (at_end()) {
      return;
    }
    if (peek() == '#') {
      skip_comment();
      return;
    }
    if (peek() != '\n') {
      fail(std::string("unexpected characters after ") + what);
    }
  }

  std::string parse_key() {
    if (at_end() || !is_key_char(peek())) {
      fail("expected a key");
    }
    std::string key;
    while (!at_end() && is_key_char(peek())) {
      key.push_back(peek());
      advance();
    }
    return key;
  }

  std::vector<std::string> parse_dotted_key() {
    std::vector<std::string> path;
    path.push_back(parse_key());
    while (!at_end() && peek() == '.') {
      advance();
      path.push_back(parse_key());
    }
    return path;
  }

  std::vector<std::string> parse_header() {
    advance();  // '['
    skip_inline_ws();
    std::vector<std::string> path = parse_dotted_key();
    skip_inline_ws();
    if (at_end() || peek() != ']') {
      fail("expected ']' to close table header");
    }
    advance();
    expect_end_of_line("table header");
    return path;
  }

  // Finds or creates the chain of nested tables for `path`. Only appends to
  // tables along the walk, so the returned pointer stays valid until the
  // next header is processed.
  ConfigTable* descend(ConfigTable* table, const std::vector<std::string>& path) {
    for (const auto& key : path) {
      ConfigValue* existing = nullptr;
      for (auto& [k, v] : table->entries) {
        if (k == key) {
          existing = &v;
          break;
        }
      }
      if (existing == nullptr) {
        table->entries.emplace_back(key, ConfigValue{ConfigTable{}, line_, column()});
        existing = &table->entries.back().second;
      }
      if (!existing->is_table()) {
        fail("key '" + key + "' is already defined as a value, not a table");
      }
      table = &existing->as_table();
    }
    return table;
  }

  void parse_key_value(ConfigTable* table) {
    std::vector<std::string> path = parse_dotted_key();
    skip_inline_ws();
    if (at_end() || peek() != '=') {
      fail("expected '=' after key");
    }
    advance();
    skip_inline_ws();
    ConfigValue value = parse_value();
    expect_end_of_line("value");

    const std::string leaf = path.back();
    path.pop_back();
    ConfigTable* target = descend(table, path);
    if (target->contains(leaf)) {
      fail("duplicate key '" + leaf + "'");
    }
    target->entries.emplace_back(leaf, std::move(value));
  }

  ConfigValue parse_value() {
    if (at_end()) {
      fail("expected a value");
    }
    const int vline = line_;
    const int vcol = column();
    const char c = peek();
    ConfigValue out;
    if (c == '"') {
      out.value = parse_string();
    } else if (c == '[') {
      out.value = parse_array();
    } else if (c == '{') {
      out.value = parse_inline_table();
    } else {
      out = parse_scalar();
    }
    out.line = vline;
    out.col = vcol;
    return out;
  }

  std::string parse_string() {
    advance();  // opening quote
    std::string s;
    while (true) {
      if (at_end() || peek() == '\n') {
        fail("unterminated string");
      }
      char c = peek();
      advance();
      if (c == '"') {
        break;
      }
      if (c == '\\') {
        if (at_end()) {
          fail("unterminated escape");
        }
        const char e = peek();
        advance();
        switch (e) {
          case '"': s.push_back('"'); break;
          case '\\': s.push_back('\\'); break;
          case 'n': s.push_back('\n'); break;
          case 't': s.push_back('\t'); break;
          case 'r': s.push_back('\r'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        s.push_back(c);
      }
    }
    return s;
  }

  std::vector<ConfigValue> parse_array() {
    advance();  // '['
    std::vector<ConfigValue> items;
    skip_blank();
    if (!at_end() && peek() == ']') {
      advance();
      return items;
    }
    while (true) {
      skip_blank();
      items.push_back(parse_value());
      skip_blank();
      if (at_end()) {
        fail("unterminated array");
      }
      if (peek() == ',') {
        advance();
        skip_blank();
        if (!at_end() && peek() == ']') {  // trailing comma
          advance();
          break;
        }
        continue;
      }
      if (peek() == ']') {
        advance();
        break;
      }
      fail("expected ',' or ']' in array");
    }
    return items;
  }

  ConfigTable parse_inline_table() {
    advance();  // '{'
    ConfigTable table;
    skip_blank();
    if (!at_end() && peek() == '}') {
      advance();
      return table;
    }
    while (true) {
      skip_blank();
      const std::string key = parse_key();
      skip_inline_ws();
      if (at_end() || peek() != '=') {
        fail("expected '=' in inline table");
      }
      advance();
      skip_inline_ws();
      if (table.contains(key)) {
        fail("duplicate key '" + key + "'");
      }
      table.entries.emplace_back(key, parse_value());
      skip_blank();
      if (at_end()) {
        fail("unterminated inline table");
      }
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        break;
      }
      fail("expected ',' or '}' in inline table");
    }
    return table;
  }

  ConfigValue parse_scalar() {
    std::string token;
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',' || c == ']' || c == '}' ||
          c == '#') {
        break;
      }
      token.push_back(c);
      advance();
    }
    if (token.empty()) {
      fail("expected a value");
    }
    if (token == "true") {
      return ConfigValue{true, 0, 0};
    }
    if (token == "false") {
      return ConfigValue{false, 0, 0};
    }

    const bool looks_float = token.find_first_of(".eE") != std::string::npos;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!looks_float) {
      std::int64_t i = 0;
      const auto res = std::from_chars(first, last, i);
      if (res.ec == std::errc() && res.ptr == last) {
        return ConfigValue{i, 0, 0};
      }
    }
    double d = 0.0;
    const auto res = std::from_chars(first, last, d);
    if (res.ec == std::errc() && res.ptr == last && std::isfinite(d)) {
      return ConfigValue{d, 0, 0};
    }
    fail("invalid value '" + token + "'");
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

ConfigTable parse_config(std::string_view text, const std::string& source_name) {
  return Parser(text, source_name).parse();
}

}  // namespace civicroute
