#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace civicroute {

// Shortest round-trip decimal form via std::to_chars; locale-independent,
// '.' separator, byte-stable across runs.
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view bytes);

// Throws ConfigError if the file cannot be read/written. Content is passed
// through byte-for-byte ('\n' endings preserved).
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace civicroute
