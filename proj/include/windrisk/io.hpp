#pragma once

#include <string>

namespace windrisk {

/// Single funnel for every file the tool writes.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

/// FNV-1a 64-bit digest as 16 hex chars; used to fingerprint input fixtures
/// in reports.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace windrisk
