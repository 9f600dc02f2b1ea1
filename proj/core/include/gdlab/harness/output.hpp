#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gdlab::harness {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Shortest round-trip decimal form.
std::string num(double v);
std::string num(std::int64_t v);
std::string num(std::uint64_t v);
inline std::string num(int v) { return num(static_cast<std::int64_t>(v)); }

/// One RFC 4180 record terminated by CRLF.
void write_csv_record(std::ostream& os, const std::vector<std::string>& fields);
std::string csv_field(std::string_view field);

}  // namespace gdlab::harness
