#pragma once

#include <string>

#include "json.hpp"

namespace cli {

// 17 significant digits, enough to round-trip an IEEE double
std::string fmt17(double v);

// RFC-4180 style quoting; only applied when the field needs it
std::string csv_field(const std::string& s);

// "# becrad <version>" plus the resolved config as a single comment line;
// strip_header_config() on the file contents re-parses to the same config
std::string header_comment(const nlohmann::json& resolved);
std::string strip_header_config(const std::string& file_contents);

// path empty -> stdout; contents written verbatim (LF line endings)
void write_output(const std::string& path, const std::string& contents);

}  // namespace cli
