#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "becrad.h"
#include "config.hpp"

namespace cli {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string header_comment(const nlohmann::json& resolved) {
    std::string out = "# becrad ";
    out += br_version();
    out += "\n# ";
    out += resolved.dump();
    out += "\n";
    return out;
}

std::string strip_header_config(const std::string& file_contents) {
    std::size_t pos = 0;
    while (pos < file_contents.size()) {
        std::size_t eol = file_contents.find('\n', pos);
        if (eol == std::string::npos) eol = file_contents.size();
        if (file_contents.compare(pos, 3, "# {") == 0)
            return file_contents.substr(pos + 2, eol - pos - 2);
        pos = eol + 1;
    }
    throw ConfigError("no config header line found");
}

void write_output(const std::string& path, const std::string& contents) {
    if (path.empty()) {
        std::cout << contents;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << contents;
    if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace cli
