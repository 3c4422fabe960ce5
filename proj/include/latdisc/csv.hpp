#pragma once

// Minimal RFC-4180-style CSV emission: header row mandatory, `.` decimal
// point, fields quoted only when they contain a delimiter, quote or newline.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace latdisc {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out_ << (i ? "," : "") << csv_escape(fields[i]);
        out_ << "\n";
    }

  private:
    std::ostream& out_;
};

}  // namespace latdisc
