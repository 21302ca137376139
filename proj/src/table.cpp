#include "logitfp/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace logitfp {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_field(v); }
  };
  return std::visit(Visitor{}, c);
}

std::string render_json(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(double v) const {
      return std::isfinite(v) ? format_real(v) : "null";
    }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      return "\"" + json_escape(v) + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add: column count mismatch");
  rows.push_back(std::move(row));
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render_csv(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  out << '[';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << (i ? ", " : "") << '"' << json_escape(t.columns[i]) << "\": "
          << render_json(t.rows[r][i]);
    }
    out << '}';
  }
  out << (t.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(std::ostream& out, const Table& t, OutputFormat f) {
  if (f == OutputFormat::Csv) {
    write_csv(out, t);
  } else {
    write_json(out, t);
  }
}

}  // namespace logitfp
