#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace descent::cli {

Cell text(std::string s) { return {Cell::Kind::text, std::move(s), 0, false}; }

Cell number(double x) { return {Cell::Kind::number, format_number(x), x, false}; }

Cell integer(long long x) { return {Cell::Kind::integer, std::to_string(x), static_cast<double>(x), false}; }

Cell exact(const Rational& q) { return text(to_string(q)); }

Cell exact(const BigInt& z) { return text(z.get_str()); }

Cell flag(bool b) { return {Cell::Kind::flag, b ? "true" : "false", 0, b}; }

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number:
      if (!std::isfinite(c.number)) return c.text;
      return std::stod(c.text);  // the 12-digit value, so output is stable
    case Cell::Kind::integer:
      return std::stoll(c.text);
    case Cell::Kind::flag:
      return c.flag;
    case Cell::Kind::text:
      break;
  }
  return c.text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void render_table(const Report& r, std::ostream& out) {
  out << "# " << r.command << ": " << r.scheme << '\n';
  for (const auto& [k, v] : r.parameters) out << "# " << k << " = " << v << '\n';
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t j = 0; j < r.columns.size(); ++j) width[j] = r.columns[j].size();
  for (const auto& row : r.rows) {
    for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) width[j] = std::max(width[j], row[j].text.size());
  }
  auto line = [&](auto&& field) {
    for (std::size_t j = 0; j < width.size(); ++j) {
      const std::string s = field(j);
      if (j > 0) out << "  ";
      out << s;
      if (j + 1 < width.size()) out << std::string(width[j] - s.size(), ' ');
    }
    out << '\n';
  };
  if (!r.columns.empty()) {
    line([&](std::size_t j) { return r.columns[j]; });
    for (const auto& row : r.rows) line([&](std::size_t j) { return j < row.size() ? row[j].text : std::string(); });
  }
  for (const auto& [k, v] : r.summary) out << k << ": " << v.text << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

void render_csv(const Report& r, std::ostream& out) {
  for (std::size_t j = 0; j < r.columns.size(); ++j) out << (j ? "," : "") << csv_field(r.columns[j]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(row[j].text);
    out << '\n';
  }
  for (const auto& [k, v] : r.summary) out << "# " << k << "=" << v.text << '\n';
  for (const auto& note : r.notes) out << "# note: " << note << '\n';
}

void render_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["scheme"] = r.scheme;
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) doc["parameters"][k] = v;
  doc["columns"] = r.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size() && j < r.columns.size(); ++j) obj[r.columns[j]] = to_json(row[j]);
    doc["rows"].push_back(std::move(obj));
  }
  doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) doc["summary"][k] = to_json(v);
  doc["notes"] = r.notes;
  doc["ok"] = r.ok;
  out << doc.dump(2) << '\n';
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::table: render_table(report, out); break;
    case Format::csv: render_csv(report, out); break;
    case Format::json: render_json(report, out); break;
  }
}

}  // namespace descent::cli
