#include "luttff/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "luttff/errors.hpp"

namespace luttff {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell))
    return format_number(std::get<double>(cell));
  return std::get<std::string>(cell);
}

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void RunReport::print(std::ostream& out) const {
  out << "command: " << command << "\n";
  if (!parameters.empty()) {
    out << "parameters:\n";
    for (const auto& [key, value] : parameters)
      out << "  " << key << " = " << value << "\n";
  }
  for (const auto& table : tables) {
    out << "table " << table.name << ":\n  ";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "\t" : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
      out << "  ";
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "\t" : "") << format_cell(row[c]);
      out << "\n";
    }
  }
  for (const auto& check : checks) {
    out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": measured "
        << format_number(check.measured) << " vs tolerance "
        << format_number(check.tolerance) << "\n";
  }
}

void RunReport::print_timings(std::ostream& out) const {
  for (const auto& t : timings)
    out << "timing " << t.stage << ": " << format_number(t.milliseconds)
        << " ms\n";
}

void RunReport::write_json(const std::string& path) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  j["parameters"] = params;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& table : tables) {
    nlohmann::ordered_json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        if (std::holds_alternative<long long>(cell))
          r.push_back(std::get<long long>(cell));
        else if (std::holds_alternative<double>(cell))
          r.push_back(std::get<double>(cell));
        else
          r.push_back(std::get<std::string>(cell));
      }
      t["rows"].push_back(r);
    }
    j["tables"].push_back(t);
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : checks) {
    j["checks"].push_back({{"name", check.name},
                           {"tolerance", check.tolerance},
                           {"measured", check.measured},
                           {"pass", check.pass}});
  }
  j["timings"] = nlohmann::ordered_json::array();
  for (const auto& t : timings)
    j["timings"].push_back({{"stage", t.stage}, {"ms", t.milliseconds}});

  std::ofstream out(path);
  if (!out) throw domain_error("write_json: cannot open " + path);
  out << j.dump(2) << "\n";
}

void RunReport::write_csv(const std::string& base_path) const {
  std::string stem = base_path;
  const std::string ext = ".csv";
  if (stem.size() >= ext.size() &&
      stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0)
    stem.resize(stem.size() - ext.size());
  for (const auto& table : tables) {
    const std::string path = stem + "_" + table.name + ext;
    std::ofstream out(path);
    if (!out) throw domain_error("write_csv: cannot open " + path);
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << format_cell(row[c]);
      out << "\n";
    }
  }
}

}  // namespace luttff
