#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace luttff {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool pass = false;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

// Self-contained run record: parameters, result tables, per-check status.
// The printed body is byte-stable across runs; wall-clock timings go to a
// separate channel so they never perturb it.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Table> tables;
  std::vector<CheckResult> checks;
  std::vector<StageTiming> timings;

  bool all_pass() const;
  void print(std::ostream& out) const;
  void print_timings(std::ostream& out) const;
  void write_json(const std::string& path) const;
  // One file per table: <stem>_<table>.csv next to the given path.
  void write_csv(const std::string& base_path) const;
};

// Deterministic "%.12g" rendering used by every writer.
std::string format_number(double v);
std::string format_cell(const Cell& cell);

}  // namespace luttff
