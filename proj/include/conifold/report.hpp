#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace conifold {

using ordered_json = nlohmann::ordered_json;

/// One verified claim: a measured value against its bound. `claim` is a
/// stable anchor naming the fact being checked, so reports are
/// self-documenting.
struct CheckRecord {
  std::string name;
  std::string claim;
  double measured = 0.0;
  std::string cmp;  // "<=", ">=", "in"
  double bound_lo = 0.0;
  double bound_hi = 0.0;
  bool pass = false;
  std::string details;

  static CheckRecord le(std::string name, std::string claim, double measured, double bound,
                        std::string details = {});
  static CheckRecord ge(std::string name, std::string claim, double measured, double bound,
                        std::string details = {});
  static CheckRecord within(std::string name, std::string claim, double measured,
                            double lo, double hi, std::string details = {});

  ordered_json to_json() const;
};

struct Report {
  int schema_version = 1;
  std::string command;
  ordered_json config;
  std::vector<CheckRecord> records;
  std::int64_t excluded_samples = 0;
  std::int64_t wall_ms = 0;

  bool all_pass() const;
  ordered_json to_json() const;
  void write(const std::string& path) const;
  void print_lines(std::ostream& os) const;
};

}  // namespace conifold
