#include "conifold/report.hpp"

#include <fstream>
#include <ostream>

namespace conifold {

CheckRecord CheckRecord::le(std::string name, std::string claim, double measured,
                            double bound, std::string details) {
  CheckRecord r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.measured = measured;
  r.cmp = "<=";
  r.bound_hi = bound;
  r.pass = measured <= bound;
  r.details = std::move(details);
  return r;
}

CheckRecord CheckRecord::ge(std::string name, std::string claim, double measured,
                            double bound, std::string details) {
  CheckRecord r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.measured = measured;
  r.cmp = ">=";
  r.bound_lo = bound;
  r.pass = measured >= bound;
  r.details = std::move(details);
  return r;
}

CheckRecord CheckRecord::within(std::string name, std::string claim, double measured,
                                double lo, double hi, std::string details) {
  CheckRecord r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.measured = measured;
  r.cmp = "in";
  r.bound_lo = lo;
  r.bound_hi = hi;
  r.pass = measured >= lo && measured <= hi;
  r.details = std::move(details);
  return r;
}

ordered_json CheckRecord::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["claim"] = claim;
  j["measured"] = measured;
  j["cmp"] = cmp;
  if (cmp == "<=")
    j["bound"] = bound_hi;
  else if (cmp == ">=")
    j["bound"] = bound_lo;
  else
    j["bound"] = ordered_json::array({bound_lo, bound_hi});
  j["pass"] = pass;
  if (!details.empty()) j["details"] = details;
  return j;
}

bool Report::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["config"] = config;
  ordered_json recs = ordered_json::array();
  for (const auto& r : records) recs.push_back(r.to_json());
  j["records"] = recs;
  j["excluded_samples"] = excluded_samples;
  j["all_pass"] = all_pass();
  j["wall_ms"] = wall_ms;
  return j;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_json().dump(2) << "\n";
}

void Report::print_lines(std::ostream& os) const {
  for (const auto& r : records) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": measured " << r.measured
       << " " << r.cmp << " ";
    if (r.cmp == "in")
      os << "[" << r.bound_lo << ", " << r.bound_hi << "]";
    else
      os << (r.cmp == "<=" ? r.bound_hi : r.bound_lo);
    if (!r.details.empty()) os << "  (" << r.details << ")";
    os << "\n";
  }
}

}  // namespace conifold
