#pragma once

// Command pipelines and their JSON run reports:
//   { "command", "inputs", "result", "checks": [{"name", "pass"}], "timing_ms" }
// Every report embeds the resolved spec and the matrices and exponents
// needed to recompute its checks with reverify().

#include <optional>
#include <string>
#include <vector>

#include "nilsep/separability.hpp"
#include "nilsep/spec_io.hpp"

namespace nilsep {

struct ReportCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // human output only

  friend bool operator==(const ReportCheck& a, const ReportCheck& b) { return a.name == b.name && a.pass == b.pass; }
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<ReportCheck> checks;
  std::int64_t timing_ms = 0;
  std::vector<std::string> lines;  // human-readable summary

  void check(std::string name, bool pass, std::string detail = {});
  bool ok() const;
  const ReportCheck* first_failure() const;
  Json to_json() const;
};

struct GroupSource {
  std::string preset;     // preset name, or empty
  ProductGroupSpec group;
};

GroupSource group_source(const std::string& preset, const std::string& spec_file);

struct RunOptions {
  std::size_t max_order = kCrossCheckCap;  // closure cap for materialised quotients
  std::optional<UTElement> z2_rep;         // overrides the declared representative
};

RunReport run_classify(const GroupSource& src, const Int& p);
RunReport run_witness(const GroupSource& src, const Int& p, unsigned depth, const RunOptions& opts = {});
RunReport run_separate(const GroupSource& src, const Int& p, const std::string& a, const std::string& b,
                       const RunOptions& opts = {});
/// Scans the witness pair when x and y are both empty.
RunReport run_scan(const GroupSource& src, const Int& p, const std::string& x, const std::string& y, unsigned depth,
                   const RunOptions& opts = {});

struct SelftestOptions {
  bool corpus = true;                     // false: lattice suites only
  std::vector<std::string> extra_tables;  // Cayley-table files added to the corpus
  std::uint64_t seed = 20240601;
};

RunReport run_selftest(const SelftestOptions& opts);

/// Recomputes every check of a serialized report from its embedded data.
std::vector<ReportCheck> reverify(const Json& report);

}  // namespace nilsep
