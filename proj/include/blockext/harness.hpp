#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blockext/result_doc.hpp"

namespace blockext {

struct HarnessOptions {
  ExtOptions ext;
  ExtMode mode = ExtMode::Crosscheck;
  int jobs = 1;
  std::int64_t enum_bound = 1000000;
  bool update_golden = false;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SpecVerification {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Full sweep on one spec: character sums, closed form against the oracle in
/// degrees 0..2, precision stability, both Shapiro orders, UCT, quiver,
/// conjugacy forcing, stable characters, classification of good sets, and
/// the golden document when `golden` names an existing file.
SpecVerification verify_spec(const SpecFile& s, const HarnessOptions& opt,
                             const std::optional<std::filesystem::path>& golden = std::nullopt);

/// The cyclotomic product identity for the fixed (p, n) list.
std::vector<CheckResult> verify_cyclotomic();

/// Every *.spec in `dir` (sorted), with <stem>.golden.json alongside.
/// Throws InvalidInput on an empty corpus.
std::vector<SpecVerification> verify_corpus(const std::filesystem::path& dir, const HarnessOptions& opt);

/// The goodsets document of a spec: the golden file content.
json golden_doc(const SpecFile& s, const HarnessOptions& opt);

json verify_doc(const std::vector<SpecVerification>& specs, const std::vector<CheckResult>& global);

}  // namespace blockext
