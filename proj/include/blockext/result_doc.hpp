#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blockext/analysis.hpp"
#include "blockext/errors.hpp"
#include "blockext/spec_file.hpp"

namespace blockext {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// {"format": 1, "version": ..., "command": ..., "spec": name}
json envelope(const std::string& command, const SpecFile& s);

json to_json(const Valuation& v);
/// {"free_rank", "torsion": [{"num", "den"}], "pretty"}
json to_json(const OModuleClass& e);
/// {"conductor", "coeffs": ["1", "-1/2", ...]}
json to_json(const CycloNumber& z);
json to_json(const ClassFunction& f);
json to_json(const Quiver& q);

json group_json(const SemidirectGroup& G);
/// Short label of irr[k]: index, orbit, lambda as an exponent vector, chi_index, degree.
json character_label(const SemidirectGroup& G, const BlockCharacters& B, int k);
json goodness_json(const SemidirectGroup& G, const GoodnessReport& r);

json validate_doc(const SpecFile& s, const SemidirectGroup& G, const std::vector<std::string>& warnings);
json chars_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B);
json ext_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B, int a, int b, int i,
             ExtMode mode, int precision, const OModuleClass& e);
json goodsets_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B,
                  const ClassificationReport& r, const Quiver& q);

/// {"code": name, "message": ...}
json error_json(const Error& e);

std::string mode_name(ExtMode m);
/// Pretty-printed, two-space indent, trailing newline.
std::string render(const json& doc);

}  // namespace blockext
