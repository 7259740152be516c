#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "blockext/harness.hpp"

using namespace blockext;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kResource = 3 };

int exit_code(const Error& e) {
  if (is_resource_error(e.code())) return kResource;
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::InvalidInput:
    case Errc::PrimeDividesE:
    case Errc::ActionInvalid:
    case Errc::ZNotCentral:
    case Errc::ZNotCyclic:
    case Errc::PhiNotFaithful:
    case Errc::NotSubgroup:
    case Errc::AssumptionViolated:
      return kInput;
    default:
      return kFailed;
  }
}

struct Settings {
  int precision = 0;
  std::int64_t order_bound = 0;
  std::int64_t enum_bound = 0;
  std::int64_t size_guard = 0;
  std::string mode = "crosscheck";
  int jobs = 1;
  bool timing = false;
  std::string output;
  std::string cache_dir;
};

ExtMode parse_mode(const std::string& m) {
  if (m == "closed") return ExtMode::Closed;
  if (m == "oracle") return ExtMode::Oracle;
  return ExtMode::Crosscheck;
}

// Flags beat the spec's [options]; the spec beats built-in defaults.
HarnessOptions resolve(const Settings& st, SpecFile* s) {
  HarnessOptions h;
  h.mode = parse_mode(st.mode);
  h.jobs = st.jobs;
  if (s) {
    if (s->precision) h.ext.precision = *s->precision;
    if (s->size_guard) h.ext.size_guard = *s->size_guard;
    if (s->enum_bound) h.enum_bound = *s->enum_bound;
    if (st.order_bound) s->spec.order_bound = st.order_bound;
  }
  if (st.precision) h.ext.precision = st.precision;
  if (st.size_guard) h.ext.size_guard = st.size_guard;
  if (st.enum_bound) h.enum_bound = st.enum_bound;
  return h;
}

void emit(const Settings& st, json doc, std::chrono::steady_clock::time_point start) {
  if (st.timing)
    doc["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (st.output.empty()) {
    std::cout << render(doc);
  } else {
    std::ofstream out(st.output);
    if (!out) throw Error(Errc::InvalidInput, "cannot write " + st.output);
    out << render(doc);
  }
}

// On-disk memo of Ext classes; a missing or stale file is simply ignored.
fs::path cache_path(const Settings& st, const SpecFile& s, const HarnessOptions& h, int precision) {
  return fs::path(st.cache_dir) / (spec_hash(s) + "-" + mode_name(h.mode) + "-N" + std::to_string(precision) + "-v" +
                                   kVersion + ".json");
}

void load_cache(const fs::path& path, std::int64_t p, ExtTable& t) {
  std::ifstream in(path);
  if (!in) return;
  try {
    const json doc = json::parse(in);
    for (const auto& e : doc.at("entries")) {
      std::vector<Valuation> tors;
      for (const auto& v : e.at("torsion")) tors.emplace_back(p, v.at("num").get<std::int64_t>(), v.at("den").get<std::int64_t>());
      t.seed(e.at("c1"), e.at("c2"), e.at("degree"), OModuleClass(e.at("free_rank"), tors));
    }
  } catch (const json::exception&) {
  }
}

void save_cache(const fs::path& path, const ExtTable& t) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  json entries = json::array();
  for (const auto& [key, e] : t.entries()) {
    json row = to_json(e);
    row.erase("pretty");
    entries.push_back({{"c1", std::get<0>(key)}, {"c2", std::get<1>(key)}, {"degree", std::get<2>(key)},
                       {"free_rank", row["free_rank"]}, {"torsion", row["torsion"]}});
  }
  std::ofstream(path) << json{{"version", kVersion}, {"entries", entries}}.dump() << "\n";
}

SpecFile load(const std::string& path) {
  SpecFile s = read_spec_file(path);
  if (s.name.empty()) s.name = fs::path(path).stem().string();
  return s;
}

int cmd_validate(const Settings& st, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  SpecFile s = load(path);
  resolve(st, &s);
  std::vector<std::string> warnings;
  SemidirectGroup G;
  try {
    G = validate_block_spec(s.spec);
  } catch (const Error& e) {
    if (e.code() != Errc::AssumptionViolated) throw;
    warnings.push_back(e.what());
    BlockSpec relaxed = s.spec;
    relaxed.allow_c2_factors = true;
    G = validate_block_spec(relaxed);
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  emit(st, validate_doc(s, G, warnings), start);
  return kOk;
}

int cmd_chars(const Settings& st, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  SpecFile s = load(path);
  resolve(st, &s);
  const SemidirectGroup G = validate_block_spec(s.spec);
  const BlockCharacters B = build_irr_B(G);
  json doc = chars_doc(s, G, B);
  emit(st, doc, start);
  return doc["degree_check"].get<bool>() ? kOk : kFailed;
}

int cmd_ext(const Settings& st, const std::string& path, int a, int b, int degree) {
  const auto start = std::chrono::steady_clock::now();
  SpecFile s = load(path);
  const HarnessOptions h = resolve(st, &s);
  const SemidirectGroup G = validate_block_spec(s.spec);
  const BlockCharacters B = build_irr_B(G);
  const int n = static_cast<int>(B.irr.size());
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw Error(Errc::InvalidInput, "character indices must lie in 0.." + std::to_string(n - 1));
  const int precision = h.ext.precision ? h.ext.precision : default_precision(G);
  ExtTable t(G, B, h.mode, h.ext, h.jobs);
  if (!st.cache_dir.empty()) load_cache(cache_path(st, s, h, precision), G.p, t);
  const OModuleClass e = t.ext(a, b, degree);
  if (!st.cache_dir.empty()) save_cache(cache_path(st, s, h, precision), t);
  emit(st, ext_doc(s, G, B, a, b, degree, h.mode, precision, e), start);
  return kOk;
}

int cmd_goodsets(const Settings& st, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  SpecFile s = load(path);
  const HarnessOptions h = resolve(st, &s);
  const SemidirectGroup G = validate_block_spec(s.spec);
  const BlockCharacters B = build_irr_B(G);
  const int precision = h.ext.precision ? h.ext.precision : default_precision(G);
  ExtTable t(G, B, h.mode, h.ext, h.jobs);
  if (!st.cache_dir.empty()) load_cache(cache_path(st, s, h, precision), G.p, t);
  const ClassificationReport r = verify_classification(t, h.enum_bound);
  const Quiver q = ext_quiver(t);
  if (!st.cache_dir.empty()) save_cache(cache_path(st, s, h, precision), t);
  emit(st, goodsets_doc(s, G, B, r, q), start);
  return r.holds ? kOk : kFailed;
}

int cmd_verify(const Settings& st, const std::string& path, bool update_golden) {
  const auto start = std::chrono::steady_clock::now();
  HarnessOptions h = resolve(st, nullptr);
  h.update_golden = update_golden;
  std::vector<SpecVerification> specs;
  if (fs::is_directory(path)) {
    specs = verify_corpus(path, h);
  } else {
    SpecFile s = load(path);
    HarnessOptions hs = resolve(st, &s);
    hs.update_golden = update_golden;
    fs::path golden = path;
    golden.replace_extension(".golden.json");
    const bool use_golden = update_golden || fs::exists(golden);
    specs.push_back(verify_spec(s, hs, use_golden ? std::optional<fs::path>(golden) : std::nullopt));
  }
  const auto global = verify_cyclotomic();
  for (const auto& s : specs)
    for (const auto& c : s.checks)
      std::cerr << (c.pass ? "PASS " : "FAIL ") << s.name << " " << c.name << (c.detail.empty() ? "" : ": ")
                << c.detail << "\n";
  for (const auto& c : global) std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
  json doc = verify_doc(specs, global);
  emit(st, doc, start);
  return doc["pass"].get<bool>() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext groups and good subsets for blocks with normal abelian defect group"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--precision", st.precision, "Working precision N of O/p^N (0: automatic)")
      ->envname("BLOCKEXT_PRECISION")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--order-bound", st.order_bound, "Largest permitted |E|")
      ->envname("BLOCKEXT_ORDER_BOUND")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--enum-bound", st.enum_bound, "Largest number of candidate sets")
      ->envname("BLOCKEXT_ENUM_BOUND")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--size-guard", st.size_guard, "Largest bar complex, (|D|-1)^(i+1) * rank")
      ->envname("BLOCKEXT_SIZE_GUARD")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--mode", st.mode, "Ext engine")
      ->envname("BLOCKEXT_MODE")
      ->check(CLI::IsMember({"closed", "oracle", "crosscheck"}));
  app.add_option("--jobs", st.jobs, "Worker threads for pair evaluation")
      ->envname("BLOCKEXT_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", st.timing, "Add wall-clock time to the output");
  app.add_option("-o,--output", st.output, "Write the JSON document here instead of stdout");
  app.add_option("--cache-dir", st.cache_dir, "Directory for the on-disk Ext memo")->envname("BLOCKEXT_CACHE_DIR");

  std::string spec;
  int c1 = 0, c2 = 0, degree = 2;
  bool update_golden = false;
  auto* validate = app.add_subcommand("validate", "Check a spec and report Z, D1, D2");
  validate->add_option("spec", spec, "Spec file")->required();
  auto* chars = app.add_subcommand("chars", "Irr(B), IBr(B) and the decomposition matrix");
  chars->add_option("spec", spec, "Spec file")->required();
  auto* ext = app.add_subcommand("ext", "Ext^i between two characters of Irr(B)");
  ext->add_option("spec", spec, "Spec file")->required();
  ext->add_option("c1", c1, "Index into Irr(B)")->required();
  ext->add_option("c2", c2, "Index into Irr(B)")->required();
  ext->add_option("-i,--degree", degree, "Degree, 0..2")->check(CLI::Range(0, 2));
  auto* goodsets = app.add_subcommand("goodsets", "Enumerate good subsets and compare with 1 x theta");
  goodsets->add_option("spec", spec, "Spec file")->required();
  auto* verify = app.add_subcommand("verify", "Run every check on a spec or a corpus directory");
  verify->add_option("path", spec, "Spec file or corpus directory")->required();
  verify->add_flag("--update-golden", update_golden, "Rewrite the golden documents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  try {
    if (*validate) return cmd_validate(st, spec);
    if (*chars) return cmd_chars(st, spec);
    if (*ext) return cmd_ext(st, spec, c1, c2, degree);
    if (*goodsets) return cmd_goodsets(st, spec);
    if (*verify) return cmd_verify(st, spec, update_golden);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    json doc{{"format", 1}, {"version", kVersion}, {"command", command}, {"error", error_json(e)}};
    std::cout << render(doc);
    return exit_code(e);
  }
  return kInput;
}
