#include "blockext/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "blockext/char_table.hpp"
#include "blockext/errors.hpp"

namespace blockext {

namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Runs `body`; an Error becomes a failed check carrying its message.
template <class F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult r{name, true, ""};
  try {
    body(r);
  } catch (const Error& e) {
    if (is_resource_error(e.code())) throw;
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

bool share_constituent(const BlockCharacters& B, int a, int b) {
  for (std::size_t psi = 0; psi < B.ibr.size(); ++psi)
    if (B.decomposition[a][psi] != 0 && B.decomposition[b][psi] != 0) return true;
  return false;
}

}  // namespace

bool SpecVerification::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json golden_doc(const SpecFile& s, const HarnessOptions& opt) {
  const SemidirectGroup G = validate_block_spec(s.spec);
  const BlockCharacters B = build_irr_B(G);
  ExtTable t(G, B, opt.mode, opt.ext, opt.jobs);
  return goodsets_doc(s, G, B, verify_classification(t, opt.enum_bound), ext_quiver(t));
}

SpecVerification verify_spec(const SpecFile& s, const HarnessOptions& opt,
                             const std::optional<std::filesystem::path>& golden) {
  SpecVerification out;
  out.name = s.name;
  SemidirectGroup G;
  BlockCharacters B;
  CheckResult setup = run_check("characters", [&](CheckResult& r) {
    G = validate_block_spec(s.spec);
    B = build_irr_B(G);
    r.detail = std::to_string(B.irr.size()) + " characters, degree squares sum to |G|/|Z|";
  });
  out.checks.push_back(setup);
  if (!setup.pass) return out;

  const int n = static_cast<int>(B.irr.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs.emplace_back(a, b);

  out.checks.push_back(run_check("stable_chars", [&](CheckResult& r) {
    r.pass = check_stable_chars(G);
    if (!r.pass) r.detail = "a non-trivial E-stable character of D1 exists";
  }));

  ExtTable t(G, B, opt.mode, opt.ext, opt.jobs);
  out.checks.push_back(run_check("closed_vs_oracle", [&](CheckResult& r) {
    for (int i = 0; i <= 2; ++i) t.prefetch(pairs, i);
    r.detail = std::to_string(3 * pairs.size()) + " classes, mode " + mode_name(opt.mode);
  }));
  if (!out.checks.back().pass) return out;

  out.checks.push_back(run_check("precision_stability", [&](CheckResult& r) {
    ExtOptions hi = opt.ext;
    hi.precision = (opt.ext.precision ? opt.ext.precision : default_precision(G)) + 2;
    for (auto [a, b] : pairs) {
      const OModuleClass e = ext_shapiro(G, all_of_d(G), B.irr[a], B.irr[b], 2, ShapiroSide::First, hi);
      if (!(e == t.ext(a, b))) {
        r.pass = false;
        r.detail = pair_text(a, b) + " changes with precision";
        return;
      }
    }
    r.detail = "Ext^2 identical at precision " + std::to_string(hi.precision);
  }));

  out.checks.push_back(run_check("shapiro_order", [&](CheckResult& r) {
    for (int i = 0; i <= 2; ++i)
      for (auto [a, b] : pairs) {
        const OModuleClass e = ext_shapiro(G, all_of_d(G), B.irr[a], B.irr[b], i, ShapiroSide::Second, opt.ext);
        if (!(e == t.ext(a, b, i))) {
          r.pass = false;
          r.detail = pair_text(a, b) + " degree " + std::to_string(i) + ": " + e.pretty() + " vs " +
                     t.ext(a, b, i).pretty();
          return;
        }
      }
  }));

  out.checks.push_back(run_check("uct", [&](CheckResult& r) {
    int tested = 0;
    for (auto [a, b] : pairs) {
      if (share_constituent(B, a, b)) continue;
      ++tested;
      const int lhs = t.ext(a, b).residue_dimension(), rhs = t.ext1_modp(a, b);
      if (lhs != rhs) {
        r.pass = false;
        r.detail = pair_text(a, b) + ": dim k(x)Ext^2 = " + std::to_string(lhs) + ", dim Ext^1_k = " +
                   std::to_string(rhs);
        return;
      }
    }
    r.detail = std::to_string(tested) + " pairs without common constituent";
  }));

  out.checks.push_back(run_check("quiver", [&](CheckResult& r) {
    const Quiver q = ext_quiver(t);
    r.pass = q.connected || !q.in_hypothesis;
    r.detail = std::to_string(q.vertices) + " vertices, " + std::to_string(q.edges.size()) + " edges" +
               (q.connected ? ", connected" : ", not connected") + (q.in_hypothesis ? "" : ", D trivial");
  }));

  out.checks.push_back(run_check("conjugacy_forcing", [&](CheckResult& r) {
    const ForcingReport f = check_conjugacy_forcing(t);
    r.pass = f.violations.empty();
    r.detail = std::to_string(f.pairs_triggered) + " of " + std::to_string(f.pairs_checked) + " pairs triggered, " +
               std::to_string(f.violations.size()) + " violations";
  }));

  out.checks.push_back(run_check("classification", [&](CheckResult& r) {
    if (!G.no_c2_factor) {
      r.detail = "skipped: D has a C_2 factor";
      return;
    }
    const ClassificationReport c = verify_classification(t, opt.enum_bound);
    r.pass = c.holds;
    r.detail = std::to_string(c.found.size()) + " good sets, " + std::to_string(c.predicted.size()) + " predicted";
  }));

  if (golden) {
    out.checks.push_back(run_check("golden", [&](CheckResult& r) {
      const json doc = goodsets_doc(s, G, B, verify_classification(t, opt.enum_bound), ext_quiver(t));
      if (opt.update_golden) {
        std::ofstream(*golden) << render(doc);
        r.detail = "written " + golden->filename().string();
        return;
      }
      std::ifstream in(*golden);
      if (!in) {
        r.pass = false;
        r.detail = "missing " + golden->filename().string();
        return;
      }
      json expected;
      try {
        expected = json::parse(in);
      } catch (const json::exception& e) {
        r.pass = false;
        r.detail = golden->filename().string() + " is not JSON: " + e.what();
        return;
      }
      r.pass = expected == doc;
      r.detail = r.pass ? "matches " + golden->filename().string() : "differs from " + golden->filename().string();
    }));
  }
  return out;
}

std::vector<CheckResult> verify_cyclotomic() {
  std::vector<CheckResult> out;
  for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const std::string name = "cyclotomic_identity p=" + std::to_string(p) + " n=" + std::to_string(n);
    out.push_back(run_check(name, [&](CheckResult& r) { r.pass = verify_cyclotomic_identity(p, n); }));
  }
  return out;
}

std::vector<SpecVerification> verify_corpus(const std::filesystem::path& dir, const HarnessOptions& opt) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(Errc::InvalidInput, dir.string() + " is not a directory");
  std::vector<fs::path> specs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".spec") specs.push_back(entry.path());
  if (specs.empty()) throw Error(Errc::InvalidInput, "no .spec files in " + dir.string());
  std::sort(specs.begin(), specs.end());
  std::vector<SpecVerification> out;
  for (const auto& path : specs) {
    SpecFile s = read_spec_file(path);
    if (s.name.empty()) s.name = path.stem().string();
    fs::path golden = path;
    golden.replace_extension(".golden.json");
    const bool use_golden = opt.update_golden || fs::exists(golden);
    out.push_back(verify_spec(s, opt, use_golden ? std::optional<fs::path>(golden) : std::nullopt));
  }
  return out;
}

json verify_doc(const std::vector<SpecVerification>& specs, const std::vector<CheckResult>& global) {
  auto checks_json = [](const std::vector<CheckResult>& checks) {
    json a = json::array();
    for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
  };
  json d;
  d["format"] = 1;
  d["version"] = kVersion;
  d["command"] = "verify";
  bool pass = true;
  json list = json::array();
  for (const auto& s : specs) {
    list.push_back({{"spec", s.name}, {"pass", s.pass()}, {"checks", checks_json(s.checks)}});
    pass = pass && s.pass();
  }
  for (const auto& c : global) pass = pass && c.pass;
  d["specs"] = list;
  d["global"] = checks_json(global);
  d["pass"] = pass;
  return d;
}

}  // namespace blockext
