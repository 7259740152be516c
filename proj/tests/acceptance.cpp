// One line per acceptance criterion; exit status 1 if any fails.
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include "blockext/char_table.hpp"
#include "blockext/errors.hpp"
#include "blockext/harness.hpp"
#include "examples.hpp"

using namespace blockext;
namespace fs = std::filesystem;

namespace {

struct Block {
  std::string name;
  SemidirectGroup G;
  BlockCharacters B;
};

Block block(const std::string& name, const BlockSpec& s) {
  Block b{name, validate_block_spec(s), {}};
  b.B = build_irr_B(b.G);
  return b;
}

std::vector<Block> examples() {
  return {block("A", testing::example_a()), block("B", testing::example_b()), block("C", testing::example_c())};
}

ModuleRecipe line(const SemidirectGroup& G, int lambda) {
  return [&G, lambda](const RingPtr& R) { return line_module(G, all_of_d(G), lambda, char_table(G.E).front(), R); };
}

std::string pair_text(const std::string& where, int a, int b, int i) {
  return where + " (" + std::to_string(a) + "," + std::to_string(b) + ") degree " + std::to_string(i);
}

// Sets `detail` to the first failure, or leaves it empty.
using Criterion = std::function<bool(std::string& detail)>;

bool closed_equals_oracle(std::string& detail) {
  int count = 0;
  for (auto [p, exps] : std::vector<std::pair<std::int64_t, std::vector<int>>>{
           {3, {2}}, {3, {1, 1}}, {3, {1, 2}}, {2, {3}}, {2, {2, 2}}}) {
    const auto G = validate_block_spec(testing::pure_abelian(p, exps));
    for (int a = 0; a < G.d_order(); ++a)
      for (int b = 0; b < G.d_order(); ++b)
        for (int i = 0; i <= 2; ++i) {
          ++count;
          const OModuleClass closed = ext_abelian_closed(G.D, a, b, i);
          const OModuleClass oracle = ext_oracle(G, line(G, a), line(G, b), i);
          if (!(closed == oracle)) {
            detail = pair_text("p=" + std::to_string(p), a, b, i) + ": " + closed.pretty() + " vs " + oracle.pretty();
            return false;
          }
        }
  }
  detail = std::to_string(count) + " classes";
  return true;
}

bool kunneth_consistency(std::string& detail) {
  const Block b = block("B", testing::example_b());
  const int n = static_cast<int>(b.B.irr.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const OModuleClass closed = ext_block(b.G, b.B.irr[x], b.B.irr[y], 2, ExtMode::Closed);
      const OModuleClass oracle = ext_block(b.G, b.B.irr[x], b.B.irr[y], 2, ExtMode::Oracle);
      if (!(closed == oracle)) {
        detail = pair_text("B", x, y, 2) + ": " + closed.pretty() + " vs " + oracle.pretty();
        return false;
      }
    }
  detail = std::to_string(n * n) + " pairs";
  return true;
}

bool classification(std::string& detail) {
  const std::vector<std::size_t> expected = {1, 3, 1};
  auto ex = examples();
  for (std::size_t k = 0; k < ex.size(); ++k) {
    ExtTable t(ex[k].G, ex[k].B);
    const auto r = verify_classification(t);
    detail += (k ? ", " : "") + ex[k].name + ": " + std::to_string(r.found.size());
    if (!r.holds || r.found.size() != expected[k]) return false;
  }
  return true;
}

bool uct(std::string& detail) {
  int tested = 0;
  for (const auto& b : examples()) {
    const int n = static_cast<int>(b.B.irr.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool common = false;
        for (std::size_t psi = 0; psi < b.B.ibr.size(); ++psi)
          common = common || (b.B.decomposition[x][psi] && b.B.decomposition[y][psi]);
        if (common) continue;
        ++tested;
        const int lhs = ext_block(b.G, b.B.irr[x], b.B.irr[y], 2, ExtMode::Oracle).residue_dimension();
        const int rhs = ext1_modp(b.G, b.B.irr[x], b.B.irr[y]);
        if (lhs != rhs) {
          detail = pair_text(b.name, x, y, 2) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
          return false;
        }
      }
  }
  detail = std::to_string(tested) + " pairs";
  return true;
}

bool quiver(std::string& detail) {
  for (const auto& b : examples()) {
    ExtTable t(b.G, b.B);
    const Quiver q = ext_quiver(t);
    detail += (detail.empty() ? "" : ", ") + b.name + ": " + std::to_string(q.vertices) + " vertices " +
              std::to_string(q.edges.size()) + " edges";
    if (!q.connected) return false;
  }
  return true;
}

bool forcing(std::string& detail) {
  int checked = 0;
  for (const auto& b : examples()) {
    ExtTable t(b.G, b.B);
    const ForcingReport r = check_conjugacy_forcing(t);
    checked += r.pairs_checked;
    if (!r.violations.empty()) {
      detail = b.name + ": " + std::to_string(r.violations.size()) + " violations";
      return false;
    }
  }
  detail = std::to_string(checked) + " pairs, 0 violations";
  return true;
}

bool cyclotomic(std::string& detail) {
  for (const auto& c : verify_cyclotomic())
    if (!c.pass) {
      detail = c.name;
      return false;
    }
  return true;
}

// Row and column orthogonality of the full table of G.
bool orthogonal(const GroupPtr& G) {
  const auto table = char_table(G);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      if (inner_product(table[i], table[j]) != Rational(i == j ? 1 : 0)) return false;
  const int m = G->exponent();
  for (int c = 0; c < G->num_classes(); ++c)
    for (int d = 0; d < G->num_classes(); ++d) {
      CycloNumber s(m);
      for (const auto& chi : table) s += chi.values[c].embed(m) * chi.values[d].embed(m).conj();
      const Rational expect = c == d ? Rational(G->order() / G->class_size(c)) : Rational(0);
      if (!(s == CycloNumber(m, expect))) return false;
    }
  return true;
}

bool character_sanity(std::string& detail, const fs::path& corpus) {
  const std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"C4", FiniteGroup::from_permutations({{1, 2, 3, 0}})},
      {"Q8", FiniteGroup::from_permutations(testing::quaternion_generators())},
      {"S3", FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}})},
      {"SL(2,3)", FiniteGroup::from_permutations(testing::sl23_generators())}};
  for (const auto& [name, G] : groups)
    if (!orthogonal(G)) {
      detail = name + " table not orthogonal";
      return false;
    }
  int specs = 0;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.path().extension() != ".spec") continue;
    const SpecFile s = read_spec_file(entry.path());
    const auto G = validate_block_spec(s.spec);
    const auto B = build_irr_B(G);
    std::int64_t sum = 0;
    for (const auto& c : B.irr) sum += c.degree * c.degree;
    if (sum != G.G->order() / G.z_order()) {
      detail = entry.path().filename().string() + ": degree squares sum to " + std::to_string(sum);
      return false;
    }
    ++specs;
  }
  detail = "4 tables, " + std::to_string(specs) + " corpus specs";
  return specs > 0;
}

bool precision_stability(std::string& detail, const fs::path& corpus) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    if (entry.path().extension() != ".spec") continue;
    const SpecFile s = read_spec_file(entry.path());
    const auto G = validate_block_spec(s.spec);
    const auto B = build_irr_B(G);
    ExtOptions hi;
    hi.precision = default_precision(G) + 2;
    const int n = static_cast<int>(B.irr.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int i = 0; i <= 2; ++i) {
          ++count;
          const OModuleClass lo = ext_block(G, B.irr[x], B.irr[y], i, ExtMode::Oracle);
          const OModuleClass up = ext_block(G, B.irr[x], B.irr[y], i, ExtMode::Oracle, hi);
          if (!(lo == up)) {
            detail = pair_text(s.name, x, y, i) + ": " + lo.pretty() + " vs " + up.pretty();
            return false;
          }
        }
  }
  detail = std::to_string(count) + " classes at N and N+2";
  return count > 0;
}

bool shapiro_order(std::string& detail) {
  const Block b = block("A", testing::example_a());
  const int n = static_cast<int>(b.B.irr.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i <= 2; ++i) {
        const auto first = ext_shapiro(b.G, all_of_d(b.G), b.B.irr[x], b.B.irr[y], i, ShapiroSide::First);
        const auto second = ext_shapiro(b.G, all_of_d(b.G), b.B.irr[x], b.B.irr[y], i, ShapiroSide::Second);
        if (!(first == second)) {
          detail = pair_text("A", x, y, i) + ": " + first.pretty() + " vs " + second.pretty();
          return false;
        }
      }
  detail = std::to_string(3 * n * n) + " classes";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path corpus = argc > 1 ? fs::path(argv[1]) : fs::path(BLOCKEXT_CORPUS_DIR);
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"closed form equals oracle on abelian D", closed_equals_oracle},
      {"Kunneth: closed equals oracle on example B", kunneth_consistency},
      {"good sets are exactly 1 x theta (A, B, C)", classification},
      {"k (x) Ext^2 = Ext^1 over k without common constituents", uct},
      {"Ext quiver connected (A, B, C)", quiver},
      {"non-zero good Ext^2 forces conjugate lambdas", forcing},
      {"cyclotomic product identity", cyclotomic},
      {"character tables orthogonal, degree sums", [&](std::string& d) { return character_sanity(d, corpus); }},
      {"Ext stable from N to N+2 on the corpus", [&](std::string& d) { return precision_stability(d, corpus); }},
      {"Shapiro order independence (A)", shapiro_order},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[k].second(detail);
    } catch (const Error& e) {
      detail = e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (k + 1) << ". " << criteria[k].first
              << (detail.empty() ? "" : " [" + detail + "]") << std::endl;
  }
  return failed ? 1 : 0;
}
