#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blockext/ext_block.hpp"

namespace blockext {

/// Memoized Ext^2 (and Ext^1 mod p) between characters of one block.
class ExtTable {
 public:
  ExtTable(const SemidirectGroup& G, const BlockCharacters& B, ExtMode mode = ExtMode::Crosscheck,
           ExtOptions opt = {}, int jobs = 1);

  const SemidirectGroup& group() const { return G_; }
  const BlockCharacters& block() const { return B_; }

  /// Ext^i(irr[a], irr[b]); each ordered pair and degree is computed once.
  OModuleClass ext(int a, int b, int i = 2);
  /// dim_k Ext^1 between the reductions of irr[a] and irr[b].
  int ext1_modp(int a, int b);
  /// Computes the listed ordered pairs, spread over `jobs` threads.
  void prefetch(const std::vector<std::pair<int, int>>& pairs, int i = 2);

  /// Preloads a known value (on-disk cache).
  void seed(int a, int b, int i, const OModuleClass& e);
  /// All computed Ext classes, keyed (a, b, i).
  std::map<std::tuple<int, int, int>, OModuleClass> entries() const;

 private:
  const SemidirectGroup& G_;
  const BlockCharacters& B_;
  ExtMode mode_;
  ExtOptions opt_;
  int jobs_;
  mutable std::mutex mu_;
  std::map<std::tuple<int, int, int>, OModuleClass> ext_;
  std::map<std::pair<int, int>, int> modp_;
};

/// Torsion only, valuations integral and >= 1 (p > 2) or >= 2 (p = 2).
bool is_good_class(const OModuleClass& e, std::int64_t p);

/// One lift per Brauer character: members[psi] indexes B.irr.
struct CandidateSet {
  std::vector<int> members;
  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
  friend auto operator<=>(const CandidateSet&, const CandidateSet&) = default;
};

struct PairEvidence {
  int c1 = 0, c2 = 0;
  OModuleClass ext2;
  bool conforming = true;
};

struct GoodnessReport {
  CandidateSet set;
  std::vector<PairEvidence> pairs;
  bool good = true;
  std::optional<int> theta;  // lambda (index in D) of the matching 1 x theta, when the set is predicted
};

GoodnessReport is_good(ExtTable& t, const CandidateSet& X);

/// Every choice function psi -> lifts_of(psi); throws EnumerationBoundExceeded
/// when the number of candidates exceeds `bound`.
std::vector<CandidateSet> all_candidates(const BlockCharacters& B, std::int64_t bound = 1000000);
std::vector<GoodnessReport> enumerate_good_sets(ExtTable& t, std::int64_t bound = 1000000);

/// For each theta in Irr(D2): the characters (1 x theta, chi), chi in Irr(E | phi).
/// Paired with the lambda index of 1 x theta.
std::vector<std::pair<int, CandidateSet>> predicted_good_sets(const SemidirectGroup& G, const BlockCharacters& B);

struct ClassificationReport {
  bool holds = true;
  std::vector<GoodnessReport> found;
  std::vector<std::pair<int, CandidateSet>> predicted;
  std::vector<GoodnessReport> unexpected;  // good but not predicted
  std::vector<GoodnessReport> missing;     // predicted but not good
};
ClassificationReport verify_classification(ExtTable& t, std::int64_t bound = 1000000);

/// Whether the only E-stable linear character of D1 is trivial.  `d1`
/// overrides the subgroup (negative controls).
bool check_stable_chars(const SemidirectGroup& G);
bool check_stable_chars(const SemidirectGroup& G, const std::vector<int>& d1);

struct ForcingViolation {
  int c1 = 0, c2 = 0;
  OModuleClass ext2;
};
struct ForcingReport {
  int pairs_checked = 0;
  int pairs_triggered = 0;  // nonzero conforming Ext^2
  std::vector<ForcingViolation> violations;
};
/// Nonzero Ext^2 passing the integrality threshold must come from E-conjugate lambdas.
ForcingReport check_conjugacy_forcing(ExtTable& t);

struct Quiver {
  int vertices = 0;                       // |IBr(B)|
  std::vector<std::pair<int, int>> edges;  // mu < psi
  bool connected = false;
  bool in_hypothesis = true;  // D nontrivial
};
/// Vertices IBr(B); an edge when Ext^1 over k is nonzero in either direction.
Quiver ext_quiver(ExtTable& t);

}  // namespace blockext
