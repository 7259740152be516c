#include "blockext/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "blockext/errors.hpp"

namespace blockext {

ExtTable::ExtTable(const SemidirectGroup& G, const BlockCharacters& B, ExtMode mode, ExtOptions opt, int jobs)
    : G_(G), B_(B), mode_(mode), opt_(opt), jobs_(std::max(1, jobs)) {}

OModuleClass ExtTable::ext(int a, int b, int i) {
  const auto key = std::make_tuple(a, b, i);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ext_.find(key);
    if (it != ext_.end()) return it->second;
  }
  OModuleClass e = ext_block(G_, B_.irr[a], B_.irr[b], i, mode_, opt_);
  std::lock_guard<std::mutex> lock(mu_);
  ext_.emplace(key, e);
  return e;
}

int ExtTable::ext1_modp(int a, int b) {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = modp_.find(key);
    if (it != modp_.end()) return it->second;
  }
  const int d = blockext::ext1_modp(G_, B_.irr[a], B_.irr[b], opt_);
  std::lock_guard<std::mutex> lock(mu_);
  modp_.emplace(key, d);
  return d;
}

void ExtTable::prefetch(const std::vector<std::pair<int, int>>& pairs, int i) {
  if (jobs_ == 1 || pairs.size() < 2) {
    for (auto [a, b] : pairs) ext(a, b, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto work = [&] {
    for (std::size_t k; (k = next++) < pairs.size();) {
      try {
        ext(pairs[k].first, pairs[k].second, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs_; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void ExtTable::seed(int a, int b, int i, const OModuleClass& e) {
  std::lock_guard<std::mutex> lock(mu_);
  ext_.emplace(std::make_tuple(a, b, i), e);
}

std::map<std::tuple<int, int, int>, OModuleClass> ExtTable::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return ext_;
}

bool is_good_class(const OModuleClass& e, std::int64_t p) {
  if (e.free_rank() != 0) return false;
  const std::int64_t least = p == 2 ? 2 : 1;
  for (const Valuation& v : e.torsion())
    if (!v.is_integer() || v.num() < least) return false;
  return true;
}

GoodnessReport is_good(ExtTable& t, const CandidateSet& X) {
  std::vector<std::pair<int, int>> pairs;
  for (int a : X.members)
    for (int b : X.members) pairs.emplace_back(a, b);
  t.prefetch(pairs);
  GoodnessReport r;
  r.set = X;
  for (auto [a, b] : pairs) {
    PairEvidence ev{a, b, t.ext(a, b), true};
    ev.conforming = is_good_class(ev.ext2, t.group().p);
    r.good = r.good && ev.conforming;
    r.pairs.push_back(std::move(ev));
  }
  if (r.good)
    for (const auto& [lambda, S] : predicted_good_sets(t.group(), t.block()))
      if (S == X) r.theta = lambda;
  return r;
}

std::vector<CandidateSet> all_candidates(const BlockCharacters& B, std::int64_t bound) {
  std::vector<std::vector<int>> lifts;
  std::int64_t count = 1;
  for (std::size_t psi = 0; psi < B.ibr.size(); ++psi) {
    lifts.push_back(lifts_of(static_cast<int>(psi), B));
    count *= static_cast<std::int64_t>(lifts.back().size());
    if (count > bound)
      throw Error(Errc::EnumerationBoundExceeded,
                  "more than " + std::to_string(bound) + " candidate sets");
  }
  std::vector<CandidateSet> out;
  if (count == 0) return out;
  std::vector<std::size_t> digit(lifts.size(), 0);
  for (;;) {
    CandidateSet X;
    for (std::size_t psi = 0; psi < lifts.size(); ++psi) X.members.push_back(lifts[psi][digit[psi]]);
    out.push_back(std::move(X));
    std::size_t k = lifts.size();
    while (k > 0) {
      --k;
      if (++digit[k] < lifts[k].size()) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (lifts.empty()) return out;
  }
}

std::vector<GoodnessReport> enumerate_good_sets(ExtTable& t, std::int64_t bound) {
  const auto candidates = all_candidates(t.block(), bound);
  std::set<std::pair<int, int>> needed;
  for (const auto& X : candidates)
    for (int a : X.members)
      for (int b : X.members) needed.emplace(a, b);
  t.prefetch(std::vector<std::pair<int, int>>(needed.begin(), needed.end()));
  std::vector<GoodnessReport> out;
  for (const auto& X : candidates) {
    GoodnessReport r = is_good(t, X);
    if (r.good) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<int, CandidateSet>> predicted_good_sets(const SemidirectGroup& G, const BlockCharacters& B) {
  std::vector<std::pair<int, CandidateSet>> out;
  for (int y = 0; y < G.d_order(); ++y) {
    if (restricted_char_order(G.D, y, G.D1) != 1) continue;
    CandidateSet X;
    for (std::size_t psi = 0; psi < B.ibr.size(); ++psi)
      for (int k : lifts_of(static_cast<int>(psi), B))
        if (B.irr[k].lambda == y) X.members.push_back(k);
    if (X.members.size() != B.ibr.size())
      throw Error(Errc::DimensionCheck, "1 x theta does not give one lift per Brauer character");
    out.emplace_back(y, std::move(X));
  }
  return out;
}

ClassificationReport verify_classification(ExtTable& t, std::int64_t bound) {
  ClassificationReport r;
  r.found = enumerate_good_sets(t, bound);
  r.predicted = predicted_good_sets(t.group(), t.block());
  std::set<CandidateSet> found, predicted;
  for (const auto& g : r.found) found.insert(g.set);
  for (const auto& [lambda, X] : r.predicted) predicted.insert(X);
  for (const auto& g : r.found)
    if (!predicted.count(g.set)) r.unexpected.push_back(g);
  for (const auto& [lambda, X] : r.predicted)
    if (!found.count(X)) r.missing.push_back(is_good(t, X));
  r.holds = r.unexpected.empty() && r.missing.empty();
  return r;
}

bool check_stable_chars(const SemidirectGroup& G, const std::vector<int>& d1) {
  const std::int64_t ex = G.D.exponent();
  auto signature = [&](int y) {
    std::vector<std::int64_t> s;
    for (int x : d1) s.push_back(((G.D.pairing(y, x) % ex) + ex) % ex);
    return s;
  };
  for (int y = 0; y < G.d_order(); ++y) {
    const auto sy = signature(y);
    bool fixed = true;
    for (int e : G.E->generators()) fixed = fixed && signature(G.act_on_char(e, y)) == sy;
    if (fixed && std::any_of(sy.begin(), sy.end(), [](std::int64_t v) { return v != 0; })) return false;
  }
  return true;
}

bool check_stable_chars(const SemidirectGroup& G) { return check_stable_chars(G, G.D1); }

ForcingReport check_conjugacy_forcing(ExtTable& t) {
  const auto& irr = t.block().irr;
  const int n = static_cast<int>(irr.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs.emplace_back(a, b);
  t.prefetch(pairs);
  ForcingReport r;
  for (auto [a, b] : pairs) {
    ++r.pairs_checked;
    const OModuleClass e = t.ext(a, b);
    if (e.is_zero() || !is_good_class(e, t.group().p)) continue;
    ++r.pairs_triggered;
    if (irr[a].orbit != irr[b].orbit) r.violations.push_back({a, b, e});
  }
  return r;
}

Quiver ext_quiver(ExtTable& t) {
  const BlockCharacters& B = t.block();
  Quiver q;
  q.vertices = static_cast<int>(B.ibr.size());
  q.in_hypothesis = t.group().d_order() > 1;
  // The simple module of psi is the reduction of (1, psi).
  std::vector<int> simple;
  for (int psi = 0; psi < q.vertices; ++psi) {
    int found = -1;
    for (int k : lifts_of(psi, B))
      if (B.irr[k].lambda == 0) found = k;
    if (found < 0) throw Error(Errc::DimensionCheck, "no lift with trivial lambda");
    simple.push_back(found);
  }
  for (int a = 0; a < q.vertices; ++a)
    for (int b = a + 1; b < q.vertices; ++b)
      if (t.ext1_modp(simple[a], simple[b]) > 0 || t.ext1_modp(simple[b], simple[a]) > 0) q.edges.emplace_back(a, b);
  std::vector<int> comp(static_cast<std::size_t>(q.vertices));
  for (int v = 0; v < q.vertices; ++v) comp[v] = v;
  std::function<int(int)> root = [&](int v) { return comp[v] == v ? v : comp[v] = root(comp[v]); };
  for (auto [a, b] : q.edges) comp[root(a)] = root(b);
  int roots = 0;
  for (int v = 0; v < q.vertices; ++v) roots += root(v) == v;
  q.connected = roots <= 1;
  return q;
}

}  // namespace blockext
