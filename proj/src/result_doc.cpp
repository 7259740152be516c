#include "blockext/result_doc.hpp"

#include "blockext/errors.hpp"

namespace blockext {

namespace {

json vec_json(const std::vector<std::int64_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

std::string mode_name(ExtMode m) {
  switch (m) {
    case ExtMode::Closed: return "closed";
    case ExtMode::Oracle: return "oracle";
    case ExtMode::Crosscheck: return "crosscheck";
  }
  return "?";
}

json envelope(const std::string& command, const SpecFile& s) {
  json d;
  d["format"] = 1;
  d["version"] = kVersion;
  d["command"] = command;
  d["spec"] = s.name;
  return d;
}

json to_json(const Valuation& v) { return {{"num", v.num()}, {"den", v.den()}}; }

json to_json(const OModuleClass& e) {
  json t = json::array();
  for (const auto& v : e.torsion()) t.push_back(to_json(v));
  return {{"free_rank", e.free_rank()}, {"torsion", t}, {"pretty", e.pretty()}};
}

json to_json(const CycloNumber& z) {
  json c = json::array();
  for (const auto& q : z.coeffs()) c.push_back(q.get_str());
  return {{"conductor", z.conductor()}, {"coeffs", c}};
}

json to_json(const ClassFunction& f) {
  json v = json::array();
  for (const auto& z : f.values) v.push_back(to_json(z));
  return v;
}

json to_json(const Quiver& q) {
  json edges = json::array();
  for (auto [a, b] : q.edges) edges.push_back({a, b});
  return {{"vertices", q.vertices}, {"edges", edges}, {"connected", q.connected}, {"in_hypothesis", q.in_hypothesis}};
}

json group_json(const SemidirectGroup& G) {
  json d;
  d["p"] = G.p;
  d["D_exponents"] = G.D.exponents();
  d["D_order"] = G.d_order();
  d["E_order"] = G.E->order();
  d["Z_order"] = G.z_order();
  d["phi_exponent"] = G.phi_exponent;
  d["D1_invariants"] = G.D1_invariants;
  d["D2_invariants"] = G.D2_invariants;
  d["no_c2_factor"] = G.no_c2_factor;
  return d;
}

json character_label(const SemidirectGroup& G, const BlockCharacters& B, int k) {
  const BlockCharacter& c = B.irr[k];
  return {{"index", k},
          {"orbit", c.orbit},
          {"lambda", vec_json(G.D.vec(c.lambda))},
          {"chi_index", c.chi_index},
          {"degree", c.degree}};
}

json goodness_json(const SemidirectGroup& G, const GoodnessReport& r) {
  json d;
  d["members"] = r.set.members;
  d["good"] = r.good;
  d["theta_lambda"] = r.theta ? vec_json(G.D.vec(*r.theta)) : json(nullptr);
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"c1", p.c1}, {"c2", p.c2}, {"ext2", to_json(p.ext2)}, {"conforming", p.conforming}});
  d["pairs"] = pairs;
  return d;
}

json validate_doc(const SpecFile& s, const SemidirectGroup& G, const std::vector<std::string>& warnings) {
  json d = envelope("validate", s);
  d["valid"] = true;
  d["group"] = group_json(G);
  d["warnings"] = warnings;
  return d;
}

json chars_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B) {
  json d = envelope("chars", s);
  d["group"] = group_json(G);
  json irr = json::array();
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < B.irr.size(); ++k) {
    json row = character_label(G, B, static_cast<int>(k));
    row["values"] = to_json(B.irr[k].induced);
    row["decomposition"] = B.decomposition[k];
    irr.push_back(row);
    sum += B.irr[k].degree * B.irr[k].degree;
  }
  json ibr = json::array();
  for (const auto& f : B.ibr) ibr.push_back({{"degree", f.degree().get_str()}, {"values", to_json(f)}});
  d["irr"] = irr;
  d["ibr"] = ibr;
  const std::int64_t target = static_cast<std::int64_t>(G.G->order()) / G.z_order();
  d["degree_square_sum"] = sum;
  d["G_order_over_Z"] = target;
  d["degree_check"] = sum == target;
  return d;
}

json ext_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B, int a, int b, int i,
             ExtMode mode, int precision, const OModuleClass& e) {
  json d = envelope("ext", s);
  d["c1"] = character_label(G, B, a);
  d["c2"] = character_label(G, B, b);
  d["degree"] = i;
  d["mode"] = mode_name(mode);
  d["precision"] = precision;
  d["ext"] = to_json(e);
  const ShapeReport shape = ext_shape_classify(e, i);
  d["shape"] = {{"conforming", shape.conforming}, {"detail", shape.detail}};
  return d;
}

json goodsets_doc(const SpecFile& s, const SemidirectGroup& G, const BlockCharacters& B,
                  const ClassificationReport& r, const Quiver& q) {
  json d = envelope("goodsets", s);
  json chars = json::array();
  for (std::size_t k = 0; k < B.irr.size(); ++k) chars.push_back(character_label(G, B, static_cast<int>(k)));
  d["characters"] = chars;
  json found = json::array(), predicted = json::array(), unexpected = json::array(), missing = json::array();
  for (const auto& g : r.found) found.push_back(goodness_json(G, g));
  for (const auto& [lambda, X] : r.predicted)
    predicted.push_back({{"theta_lambda", vec_json(G.D.vec(lambda))}, {"members", X.members}});
  for (const auto& g : r.unexpected) unexpected.push_back(goodness_json(G, g));
  for (const auto& g : r.missing) missing.push_back(goodness_json(G, g));
  d["good_sets"] = found;
  d["predicted"] = predicted;
  d["unexpected"] = unexpected;
  d["missing"] = missing;
  d["classification_holds"] = r.holds;
  d["quiver"] = to_json(q);
  return d;
}

json error_json(const Error& e) { return {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}; }

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace blockext
