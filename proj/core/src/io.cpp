#include "braidcx/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <regex>

namespace braidcx {

using nlohmann::json;

CoxeterMatrix group_from_name(std::string_view name) {
  static const std::regex dihedral(R"(I2[:(](\d+)\)?)");
  static const std::regex classical(R"(([A-H])(\d+))");
  const std::string s(name);
  std::smatch m;
  if (std::regex_match(s, m, dihedral)) return CoxeterMatrix::named("I2", std::stoi(m[1]));
  if (std::regex_match(s, m, classical)) {
    std::string family = m[1];
    if (family == "C") family = "B";
    return CoxeterMatrix::named(family, std::stoi(m[2]));
  }
  throw InputError("unknown group name '" + s + "'");
}

CoxeterMatrix group_from_json(const json& spec) {
  try {
    if (spec.contains("matrix")) return CoxeterMatrix(spec.at("matrix").get<std::vector<std::vector<int>>>());
    std::string type = spec.at("type").get<std::string>();
    if (type == "I2") return CoxeterMatrix::named("I2", spec.at("m").get<int>());
    if (type == "C") type = "B";
    return CoxeterMatrix::named(type, spec.at("rank").get<int>());
  } catch (const json::exception& e) {
    throw InputError(std::string("bad group specification: ") + e.what());
  }
}

CoxeterMatrix parse_group(std::string_view spec) {
  const std::filesystem::path path(spec);
  if (spec.ends_with(".json") || std::filesystem::is_regular_file(path)) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InputError(path.string() + ": " + e.what());
    }
    return group_from_json(j);
  }
  return group_from_name(spec);
}

GroupElement parse_element(const CoxeterSystem& sys, std::string_view text) {
  if (text == "w0" || text == "w_o") return longest_element(sys);
  const Word w = Word::parse(text);
  sys.check_word(w);
  return element_of(sys, w);
}

json to_json(const HPoly& h) { return h.coefficients(); }
json to_json(const GammaPoly& g) { return g.coefficients(); }

json complex_json(const LabeledComplex& x, bool spherical) {
  json out;
  std::vector<std::string> names;
  for (const auto& v : x.vertices()) names.push_back(v.str());
  json facets = json::array();
  for (FaceMask f : x.facet_masks()) {
    std::vector<int> idx;
    for (std::size_t k = 0; k < x.vertices().size(); ++k)
      if (f >> k & 1) idx.push_back(static_cast<int>(k));
    facets.push_back(idx);
  }
  out["void"] = x.is_void();
  out["vertices"] = names;
  out["facets"] = facets;
  out["f"] = f_vector(x);
  out["h"] = x.is_void() ? json(nullptr) : json(h_vector(x));
  out["spherical"] = spherical;
  out["gamma"] = spherical && !x.is_void() ? to_json(gamma(x)) : json(nullptr);
  out["flag"] = is_flag(x);
  return out;
}

json to_json(const CaseReport& r) {
  json out;
  out["case"] = static_cast<int>(r.kind);
  out["case_name"] = to_string(r.kind);
  out["m"] = r.m;
  out["A2"] = r.A2;
  out["B2"] = r.B2;
  out["A3"] = r.A3 ? json(*r.A3) : json(nullptr);
  out["B3"] = r.B3 ? json(*r.B3) : json(nullptr);
  out["left"] = complex_json(r.left, r.left_spherical);
  out["right"] = complex_json(r.right, r.right_spherical);
  out["common"] = r.common ? complex_json(*r.common, r.left_spherical && r.right_spherical) : json(nullptr);
  json witness;
  witness["relation"] = r.witness;
  witness["verified"] = r.witness_verified;
  witness["literal"] = r.literal;
  std::vector<std::string> fresh;
  for (const auto& v : r.fresh) fresh.push_back(v.str());
  witness["fresh"] = fresh;
  json bijection = json::object();
  for (const auto& [from, to] : r.bijection) bijection[from.str()] = to.str();
  witness["bijection"] = bijection;
  out["witness"] = witness;
  out["decomposition"] = {{"ok", r.decomposition.ok}, {"failures", r.decomposition.failures}};
  if (r.delta) {
    out["deltaH"] = {{"lhs", to_json(r.delta->h_lhs)}, {"rhs", to_json(r.delta->h_rhs)}, {"equal", r.delta->h_identity}};
    if (r.delta->gamma_lhs)
      out["deltaGamma"] = {{"lhs", to_json(*r.delta->gamma_lhs)},
                           {"rhs", to_json(*r.delta->gamma_rhs)},
                           {"equal", r.delta->gamma_identity}};
    else
      out["deltaGamma"] = nullptr;
  } else {
    out["deltaH"] = nullptr;
    out["deltaGamma"] = nullptr;
  }
  out["verified"] = r.verified();
  return out;
}

json to_json(const SequenceStep& s) {
  return {{"before", s.before.str()}, {"after", s.after.str()}, {"pos", s.pos}, {"report", to_json(s.report)}};
}

json to_json(const RhoPoset& p, const std::optional<SemilatticeReport>& semilattice) {
  json out;
  out["Q"] = p.prefix.str();
  out["Qprime"] = p.suffix.str();
  std::vector<std::string> words;
  for (const auto& w : p.words) words.push_back(w.str());
  out["words"] = words;
  json moves = json::array();
  for (const auto& m : p.moves)
    moves.push_back({{"a", m.a},
                     {"b", m.b},
                     {"pos", m.pos},
                     {"forward", static_cast<int>(m.forward)},
                     {"backward", static_cast<int>(m.backward)},
                     {"verified", m.verified},
                     {"mirror_consistent", m.mirror_consistent},
                     {"witness", m.witness}});
  out["moves"] = moves;
  json edges = json::array();
  for (const auto& e : p.edges)
    edges.push_back({{"coarser", e.coarser}, {"finer", e.finer}, {"move", e.move}, {"case", static_cast<int>(e.kind)}});
  out["edges"] = edges;
  out["classes"] = p.classes;
  out["antisymmetric"] = p.antisymmetric;
  out["antisymmetry_violations"] = p.antisymmetry_violations;
  out["unverified_moves"] = p.unverified_moves();
  out["global_check"] = p.global_check;
  json gaps = json::array();
  for (const auto& g : p.gaps) gaps.push_back({{"a", g.a}, {"b", g.b}, {"relation", g.relation}});
  out["gaps"] = gaps;
  const FinitePoset q = p.quotient();
  json hasse = json::array();
  if (q.is_antisymmetric())
    for (const auto& [a, b] : hasse_edges(q)) hasse.push_back({a, b});
  out["hasse"] = hasse;
  if (semilattice) {
    const auto cert = [](const std::optional<BoundCertificate>& c) -> json {
      if (!c) return nullptr;
      return {{"a", c->a}, {"b", c->b}, {"extremal_bounds", c->extremal_bounds}};
    };
    out["semilattice"] = {{"meet", semilattice->meet},
                          {"join", semilattice->join},
                          {"meet_failure", cert(semilattice->meet_failure)},
                          {"join_failure", cert(semilattice->join_failure)}};
  } else {
    out["semilattice"] = nullptr;
  }
  return out;
}

}  // namespace braidcx
