#pragma once

#include <json.hpp>

#include <string>

#include "fibtype/classify.hpp"
#include "fibtype/embedding.hpp"
#include "fibtype/face_pairing.hpp"
#include "fibtype/graph.hpp"
#include "fibtype/planarity.hpp"
#include "fibtype/smith.hpp"
#include "fibtype/word.hpp"

namespace fibtype {

// All emitters use ordered maps and fixed iteration orders so that identical
// inputs produce byte-identical output.
using json = nlohmann::ordered_json;

inline json to_json(const FibTypeParams& p) {
  return json{{"n", p.n}, {"m", p.m}, {"k", p.k}};
}

inline json to_json(const AbelianInvariants& a) {
  json t = json::array();
  for (const auto& d : a.torsion) t.push_back(d.get_str());
  return json{{"torsion", t},
              {"free_rank", a.free_rank},
              {"order", a.is_finite() ? a.order().get_str() : "infinite"}};
}

inline json to_json(const LabeledMultigraph& g) {
  json vs = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(g.tag(v).str());
  json es = json::array();
  for (const auto& e : g.edges())
    es.push_back(json{{"a", g.tag(e.a).str()},
                      {"b", g.tag(e.b).str()},
                      {"relator", e.provenance.relator},
                      {"position", e.provenance.position}});
  return json{{"vertices", vs}, {"edges", es}};
}

inline std::string to_dot(const LabeledMultigraph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out += "  \"" + g.tag(v).str() + "\";\n";
  for (const auto& e : g.edges())
    out += "  \"" + g.tag(e.a).str() + "\" -- \"" + g.tag(e.b).str() +
           "\" [label=\"r" + std::to_string(e.provenance.relator) + "\"];\n";
  out += "}\n";
  return out;
}

inline json to_json(const SphericalEmbedding& e) {
  json rot = json::array();
  for (const auto& r : e.rotation) rot.push_back(r);
  json faces = json::array();
  for (const auto& f : e.faces) faces.push_back(f);
  return json{{"rotation", rot}, {"faces", faces}, {"face_sizes", e.face_sizes()}};
}

inline json to_json(const EmbeddingCensus& c) {
  json es = json::array();
  for (const auto& e : c.embeddings) es.push_back(to_json(e));
  json profiles = json::array();
  for (const auto& p : c.face_size_profiles()) profiles.push_back(p);
  return json{{"rotation_systems", c.rotation_systems},
              {"budget_exhausted", c.budget_exhausted},
              {"face_size_profiles", profiles},
              {"embeddings", es}};
}

inline json to_json(const KuratowskiWitness& w) {
  json bs = json::array();
  for (const auto& b : w.branch_vertices) bs.push_back(b.str());
  json ps = json::array();
  for (const auto& path : w.paths) {
    json pj = json::array();
    for (const auto& v : path) pj.push_back(v.str());
    ps.push_back(pj);
  }
  return json{{"kind", w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K33"},
              {"branch_vertices", bs},
              {"paths", ps}};
}

inline json to_json(const FacePairingComplex& c) {
  json vs = json::array();
  for (const auto& v : c.vertex_names) vs.push_back(v);
  json es = json::array();
  for (const auto& e : c.edges)
    es.push_back(json{{"tail", c.vertex_names[static_cast<std::size_t>(e.tail)]},
                      {"head", c.vertex_names[static_cast<std::size_t>(e.head)]},
                      {"label", e.label},
                      {"name", e.name}});
  auto walk_json = [&](const std::vector<FacePairingComplex::Step>& w) {
    json out = json::array();
    for (const auto& s : w)
      out.push_back(json{{"edge", c.edges[static_cast<std::size_t>(s.edge)].name},
                         {"forward", s.forward}});
    return out;
  };
  json ps = json::array();
  for (const auto& pr : c.pairs)
    ps.push_back(json{{"plus", walk_json(pr.plus)}, {"minus", walk_json(pr.minus)}});
  json rs = json::array();
  for (const auto& r : c.relators) rs.push_back(format_word(r));
  return json{{"n", c.n}, {"vertices", vs}, {"edges", es}, {"pairs", ps},
              {"relators", rs}};
}

inline json to_json(const SpineCheck& s) {
  return json{{"valid", s.valid},
              {"vertex_orbits", s.vertex_orbits},
              {"edge_orbits", s.edge_orbits},
              {"face_count", s.face_count},
              {"quotient_euler", s.quotient_euler},
              {"diagnostics", s.diagnostics}};
}

inline json to_json(const Verdict& v) {
  json group{{"answer", to_string(v.group_answer)}};
  if (v.group_answer == Verdict::Answer::Yes) {
    group["structure"] = v.group_structure;
    if (v.known_order > 0) group["order"] = v.known_order.get_str();
  }
  json spine{{"answer", to_string(v.spine_answer)}};
  if (v.spine_answer == Verdict::Answer::Yes) spine["family"] = v.spine_family;
  json just = json::array();
  for (const auto& j : v.justification)
    just.push_back(json{{"rule", j.rule}, {"note", j.note}});
  json out{{"params", to_json(v.params)},
           {"normal_form", v.normal_form},
           {"group_status", group},
           {"spine_status", spine},
           {"justification", just}};
  if (!v.factors.empty()) {
    json fs = json::array();
    for (const auto& f : v.factors) fs.push_back(to_json(f));
    out["factors"] = fs;
  }
  return out;
}

inline json to_json(const CrossCheckReport& r) {
  return json{{"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}};
}

}  // namespace fibtype
