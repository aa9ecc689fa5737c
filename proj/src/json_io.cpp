#include "surfalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace surfalg {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::BadInput, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Err::BadInput, "json parse error in '" + path + "': " + e.what());
  }
  return j;
}

static void check_schema(const Json& j) {
  if (j.contains("schema") && j["schema"] != kSchema)
    throw Error(Err::BadInput, "unsupported schema '" + j["schema"].dump() + "'");
}

// scalar that may arrive as a json string or integer
static std::string as_value_str(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw Error(Err::BadInput, std::string(what) + " must be a string or integer");
}

static std::string req_str(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error(Err::BadInput, std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

static std::vector<WeightTemplateEntry> parse_weight_template(const Json& j) {
  std::vector<WeightTemplateEntry> out;
  if (!j.contains("weights")) return out;
  if (!j["weights"].is_array()) throw Error(Err::BadInput, "'weights' must be an array");
  for (auto& e : j["weights"]) {
    WeightTemplateEntry w;
    w.rep = req_str(e, "rep");
    w.m = e.contains("m") ? as_value_str(e["m"], "m") : "1";
    w.c = e.contains("c") ? as_value_str(e["c"], "c") : "1";
    out.push_back(std::move(w));
  }
  return out;
}

InputDoc parse_input_doc(const Json& j) {
  if (!j.is_object()) throw Error(Err::BadInput, "input document must be a json object");
  check_schema(j);
  InputDoc doc;
  doc.weights = parse_weight_template(j);
  if (j.contains("edges")) {
    doc.is_surface = true;
    for (auto& e : j["edges"]) doc.surface.edges.push_back(as_value_str(e, "edge id"));
    if (!j.contains("triangles") || !j["triangles"].is_array())
      throw Error(Err::BadInput, "surface document needs a 'triangles' array");
    for (auto& t : j["triangles"]) {
      if (!t.is_array() || t.size() != 3)
        throw Error(Err::BadInput, "each triangle must be a triple of edge ids");
      doc.surface.triangles.push_back({as_value_str(t[0], "edge id"),
                                       as_value_str(t[1], "edge id"),
                                       as_value_str(t[2], "edge id")});
    }
    if (j.contains("boundary"))
      for (auto& e : j["boundary"]) doc.surface.boundary.push_back(as_value_str(e, "edge id"));
    return doc;
  }
  if (j.contains("vertices")) {
    for (auto& v : j["vertices"]) doc.quiver.add_vertex(as_value_str(v, "vertex id"));
    doc.quiver.finish();
    if (!j.contains("arrows") || !j["arrows"].is_array())
      throw Error(Err::BadInput, "quiver document needs an 'arrows' array");
    for (auto& a : j["arrows"]) {
      std::string id = req_str(a, "id");
      int s = doc.quiver.vindex(as_value_str(a.at("source"), "source"));
      int t = doc.quiver.vindex(as_value_str(a.at("target"), "target"));
      if (s < 0 || t < 0)
        throw Error(Err::BadInput, "arrow '" + id + "' references an unknown vertex");
      doc.quiver.add_arrow(id, s, t);
    }
    if (!j.contains("f") || !j["f"].is_object())
      throw Error(Err::BadInput, "quiver document needs an 'f' object");
    for (auto& [k, v] : j["f"].items())
      doc.f_pairs.emplace_back(k, as_value_str(v, "f value"));
    return doc;
  }
  throw Error(Err::BadInput, "input document is neither a surface nor a quiver");
}

TriangulationQuiver doc_quiver(const InputDoc& doc) {
  if (doc.is_surface) {
    validate_surface(doc.surface);
    return quiver_from_surface(doc.surface);
  }
  return validate_triangulation_quiver(doc.quiver, doc.f_pairs);
}

Json surface_doc_json(const Surface& s, const std::vector<WeightTemplateEntry>& weights) {
  Json j;
  j["schema"] = kSchema;
  j["edges"] = s.edges;
  Json tris = Json::array();
  for (auto& t : s.triangles) tris.push_back({t[0], t[1], t[2]});
  j["triangles"] = tris;
  j["boundary"] = s.boundary;
  if (!weights.empty()) {
    Json ws = Json::array();
    for (auto& w : weights) ws.push_back({{"rep", w.rep}, {"m", w.m}, {"c", w.c}});
    j["weights"] = ws;
  }
  return j;
}

static Json quiver_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (auto& a : q.arrows)
    arrows.push_back({{"id", a.id}, {"source", q.vertices[a.src]}, {"target", q.vertices[a.tgt]}});
  j["arrows"] = arrows;
  return j;
}

Json validation_summary_json(const TriangulationQuiver& tq) {
  Json j;
  j["schema"] = kSchema;
  j["valid"] = true;
  j["vertices"] = (long)tq.q.vertices.size();
  j["arrows"] = (long)tq.q.arrows.size();
  Json fo = Json::array(), go = Json::array();
  for (auto& orb : tq.f_orbits) {
    Json o = Json::array();
    for (int a : orb) o.push_back(tq.q.arrows[a].id);
    fo.push_back(o);
  }
  for (auto& orb : tq.g_orbits) {
    Json o = Json::array();
    for (int a : orb) o.push_back(tq.q.arrows[a].id);
    go.push_back(o);
  }
  j["f_orbits"] = fo;
  j["g_orbits"] = go;
  return j;
}

static Json path_json(const Quiver& q, const Path& p) {
  Json out = Json::array();
  for (int a : p.arrows) out.push_back(q.arrows[a].id);
  return out;
}

Json algebra_to_json(const PresentedAlgebra& alg) {
  const Quiver& q = alg.q;
  Json j = quiver_json(q);
  Json full;
  full["schema"] = kSchema;
  full["vertices"] = j["vertices"];
  full["arrows"] = j["arrows"];
  full["dimension"] = alg.dimension;
  full["cartan"] = alg.cartan;
  Json basis = Json::object();
  for (int i = 0; i < (int)q.vertices.size(); ++i)
    for (int k = 0; k < (int)q.vertices.size(); ++k) {
      if (alg.basis[i][k].empty()) continue;
      Json cell = Json::array();
      for (auto& p : alg.basis[i][k]) cell.push_back(path_json(q, p));
      basis[q.vertices[i] + "->" + q.vertices[k]] = cell;
    }
  full["basis"] = basis;
  Json rels = Json::array();
  for (auto& r : alg.relations) {
    Json terms = Json::array();
    for (auto& t : r)
      terms.push_back({{"coef", rat_str(t.coef)}, {"path", path_json(q, t.path)}});
    rels.push_back(terms);
  }
  full["relations"] = rels;
  return full;
}

AlgebraDoc parse_algebra_doc(const Json& j) {
  if (!j.is_object()) throw Error(Err::BadInput, "algebra document must be a json object");
  check_schema(j);
  AlgebraDoc doc;
  for (auto& v : j.at("vertices")) doc.q.add_vertex(as_value_str(v, "vertex id"));
  doc.q.finish();
  for (auto& a : j.at("arrows")) {
    std::string id = req_str(a, "id");
    int s = doc.q.vindex(as_value_str(a.at("source"), "source"));
    int t = doc.q.vindex(as_value_str(a.at("target"), "target"));
    if (s < 0 || t < 0)
      throw Error(Err::BadInput, "arrow '" + id + "' references an unknown vertex");
    doc.q.add_arrow(id, s, t);
  }
  doc.q.finish();
  for (auto& r : j.at("relations")) {
    Relation rel;
    for (auto& t : r) {
      RelTerm term;
      term.coef = rat_parse(as_value_str(t.at("coef"), "coef"));
      const Json& pj = t.at("path");
      if (pj.empty()) throw Error(Err::BadInput, "relation paths must be nonempty");
      Path p;
      for (auto& aid : pj) {
        int a = doc.q.aindex(as_value_str(aid, "arrow id"));
        if (a < 0) throw Error(Err::UnknownArrow, "relation arrow '" + aid.dump() + "'");
        if (p.src < 0)
          p.src = doc.q.arrows[a].src;
        else if (doc.q.arrows[a].src != doc.q.arrows[p.arrows.back()].tgt)
          throw Error(Err::BadInput, "relation path is not composable");
        p.arrows.push_back(a);
      }
      term.path = p;
      rel.push_back(std::move(term));
    }
    doc.relations.push_back(std::move(rel));
  }
  doc.dimension = j.at("dimension").get<long>();
  for (auto& row : j.at("cartan")) {
    std::vector<long> r;
    for (auto& v : row) r.push_back(v.get<long>());
    doc.cartan.push_back(std::move(r));
  }
  if (j.contains("basis"))
    for (auto& [key, cell] : j["basis"].items()) doc.basis_counts[key] = (long)cell.size();
  return doc;
}

Json star_to_json(const MutationData& md, const RelationAudit& audit) {
  const Quiver& q = md.qx;
  Json j;
  j["schema"] = kSchema;
  Json qj = quiver_json(q);
  j["quiver"] = {{"vertices", qj["vertices"]}, {"arrows", qj["arrows"]}};
  Json removed = Json::array(), star_arrows = Json::array(), fs = Json::object(),
       gs = Json::object();
  for (int v = 0; v < (int)q.vertices.size(); ++v)
    if (!md.star_vertex[v]) removed.push_back(q.vertices[v]);
  for (int h = 0; h < (int)q.arrows.size(); ++h) {
    if (!md.in_star[h]) continue;
    star_arrows.push_back(q.arrows[h].id);
    fs[q.arrows[h].id] = q.arrows[md.f_star[h]].id;
    gs[q.arrows[h].id] = q.arrows[md.g_star[h]].id;
  }
  j["removed_vertices"] = removed;
  j["star_arrows"] = star_arrows;
  j["f_star"] = fs;
  j["g_star"] = gs;
  Json orbits = Json::array();
  for (int o = 0; o < (int)md.gs_orbits.size(); ++o) {
    Json arr = Json::array();
    for (int h : md.gs_orbits[o]) arr.push_back(q.arrows[h].id);
    orbits.push_back({{"arrows", arr},
                      {"m", md.m_star[o]},
                      {"c", rat_str(md.c_star[o])},
                      {"n_nu", md.n_nu[o]}});
  }
  j["g_star_orbits"] = orbits;
  j["zero_relation_audit"] = {
      {"triple_emitted", audit.triple_emitted},
      {"triple_suppressed", audit.triple_suppressed},
      {"cycle_emitted", audit.cycle_emitted},
      {"cycle_suppressed", audit.cycle_suppressed}};
  return j;
}

std::string cartan_text(const std::vector<std::vector<long>>& cartan) {
  size_t width = 1;
  for (auto& row : cartan)
    for (long v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  for (auto& row : cartan) {
    os << " ";
    for (size_t k = 0; k < row.size(); ++k) {
      std::string s = std::to_string(row[k]);
      os << std::string(width - s.size() + (k ? 2 : 0), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string algebra_text(const PresentedAlgebra& alg) {
  std::ostringstream os;
  os << "dimension " << alg.dimension << "\n";
  os << "cartan\n" << cartan_text(alg.cartan);
  os << "relations\n";
  for (auto& r : alg.relations) {
    os << "  ";
    for (size_t t = 0; t < r.size(); ++t) {
      const Rat& c = r[t].coef;
      if (t == 0) {
        if (c != 1) os << (c == -1 ? std::string("-") : rat_str(c) + " ");
      } else {
        os << (c < 0 ? " - " : " + ");
        Rat a = abs(c);
        if (a != 1) os << rat_str(a) + " ";
      }
      std::string ps = path_str(alg.q, r[t].path);
      for (auto& ch : ps)
        if (ch == ' ') ch = '.';
      os << ps;
    }
    os << " = 0\n";
  }
  return os.str();
}

}  // namespace surfalg
